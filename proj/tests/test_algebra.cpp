#include <catch_amalgamated.hpp>

#include <algorithm>

#include "arex/algebra.hpp"
#include "fixtures.hpp"

using namespace arex;
using namespace arex::testing;

namespace {

// Hom([i,j],[k,l]) over linearly oriented A_n is k iff k <= i <= l <= j.
Eigen::Index interval_hom(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return (k <= i && i <= l && l <= j) ? 1 : 0;
}

}  // namespace

TEST_CASE("path bases", "[algebra]") {
  CHECK(linear_a(2).dimension() == 3);
  CHECK(linear_a(4).dimension() == 10);
  CHECK(truncated_loop(2).dimension() == 2);
  CHECK(truncated_loop(3).dimension() == 3);
  CHECK(semisimple(3).dimension() == 3);

  QuiverPresentation loop;
  loop.vertices = {"1"};
  loop.arrows = {{"x", 0, 0}};
  try {
    build_algebra(loop);
    FAIL("expected NonAdmissible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonAdmissible);
  }

  QuiverPresentation cyc;
  cyc.vertices = {"1", "2"};
  cyc.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  cyc.relations = {{"a", "b"}};
  CHECK(build_algebra(cyc).dimension() == 5);  // e1, e2, a, b, ba
  cyc.relations = {{"a", "b"}, {"b", "a"}};
  CHECK(build_algebra(cyc).dimension() == 4);

  QuiverPresentation two_loops;
  two_loops.vertices = {"1"};
  two_loops.arrows = {{"x", 0, 0}, {"y", 0, 0}};
  two_loops.relations = {{"x", "x"}};
  CHECK_THROWS_AS(build_algebra(two_loops), Error);

  QuiverPresentation bad = loop;
  bad.relations = {{"x", "y"}};
  CHECK_THROWS_AS(build_algebra(bad), Error);
  CHECK_THROWS_AS(build_algebra(linear_a(2).presentation(), 2), Error);
}

TEST_CASE("opposite algebra", "[algebra]") {
  const Algebra a = linear_a(3);
  const Algebra op = a.opposite();
  CHECK(op.arrow(0).source == 1);
  CHECK(op.arrow(0).target == 0);
  CHECK(op.paths_between(2, 0).size() == 1);
  CHECK(op.opposite().arrow(0).source == 0);
}

TEST_CASE("module validation", "[algebra]") {
  const Algebra a = truncated_loop(2);
  validate_module(a, jordan(2));
  CHECK_THROWS_AS(validate_module(a, jordan(3)), Error);
  ModuleRep wrong = jordan(2);
  wrong.action[0] = FpMatrix::Zero(1, 2);
  CHECK_THROWS_AS(validate_module(a, wrong), Error);
}

TEST_CASE("hom dimensions between interval modules", "[algebra]") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const Algebra a = linear_a(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j)
        for (std::size_t k = 1; k <= n; ++k)
          for (std::size_t l = k; l <= n; ++l) {
            const HomSpace h = hom_space(a, interval(a, i, j), interval(a, k, l));
            CHECK(h.dim() == interval_hom(i, j, k, l));
            for (const ModMorphism& g : hom_basis(a, interval(a, i, j), interval(a, k, l)))
              CHECK(is_morphism(a, g));
          }
  }
}

TEST_CASE("hom dimensions over truncated polynomials", "[algebra]") {
  for (std::size_t n : {2u, 3u}) {
    const Algebra a = truncated_loop(n);
    for (std::size_t r = 1; r <= n; ++r)
      for (std::size_t s = 1; s <= n; ++s)
        CHECK(hom_space(a, jordan(r), jordan(s)).dim() == static_cast<Eigen::Index>(std::min(r, s)));
  }
}

TEST_CASE("kernels, cokernels and images", "[algebra]") {
  const Algebra a = linear_a(3);
  const ModuleRep p1 = interval(a, 1, 3), s1 = interval(a, 1, 1);
  const ModMorphism g = hom_basis(a, p1, s1).at(0);
  const Subobject k = kernel_of(a, g);
  CHECK(k.module.dims == std::vector<Eigen::Index>{0, 1, 1});
  CHECK(is_morphism(a, k.inclusion));
  const Quotient q = cokernel_of(a, k.inclusion);
  CHECK(q.module.dims == s1.dims);
  CHECK(is_morphism(a, q.projection));
  CHECK(image_of(a, g).module.dims == s1.dims);

  CHECK(radical_spans(a, p1)[0].cols() == 0);
  const auto soc = socle_spans(a, p1);
  CHECK(soc[2].cols() == 1);
  CHECK(soc[0].cols() == 0);
}

TEST_CASE("morphism algebra", "[algebra]") {
  const Algebra a = truncated_loop(3);
  const PrimeField& f = a.field();
  const ModuleRep m = jordan(3);
  const HomSpace e = hom_space(a, m, m);
  for (Eigen::Index i = 0; i < e.dim(); ++i)
    for (Eigen::Index j = 0; j < e.dim(); ++j) CHECK(is_morphism(a, compose(f, e.basis_element(i), e.basis_element(j))));
  const ModMorphism id = identity_morphism(m);
  CHECK(is_isomorphism(f, id));
  CHECK(is_zero(add(f, id, id)));
  CHECK(unflatten(m, m, flatten(id)).blocks == id.blocks);
  CHECK(is_morphism(a, direct_sum(id, zero_morphism(jordan(1), jordan(2)))));
}

TEST_CASE("duality", "[algebra]") {
  const Algebra a = linear_a(3);
  const ModuleRep m = interval(a, 1, 2);
  const ModuleRep d = dual(m);
  validate_module(a.opposite(), d);
  CHECK(dual(d) == m);
  CHECK(dimension_vector_string(m) == "(1,1,0)");
}
