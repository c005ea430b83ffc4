#include <catch_amalgamated.hpp>

#include "arex/efffun.hpp"
#include "arex/sampling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arex;
using namespace arex::testing;

namespace {

std::size_t at(const IndecRegistry& reg, const ModuleRep& m) {
  const auto i = reg.find(m);
  REQUIRE(i);
  return *i;
}

Conflation simple_projective_quotient(const Algebra& a) {
  const ModMorphism inc = hom_basis(a, interval(a, 3, 3), interval(a, 1, 3)).front();
  return Conflation{inc, cokernel_of(a, inc).projection};
}

Eigen::Index rank_of(const PrimeField& f, const FpMatrix& m) { return m.size() == 0 ? 0 : rank(f, m); }

}  // namespace

TEST_CASE("evaluation on kA_2", "[efffun]") {
  const Algebra a = linear_a(2);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const std::size_t s1 = at(reg, interval(a, 1, 1)), p1 = at(reg, interval(a, 1, 2)), p2 = at(reg, interval(a, 2, 2));
  const EffPresentation m(reg, reg.ar_sequence(s1));
  CHECK(evaluate(m, s1).k_dimension() == 1);
  CHECK(evaluate(m, p1).k_dimension() == 0);
  CHECK(evaluate(m, p2).k_dimension() == 0);
  CHECK(support(m) == std::vector<std::size_t>{s1});
  const MultiplicityVector mv = multiplicities(m);
  CHECK(mv.mults[s1] == 1);
  CHECK(mv.length() == 1);
}

TEST_CASE("split conflations give the zero functor", "[efffun]") {
  const Algebra a = linear_a(3);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const Conflation c = split_conflation(a, interval(a, 1, 2), interval(a, 2, 3));
  const EffPresentation m(reg, c);
  CHECK(support(m).empty());
  CHECK(multiplicities(m).length() == 0);
  CHECK(decompose_into_ar(reg, c).length() == 0);
}

TEST_CASE("kA_3 length-two functor", "[efffun]") {
  const Algebra a = linear_a(3);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const Conflation c = simple_projective_quotient(a);
  const EffPresentation m(reg, c);
  const std::size_t i12 = at(reg, interval(a, 1, 2)), i22 = at(reg, interval(a, 2, 2));
  CHECK(support(m) == std::vector<std::size_t>{std::min(i12, i22), std::max(i12, i22)});
  const MultiplicityVector mv = decompose_into_ar(reg, c);
  CHECK(mv.mults[i12] == 1);
  CHECK(mv.mults[i22] == 1);
  CHECK(mv.length() == 2);
  CHECK(composition_length(m) == 2);
}

TEST_CASE("AR conflations decompose as themselves", "[efffun]") {
  for (const Algebra& a : {linear_a(3), truncated_loop(3)}) {
    const IndecRegistry reg = enumerate_indecomposables(a, 10);
    for (std::size_t z = 0; z < reg.size(); ++z) {
      if (reg.is_projective(z)) continue;
      const MultiplicityVector mv = decompose_into_ar(reg, reg.ar_sequence(z));
      CHECK(mv.mults[z] == 1);
      CHECK(mv.length() == 1);
    }
  }
}

TEST_CASE("effacement witnesses", "[efffun]") {
  {
    const Algebra a = linear_a(2);
    const IndecRegistry reg = enumerate_indecomposables(a, 10);
    const std::size_t s1 = at(reg, interval(a, 1, 1));
    const EffPresentation m(reg, reg.ar_sequence(s1));
    const EffacementWitness w = effacement_witness(m, s1, FpVector::Ones(1));
    CHECK(w.verified);
    CHECK(is_iso(a, w.pulled_back.conflation.y(), interval(a, 1, 2)).has_value());
  }
  {
    const Algebra b = truncated_loop(2);
    const IndecRegistry reg = enumerate_indecomposables(b, 10);
    const std::size_t k = at(reg, jordan(1));
    const EffPresentation m(reg, reg.ar_sequence(k));
    const EffacementWitness w = effacement_witness(m, k, FpVector::Ones(1));
    CHECK(w.verified);
    CHECK(is_iso(b, w.pulled_back.conflation.y(), jordan(2)).has_value());
  }
}

TEST_CASE("ker_im_coker of identity and zero triples", "[efffun]") {
  const Algebra a = linear_a(3);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const Conflation c = simple_projective_quotient(a);
  const EffPresentation m(reg, c);
  const KerImCoker id = ker_im_coker(m, m, {identity_morphism(c.x()), identity_morphism(c.y()), identity_morphism(c.z())});
  const KerImCoker zero = ker_im_coker(
      m, m, {zero_morphism(c.x(), c.x()), zero_morphism(c.y(), c.y()), zero_morphism(c.z(), c.z())});
  for (std::size_t w = 0; w < reg.size(); ++w) {
    const Eigen::Index d = m.value(w).k_dimension();
    CHECK(id.kernel.value(w).k_dimension() == 0);
    CHECK(id.image.value(w).k_dimension() == d);
    CHECK(id.cokernel.value(w).k_dimension() == 0);
    CHECK(zero.kernel.value(w).k_dimension() == d);
    CHECK(zero.image.value(w).k_dimension() == 0);
    CHECK(zero.cokernel.value(w).k_dimension() == d);
  }
  ModMorphism bad = identity_morphism(c.y());
  bad.blocks[0] = FpMatrix::Zero(bad.blocks[0].rows(), bad.blocks[0].cols());
  CHECK_THROWS_AS(ker_im_coker(m, m, {identity_morphism(c.x()), bad, identity_morphism(c.z())}), Error);
}

TEST_CASE("ker_im_coker of the top quotient", "[efffun]") {
  const Algebra a = linear_a(3);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const Conflation c1 = simple_projective_quotient(a);
  const std::size_t i12 = at(reg, interval(a, 1, 2)), i22 = at(reg, interval(a, 2, 2));
  const Conflation& c2 = reg.ar_sequence(i12);
  const auto iso = is_iso(a, c1.z(), c2.z());
  REQUIRE(iso);
  const auto t = lift_to_triple(a, c1, c2, *iso);
  REQUIRE(t);
  const EffPresentation m1(reg, c1), m2(reg, c2);
  const KerImCoker r = ker_im_coker(m1, m2, *t);
  CHECK(support(r.kernel) == std::vector<std::size_t>{i22});
  CHECK(multiplicities(r.kernel).length() == 1);
  CHECK(support(r.cokernel).empty());
  CHECK(support(r.image) == std::vector<std::size_t>{i12});
}

TEST_CASE("ker_im_coker matches the induced pointwise maps", "[efffun][property]") {
  const Algebra a = linear_a(3);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const PrimeField& f = a.field();
  ConflationSampler sampler(reg, 3, 9);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const EffPresentation m1(reg, sampler.next()), m2(reg, sampler.next());
    const ConflationMorphism t = random_triple(a, m1.presenting(), m2.presenting(), rng);
    const KerImCoker r = ker_im_coker(m1, m2, t);
    for (std::size_t w = 0; w < reg.size(); ++w) {
      const FpMatrix phi = induced_map(m1, m2, t.c, w);
      const Eigen::Index rk = rank_of(f, phi);
      CHECK(r.kernel.value(w).k_dimension() == phi.cols() - rk);
      CHECK(r.image.value(w).k_dimension() == rk);
      CHECK(r.cokernel.value(w).k_dimension() == phi.rows() - rk);
    }
  }
}

TEST_CASE("admissibility reports", "[efffun]") {
  CHECK(check_admissible(enumerate_indecomposables(linear_a(3), 10)).max_length >= 2);
  const AdmissibilityReport s = check_admissible(enumerate_indecomposables(semisimple(2), 10));
  CHECK(s.admissible);
  CHECK(s.max_length == 0);
  const AdmissibilityReport k = check_admissible(enumerate_indecomposables(truncated_loop(2), 10));
  CHECK(k.admissible);
  CHECK(k.max_length == 1);
}

TEST_CASE("CF pairs", "[efffun]") {
  const Algebra a = linear_a(3);
  const IndecRegistry reg = enumerate_indecomposables(a, 10);
  const Conflation c = simple_projective_quotient(a);
  const CFVerdict same = check_cf_pair(reg, c, c);
  CHECK(same.supports_equal);
  CHECK(same.lengths_equal);
  const CFVerdict padded = check_cf_pair(reg, pad_with_split(a, c, interval(a, 2, 2), interval(a, 1, 1)),
                                         pad_with_split(a, c, interval(a, 1, 3), interval(a, 2, 3)));
  CHECK(padded.supports_equal);
  CHECK(padded.lengths_equal);
  CHECK_THROWS_AS(check_cf_pair(reg, c, reg.ar_sequence(at(reg, interval(a, 1, 1)))), Error);

  const ExtGroup e = ext1(a, interval(a, 1, 2), interval(a, 3, 3));
  REQUIRE(e.dim() == 1);
  FpVector other = e.classes.col(0);
  if (e.coboundaries.cols() > 0) other = a.field().reduce(other + e.coboundaries.col(0));
  const CFVerdict reps = check_cf_pair(reg, realize_extension(a, e, e.classes.col(0)), realize_extension(a, e, other));
  CHECK(reps.supports_equal);
  CHECK(reps.lengths_equal);
}

TEST_CASE("random conflations satisfy the decomposition identity", "[efffun][property]") {
  for (const Algebra& a : {linear_a(3), truncated_loop(3)}) {
    const IndecRegistry reg = enumerate_indecomposables(a, 10);
    ConflationSampler sampler(reg, 29);
    for (int t = 0; t < 30; ++t) {
      const Conflation c = sampler.next();
      const EffPresentation m(reg, c);
      const MultiplicityVector mv = decompose_into_ar(reg, c);
      CHECK(mv.length() == composition_length(m));
      for (std::size_t w = 0; w < reg.size(); ++w)
        if (reg.is_projective(w)) CHECK(m.value(w).k_dimension() == 0);
    }
  }
}

TEST_CASE("length is additive", "[efffun][property]") {
  const IndecRegistry reg = enumerate_indecomposables(linear_a(3), 10);
  ConflationSampler sampler(reg, 8, 8);
  for (int t = 0; t < 15; ++t) {
    const Conflation c1 = sampler.next(), c2 = sampler.next();
    CHECK(multiplicities(EffPresentation(reg, direct_sum(c1, c2))).length() ==
          multiplicities(EffPresentation(reg, c1)).length() + multiplicities(EffPresentation(reg, c2)).length());
  }
}
