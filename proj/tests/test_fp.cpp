#include <catch_amalgamated.hpp>

#include <random>

#include "arex/fp.hpp"

using namespace arex;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, const PrimeField& f, Eigen::Index r, Eigen::Index c) {
  std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
  FpMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("field arithmetic", "[fp]") {
  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(3, f.inv(3)) == 1);
  CHECK(f.pow(3, 6) == 1);
  CHECK(is_prime(2));
  CHECK(is_prime(10007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("kernel and rank agree", "[fp]") {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (int t = 0; t < 50; ++t) {
      const FpMatrix m = random_matrix(rng, f, 1 + t % 5, 1 + (t * 3) % 6);
      const FpMatrix k = kernel(f, m);
      CHECK(rank(f, m) + k.cols() == m.cols());
      if (k.cols() > 0) {
        CHECK((f.reduce(m * k).array() == 0).all());
        CHECK(rank(f, k) == k.cols());
      }
    }
  }
}

TEST_CASE("solve and inverse", "[fp]") {
  std::mt19937_64 rng(3);
  const PrimeField f(3);
  for (int t = 0; t < 50; ++t) {
    const FpMatrix a = random_matrix(rng, f, 4, 3);
    const FpMatrix x = random_matrix(rng, f, 3, 2);
    const FpMatrix b = f.reduce(a * x);
    const auto y = solve(f, a, b);
    REQUIRE(y);
    CHECK(f.reduce(a * *y) == b);
    const FpMatrix sq = random_matrix(rng, f, 3, 3);
    if (auto inv = inverse(f, sq)) CHECK(f.reduce(sq * *inv) == FpMatrix::Identity(3, 3));
    else CHECK(rank(f, sq) < 3);
  }
  CHECK_FALSE(solve(f, FpMatrix::Zero(2, 1), FpMatrix::Ones(2, 1)));
}

TEST_CASE("complements and intersections", "[fp]") {
  const PrimeField f(2);
  FpMatrix a(3, 1);
  a << 1, 1, 0;
  const FpMatrix c = complement_basis(f, a, 3);
  CHECK(c.cols() == 2);
  CHECK(rank(f, hstack(a, c)) == 3);
  FpMatrix b(3, 2);
  b << 1, 0, 0, 1, 0, 0;
  const FpMatrix i = intersect(f, a, b);
  CHECK(i.cols() == 1);
  CHECK(in_span(f, a, i));
  CHECK(in_span(f, b, i));
  CHECK(hstack(FpMatrix(3, 0), a) == a);
  CHECK(vstack(FpMatrix(0, 1), a) == a);
}
