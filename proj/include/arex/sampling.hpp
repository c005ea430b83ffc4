#pragma once

#include <cstdint>
#include <random>

#include "arex/arquiver.hpp"

namespace arex {

/// Random element of a Hom space.
ModMorphism random_morphism(const Algebra& a, const HomSpace& hom, std::mt19937_64& rng);

/// Random certified conflations over a complete registry, built from random
/// extensions between small sums of indecomposables, AR conflations and
/// split ones, then modified by direct sums, pullbacks and pushouts.
class ConflationSampler {
 public:
  ConflationSampler(const IndecRegistry& reg, std::uint64_t seed, Eigen::Index max_middle_dim = 14);

  Conflation next();

 private:
  ModuleRep small_sum();
  Conflation base();
  Conflation modify(Conflation c);
  std::size_t pick(std::size_t n);

  const IndecRegistry& reg_;
  std::mt19937_64 rng_;
  Eigen::Index max_middle_dim_;
};

}  // namespace arex
