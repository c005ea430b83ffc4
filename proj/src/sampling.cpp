#include "arex/sampling.hpp"

namespace arex {

ModMorphism random_morphism(const Algebra& a, const HomSpace& hom, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coef(0, a.field().characteristic() - 1);
  FpVector c(hom.dim());
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coef(rng);
  return hom.combination(a.field(), c);
}

ConflationSampler::ConflationSampler(const IndecRegistry& reg, std::uint64_t seed, Eigen::Index max_middle_dim)
    : reg_(reg), rng_(seed), max_middle_dim_(max_middle_dim) {}

std::size_t ConflationSampler::pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

ModuleRep ConflationSampler::small_sum() {
  ModuleRep m = reg_.module(pick(reg_.size()));
  if (pick(3) == 0) m = direct_sum(m, reg_.module(pick(reg_.size())));
  return m;
}

Conflation ConflationSampler::base() {
  const Algebra& a = reg_.algebra();
  const PrimeField& f = a.field();
  switch (pick(6)) {
    case 0:
    case 1: {
      std::vector<std::size_t> nonproj;
      for (std::size_t i = 0; i < reg_.size(); ++i)
        if (!reg_.is_projective(i)) nonproj.push_back(i);
      if (!nonproj.empty()) return reg_.ar_sequence(nonproj[pick(nonproj.size())]);
      return split_conflation(a, small_sum(), small_sum());
    }
    case 2:
      return split_conflation(a, small_sum(), small_sum());
    default: {
      // a few tries for a pair with nonvanishing Ext^1, then a nonzero class in it
      for (int attempt = 0; attempt < 8; ++attempt) {
        const ModuleRep z = small_sum(), x = small_sum();
        const ExtGroup e = ext1(a, z, x);
        if (e.dim() == 0) continue;
        std::uniform_int_distribution<std::int64_t> coef(0, f.characteristic() - 1);
        FpVector cl = FpVector::Zero(e.dim()), cb(e.coboundaries.cols());
        while (cl.isZero())
          for (Eigen::Index i = 0; i < cl.size(); ++i) cl(i) = coef(rng_);
        for (Eigen::Index i = 0; i < cb.size(); ++i) cb(i) = coef(rng_);
        FpVector cocycle = e.classes * cl;
        if (cb.size() > 0) cocycle += e.coboundaries * cb;
        return realize_extension(a, e, f.reduce(cocycle));
      }
      return split_conflation(a, small_sum(), small_sum());
    }
  }
}

Conflation ConflationSampler::modify(Conflation c) {
  const Algebra& a = reg_.algebra();
  switch (pick(4)) {
    case 0: {
      const Conflation d = base();
      if (c.y().total_dim() + d.y().total_dim() <= max_middle_dim_) return direct_sum(c, d);
      return c;
    }
    case 1: {
      const ModuleRep w = small_sum();
      return pullback(a, c, random_morphism(a, hom_space(a, w, c.z()), rng_)).conflation;
    }
    case 2: {
      const ModuleRep w = small_sum();
      return pushout(a, c, random_morphism(a, hom_space(a, c.x(), w), rng_)).conflation;
    }
    default:
      return c;
  }
}

Conflation ConflationSampler::next() {
  for (;;) {
    Conflation c = base();
    const std::size_t steps = pick(3);
    for (std::size_t s = 0; s < steps && c.y().total_dim() <= max_middle_dim_; ++s) c = modify(std::move(c));
    if (c.y().total_dim() > max_middle_dim_) continue;
    if (!verify_conflation(reg_.algebra(), c)) throw Error(ErrorCode::VerificationFailed, "sampler built a non-exact sequence");
    return c;
  }
}

}  // namespace arex
