#include "arex/decompose.hpp"

#include <random>

namespace arex {

namespace {

constexpr int kFittingTrials = 4096;
constexpr std::uint64_t kFittingSeed = 0x5eed5eedULL;

struct EndAlgebra {
  const Algebra& a;
  const ModuleRep& m;
  HomSpace e;

  const PrimeField& f() const { return a.field(); }
  ModMorphism el(const FpVector& coords) const { return unflatten(m, m, coords); }
  FpVector mul(const FpVector& x, const FpVector& y) const { return flatten(compose(f(), el(x), el(y))); }
  FpVector power(const FpVector& x, std::uint64_t n) const {
    ModMorphism h = el(x);
    for (auto& b : h.blocks) b = mat_pow(f(), b, n);
    return flatten(h);
  }
  FpVector one() const { return flatten(identity_morphism(m)); }
};

// Complementary submodules, or nothing.
struct Split {
  std::vector<FpMatrix> first, second;
};

std::optional<Split> fitting_split(const EndAlgebra& e, const FpVector& x) {
  const PrimeField& f = e.f();
  const Eigen::Index n = e.m.total_dim();
  const ModMorphism h = e.el(e.power(x, static_cast<std::uint64_t>(n)));
  Split s;
  Eigen::Index r = 0;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) {
    const FpMatrix& b = h.blocks[v];
    s.first.push_back(b.size() == 0 ? FpMatrix(e.m.dims[v], 0) : column_basis(f, b));
    s.second.push_back(b.size() == 0 ? FpMatrix::Identity(e.m.dims[v], e.m.dims[v]) : kernel(f, b));
    r += s.first.back().cols();
  }
  if (r == 0 || r == n) return std::nullopt;
  return s;
}

FpMatrix span_of(const PrimeField& f, const FpMatrix& m) { return m.cols() == 0 ? m : column_basis(f, m); }

// Two-sided ideal generated by the columns of gens.
FpMatrix ideal_closure(const EndAlgebra& e, const FpMatrix& gens) {
  IncrementalSpan ideal(e.f(), gens.rows());
  std::vector<FpVector> work;
  for (Eigen::Index i = 0; i < gens.cols(); ++i)
    if (ideal.add(gens.col(i))) work.push_back(gens.col(i));
  while (!work.empty()) {
    const FpVector v = std::move(work.back());
    work.pop_back();
    for (Eigen::Index k = 0; k < e.e.dim(); ++k)
      for (const FpVector& w : {e.mul(e.e.basis.col(k), v), e.mul(v, e.e.basis.col(k))})
        if (ideal.add(w)) work.push_back(w);
  }
  return ideal.basis();
}

bool is_nilpotent_ideal(const EndAlgebra& e, const FpMatrix& ideal) {
  FpMatrix power = ideal;
  while (power.cols() > 0) {
    IncrementalSpan next(e.f(), ideal.rows());
    for (Eigen::Index i = 0; i < power.cols(); ++i)
      for (Eigen::Index j = 0; j < ideal.cols(); ++j) next.add(e.mul(power.col(i), ideal.col(j)));
    if (next.dim() == power.cols()) return false;
    power = next.basis();
  }
  return true;
}

// Nilpotent elements of F_p[x]: the kernel of a Frobenius power x -> x^q
// with q >= dim M, computed on the Krylov basis.
FpMatrix nilradical_of_generated(const EndAlgebra& e, const FpVector& x) {
  const PrimeField& f = e.f();
  FpMatrix krylov(x.size(), 0);
  FpVector y = e.one();
  while (!in_span(f, krylov, y)) {
    krylov = hstack(krylov, y);
    y = e.mul(y, x);
  }
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t q = p;
  while (q < static_cast<std::uint64_t>(e.m.total_dim())) q *= p;
  FpMatrix frob(krylov.cols(), krylov.cols());
  for (Eigen::Index j = 0; j < krylov.cols(); ++j) frob.col(j) = *solve(f, krylov, e.power(krylov.col(j), q));
  const FpMatrix k = kernel(f, frob);
  return f.reduce(krylov * k);
}

FpVector lift_idempotent(const EndAlgebra& e, FpVector x) {
  const PrimeField& f = e.f();
  for (int it = 0; it < 64; ++it) {
    const FpVector x2 = e.mul(x, x);
    if (x2 == x) return x;
    const FpVector x3 = e.mul(x2, x);
    x = f.reduce(3 * x2 - 2 * x3);
  }
  throw Error(ErrorCode::VerificationFailed, "idempotent lifting did not converge");
}

Split split_by_idempotent(const EndAlgebra& e, const FpVector& idem) {
  const PrimeField& f = e.f();
  const ModMorphism h = e.el(idem);
  Split s;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) {
    const FpMatrix& b = h.blocks[v];
    const Eigen::Index d = e.m.dims[v];
    s.first.push_back(b.size() == 0 ? FpMatrix(d, 0) : column_basis(f, b));
    s.second.push_back(b.size() == 0 ? FpMatrix::Identity(d, d) : kernel(f, b));
  }
  return s;
}

struct Analysis {
  std::optional<LocalEnd> local;
  std::optional<Split> split;
};

Analysis analyze(const Algebra& a, const ModuleRep& m) {
  const PrimeField& f = a.field();
  EndAlgebra e{a, m, hom_space(a, m, m)};
  const Eigen::Index d = e.e.dim();
  const FpVector one = e.one();

  for (Eigen::Index i = 0; i < d; ++i) {
    const FpVector b = e.e.basis.col(i);
    if (auto s = fitting_split(e, b)) return {std::nullopt, s};
    if (auto s = fitting_split(e, f.reduce(b - one))) return {std::nullopt, s};
  }

  std::vector<FpVector> gen_list;
  for (Eigen::Index i = 0; i < d; ++i) {
    const FpMatrix nil = nilradical_of_generated(e, e.e.basis.col(i));
    for (Eigen::Index k = 0; k < nil.cols(); ++k) gen_list.push_back(nil.col(k));
    for (Eigen::Index j = i + 1; j < d; ++j) {
      const FpVector bi = e.e.basis.col(i), bj = e.e.basis.col(j);
      gen_list.push_back(f.reduce(e.mul(bi, bj) - e.mul(bj, bi)));
    }
  }
  FpMatrix gens(e.e.ambient_dim(), static_cast<Eigen::Index>(gen_list.size()));
  for (std::size_t k = 0; k < gen_list.size(); ++k) gens.col(static_cast<Eigen::Index>(k)) = gen_list[k];
  const FpMatrix ideal = ideal_closure(e, gens);

  if (is_nilpotent_ideal(e, ideal)) {
    const FpMatrix comp = relative_complement(f, ideal, e.e.basis);
    const FpMatrix full = hstack(ideal, comp);
    const Eigen::Index r = ideal.cols(), c = comp.cols();
    FpMatrix frob(c, c);
    for (Eigen::Index j = 0; j < c; ++j) {
      const FpMatrix coords = *solve(f, full, e.power(comp.col(j), static_cast<std::uint64_t>(f.characteristic())));
      frob.col(j) = coords.col(0).tail(c);
    }
    const FpMatrix fixed = kernel(f, f.reduce(frob - FpMatrix::Identity(c, c)));
    if (fixed.cols() == 1) return {LocalEnd{e.e, ideal, c}, std::nullopt};

    const FpVector unit = solve(f, full, one)->col(0).tail(c);
    for (Eigen::Index k = 0; k < fixed.cols(); ++k) {
      if (in_span(f, unit, fixed.col(k))) continue;
      const FpVector x = f.reduce(comp * fixed.col(k));
      for (std::int64_t s = 0; s < f.characteristic(); ++s) {
        const FpVector shifted = f.reduce(x - s * one);
        const FpVector idem = f.reduce(one - e.power(shifted, static_cast<std::uint64_t>(f.characteristic() - 1)));
        if (in_span(f, ideal, idem) || in_span(f, ideal, f.reduce(one - idem))) continue;
        return {std::nullopt, split_by_idempotent(e, lift_idempotent(e, idem))};
      }
    }
  }

  std::mt19937_64 rng(kFittingSeed);
  std::uniform_int_distribution<std::int64_t> coef(0, f.characteristic() - 1);
  for (int t = 0; t < kFittingTrials; ++t) {
    FpVector c(d);
    for (Eigen::Index i = 0; i < d; ++i) c(i) = coef(rng);
    const FpVector x = f.reduce(e.e.basis * c - coef(rng) * one);
    if (auto s = fitting_split(e, x)) return {std::nullopt, s};
  }
  throw Error(ErrorCode::VerificationFailed, "no splitting endomorphism found for a decomposable module");
}

void collect_pieces(const Algebra& a, const ModuleRep& m, const ModMorphism& incl, const ModMorphism& proj,
                    std::vector<Piece>& out) {
  if (m.is_zero()) return;
  Analysis an = analyze(a, m);
  if (an.local) {
    out.push_back(Piece{m, incl, proj, std::move(*an.local)});
    return;
  }
  const PrimeField& f = a.field();
  const Split& s = *an.split;
  const Subobject u = submodule(a, m, s.first);
  const Subobject w = submodule(a, m, s.second);
  ModMorphism pu{m, u.module, {}}, pw{m, w.module, {}};
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const FpMatrix basis = hstack(u.inclusion.blocks[v], w.inclusion.blocks[v]);
    const FpMatrix inv = *inverse(f, basis);
    pu.blocks.push_back(inv.topRows(u.module.dims[v]));
    pw.blocks.push_back(inv.bottomRows(w.module.dims[v]));
  }
  collect_pieces(a, u.module, compose(f, incl, u.inclusion), compose(f, pu, proj), out);
  collect_pieces(a, w.module, compose(f, incl, w.inclusion), compose(f, pw, proj), out);
}

}  // namespace

std::optional<LocalEnd> local_endomorphisms(const Algebra& a, const ModuleRep& m) {
  if (m.is_zero()) return std::nullopt;
  return analyze(a, m).local;
}

std::vector<Piece> indecomposable_pieces(const Algebra& a, const ModuleRep& m) {
  std::vector<Piece> out;
  collect_pieces(a, m, identity_morphism(m), identity_morphism(m), out);
  return out;
}

std::vector<Summand> decompose(const Algebra& a, const ModuleRep& m) {
  std::vector<Piece> reps;
  std::vector<Summand> out;
  for (Piece& p : indecomposable_pieces(a, m)) {
    bool found = false;
    for (std::size_t i = 0; i < reps.size() && !found; ++i)
      if (iso_between_indecomposables(a, reps[i].module, reps[i].end, p.module)) {
        ++out[i].multiplicity;
        found = true;
      }
    if (!found) {
      out.push_back(Summand{p.module, 1});
      reps.push_back(std::move(p));
    }
  }
  return out;
}

bool is_indecomposable(const Algebra& a, const ModuleRep& m) { return local_endomorphisms(a, m).has_value(); }

std::optional<ModMorphism> iso_between_indecomposables(const Algebra& a, const ModuleRep& m, const LocalEnd& end_m,
                                                       const ModuleRep& n) {
  const PrimeField& f = a.field();
  if (m.dims != n.dims) return std::nullopt;
  for (std::size_t k = 0; k < m.action.size(); ++k)
    if (rank(f, m.action[k]) != rank(f, n.action[k])) return std::nullopt;
  const HomSpace to = hom_space(a, m, n);
  if (to.dim() != end_m.endomorphisms.dim()) return std::nullopt;
  const HomSpace back = hom_space(a, n, m);
  if (back.dim() != to.dim()) return std::nullopt;
  IncrementalSpan rad(f, end_m.endomorphisms.ambient_dim());
  for (Eigen::Index k = 0; k < end_m.radical.cols(); ++k) rad.add(end_m.radical.col(k));
  for (Eigen::Index i = 0; i < to.dim(); ++i) {
    const ModMorphism fi = to.basis_element(i);
    for (Eigen::Index j = 0; j < back.dim(); ++j)
      if (!rad.contains(flatten(compose(f, back.basis_element(j), fi)))) return fi;
  }
  return std::nullopt;
}

std::optional<ModMorphism> is_iso(const Algebra& a, const ModuleRep& m, const ModuleRep& n, const IsoOptions& options) {
  if (m.dims != n.dims) return std::nullopt;
  const PrimeField& f = a.field();
  const HomSpace hom = hom_space(a, m, n);
  if (m.is_zero()) return zero_morphism(m, n);
  if (hom.dim() == 0) return std::nullopt;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> coef(0, f.characteristic() - 1);
  for (int t = 0; t < options.trial_bound; ++t) {
    FpVector c(hom.dim());
    for (Eigen::Index i = 0; i < hom.dim(); ++i) c(i) = coef(rng);
    ModMorphism h = hom.combination(f, c);
    if (is_isomorphism(f, h)) return h;
  }

  std::vector<Piece> pm = indecomposable_pieces(a, m);
  std::vector<Piece> pn = indecomposable_pieces(a, n);
  if (pm.size() != pn.size()) return std::nullopt;
  std::vector<bool> used(pn.size(), false);
  ModMorphism total = zero_morphism(m, n);
  for (const Piece& p : pm) {
    bool matched = false;
    for (std::size_t j = 0; j < pn.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto iso = iso_between_indecomposables(a, p.module, p.end, pn[j].module)) {
        used[j] = true;
        matched = true;
        total = add(f, total, compose(f, pn[j].inclusion, compose(f, *iso, p.projection)));
      }
    }
    if (!matched) return std::nullopt;
  }
  return total;
}

FpMatrix radical_hom(const Algebra& a, const ModuleRep& m, const LocalEnd& end_m, const ModuleRep& n) {
  const PrimeField& f = a.field();
  const HomSpace to = hom_space(a, m, n);
  const HomSpace back = hom_space(a, n, m);
  if (to.dim() == 0 || back.dim() == 0) return to.basis;
  const FpMatrix& rad = end_m.radical;
  const Eigen::Index amb = hom_ambient_dim(m, m);
  const Eigen::Index nj = back.dim(), nr = rad.cols();
  FpMatrix sys = FpMatrix::Zero(nj * amb, to.dim() + nj * nr);
  for (Eigen::Index j = 0; j < nj; ++j) {
    const ModMorphism g = back.basis_element(j);
    for (Eigen::Index i = 0; i < to.dim(); ++i)
      sys.block(j * amb, i, amb, 1) = flatten(compose(f, g, to.basis_element(i)));
    if (nr > 0) sys.block(j * amb, to.dim() + j * nr, amb, nr) = f.reduce(-rad);
  }
  const FpMatrix k = kernel(f, sys);
  const FpMatrix coeffs = k.topRows(to.dim());
  return span_of(f, f.reduce(to.basis * coeffs));
}

std::vector<ModMorphism> rad_hom_basis(const Algebra& a, const ModuleRep& m, const ModuleRep& n) {
  const auto em = local_endomorphisms(a, m);
  if (!em || !is_indecomposable(a, n)) throw Error(ErrorCode::NotIndecomposable, "rad(m, n) needs indecomposables");
  const FpMatrix r = radical_hom(a, m, *em, n);
  std::vector<ModMorphism> out;
  for (Eigen::Index i = 0; i < r.cols(); ++i) out.push_back(unflatten(m, n, r.col(i)));
  return out;
}

}  // namespace arex
