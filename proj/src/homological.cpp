#include "arex/homological.hpp"

#include <algorithm>

namespace arex {

namespace {

ModMorphism inclusion_first(const ModuleRep& m, const ModuleRep& n, const ModuleRep& sum) {
  return column_morphism(m, {identity_morphism(m), zero_morphism(m, n)}, sum);
}
ModMorphism inclusion_second(const ModuleRep& m, const ModuleRep& n, const ModuleRep& sum) {
  return column_morphism(n, {zero_morphism(n, m), identity_morphism(n)}, sum);
}
ModMorphism projection_first(const ModuleRep& m, const ModuleRep& n, const ModuleRep& sum) {
  return row_morphism(sum, {identity_morphism(m), zero_morphism(n, m)}, m);
}
ModMorphism projection_second(const ModuleRep& m, const ModuleRep& n, const ModuleRep& sum) {
  return row_morphism(sum, {zero_morphism(m, n), identity_morphism(n)}, n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Conflations

bool verify_conflation(const Algebra& a, const Conflation& c) {
  const PrimeField& f = a.field();
  if (!is_morphism(a, c.f) || !is_morphism(a, c.g)) return false;
  if (!(c.f.target == c.g.source)) return false;
  if (!is_zero(compose(f, c.g, c.f))) return false;
  if (!is_injective_map(f, c.f) || !is_surjective_map(f, c.g)) return false;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (c.y().dims[v] != c.x().dims[v] + c.z().dims[v]) return false;
  return true;
}

Conflation split_conflation(const Algebra&, const ModuleRep& x, const ModuleRep& z) {
  const ModuleRep y = direct_sum(x, z);
  return Conflation{inclusion_first(x, z, y), projection_second(x, z, y)};
}

Conflation direct_sum(const Conflation& c1, const Conflation& c2) {
  return Conflation{direct_sum(c1.f, c2.f), direct_sum(c1.g, c2.g)};
}

// ---------------------------------------------------------------------------
// Free modules

Eigen::Index FreeModule::coordinate(std::size_t vertex, std::size_t summand, std::size_t path) const {
  const auto& l = labels.at(vertex);
  const auto it = std::find(l.begin(), l.end(), std::make_pair(summand, path));
  if (it == l.end()) return -1;
  return static_cast<Eigen::Index>(it - l.begin());
}

FreeModule free_module(const Algebra& a, const std::vector<std::size_t>& tops) {
  FreeModule p;
  p.tops = tops;
  p.labels.resize(a.num_vertices());
  for (std::size_t w = 0; w < a.num_vertices(); ++w)
    for (std::size_t i = 0; i < tops.size(); ++i)
      for (std::size_t idx : a.paths_between(tops[i], w)) p.labels[w].emplace_back(i, idx);
  p.module = zero_module(a);
  for (std::size_t w = 0; w < a.num_vertices(); ++w)
    p.module.dims[w] = static_cast<Eigen::Index>(p.labels[w].size());
  for (std::size_t ai = 0; ai < a.num_arrows(); ++ai) {
    const std::size_t s = a.arrow(ai).source, t = a.arrow(ai).target;
    FpMatrix act = FpMatrix::Zero(p.module.dims[t], p.module.dims[s]);
    for (std::size_t k = 0; k < p.labels[s].size(); ++k) {
      const auto [i, idx] = p.labels[s][k];
      std::vector<std::size_t> ext = a.path_basis()[idx].arrows;
      ext.push_back(ai);
      if (const auto next = a.path_index(tops[i], ext))
        act(p.coordinate(t, i, *next), static_cast<Eigen::Index>(k)) = 1;
    }
    p.module.action[ai] = std::move(act);
  }
  for (std::size_t i = 0; i < tops.size(); ++i)
    p.generator.push_back(p.coordinate(tops[i], i, *a.path_index(tops[i], {})));
  return p;
}

ModMorphism morphism_from_generators(const Algebra& a, const FreeModule& p, const ModuleRep& target,
                                     const std::vector<FpVector>& images) {
  ModMorphism h = zero_morphism(p.module, target);
  for (std::size_t w = 0; w < a.num_vertices(); ++w)
    for (std::size_t k = 0; k < p.labels[w].size(); ++k) {
      const auto [i, idx] = p.labels[w][k];
      h.blocks[w].col(static_cast<Eigen::Index>(k)) =
          a.field().reduce(path_action(a, target, a.path_basis()[idx]) * images[i]);
    }
  return h;
}

ModuleRep indecomposable_projective(const Algebra& a, std::size_t v) { return free_module(a, {v}).module; }

ModuleRep indecomposable_injective(const Algebra& a, std::size_t v) {
  return dual(free_module(a.opposite(), {v}).module);
}

// ---------------------------------------------------------------------------
// Covers and syzygies

ProjectiveCover projective_cover(const Algebra& a, const ModuleRep& m) {
  const PrimeField& f = a.field();
  const auto rad = radical_spans(a, m);
  std::vector<std::size_t> tops;
  std::vector<FpVector> images;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    const FpMatrix r = rad[v].cols() == 0 ? FpMatrix(m.dims[v], 0) : column_basis(f, rad[v]);
    const FpMatrix d = complement_basis(f, r, m.dims[v]);
    for (Eigen::Index k = 0; k < d.cols(); ++k) {
      tops.push_back(v);
      images.push_back(d.col(k));
    }
  }
  FreeModule p = free_module(a, tops);
  ModMorphism cover = morphism_from_generators(a, p, m, images);
  Subobject ker = kernel_of(a, cover);
  return ProjectiveCover{std::move(p), std::move(cover), std::move(ker)};
}

ModuleRep syzygy(const Algebra& a, const ModuleRep& m) { return projective_cover(a, m).kernel.module; }

ModMorphism syzygy_morphism(const Algebra& a, const ProjectiveCover& cm, const ProjectiveCover& cn,
                            const ModMorphism& h) {
  const PrimeField& f = a.field();
  const auto lifted = factor_through(a, compose(f, h, cm.cover), cn.cover);
  if (!lifted) throw Error(ErrorCode::VerificationFailed, "map does not lift to projective covers");
  const ModMorphism restricted = compose(f, *lifted, cm.kernel.inclusion);
  ModMorphism out{cm.kernel.module, cn.kernel.module, {}};
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    out.blocks.push_back(*solve(f, cn.kernel.inclusion.blocks[v], restricted.blocks[v]));
  return out;
}

ModuleRep top_module(const Algebra& a, const ModuleRep& m) {
  return quotient_module(a, m, radical_spans(a, m)).module;
}

bool is_projective(const Algebra& a, const ModuleRep& m) {
  return projective_cover(a, m).free.module.dims == m.dims;
}

bool is_injective(const Algebra& a, const ModuleRep& m) { return is_projective(a.opposite(), dual(m)); }

// ---------------------------------------------------------------------------
// Transpose and translates

ModuleRep transpose(const Algebra& a, const ModuleRep& m) {
  const Algebra op = a.opposite();
  const ProjectiveCover c0 = projective_cover(a, m);
  const ProjectiveCover c1 = projective_cover(a, c0.kernel.module);
  const ModMorphism p1 = compose(a.field(), c0.kernel.inclusion, c1.cover);
  const FreeModule& free0 = c0.free;
  const FreeModule& free1 = c1.free;

  const FreeModule f0 = free_module(op, free0.tops);
  const FreeModule f1 = free_module(op, free1.tops);
  std::vector<FpVector> images;
  for (std::size_t i = 0; i < free0.tops.size(); ++i) {
    const std::size_t u = free0.tops[i];
    FpVector img = FpVector::Zero(f1.module.dims[u]);
    for (std::size_t k = 0; k < f1.labels[u].size(); ++k) {
      const auto [j, op_idx] = f1.labels[u][k];
      const std::size_t v = free1.tops[j];
      std::vector<std::size_t> arrows = op.path_basis()[op_idx].arrows;
      std::reverse(arrows.begin(), arrows.end());
      const std::size_t q = *a.path_index(u, arrows);
      const Eigen::Index coord = free0.coordinate(v, i, q);
      img(static_cast<Eigen::Index>(k)) = p1.blocks[v](coord, free1.generator[j]);
    }
    images.push_back(std::move(img));
  }
  const ModMorphism phi = morphism_from_generators(op, f0, f1.module, images);
  return cokernel_of(op, phi).module;
}

ModuleRep tau(const Algebra& a, const ModuleRep& m) {
  if (is_projective(a, m)) throw Error(ErrorCode::IsProjective, "tau of a projective module");
  return dual(transpose(a, m));
}

ModuleRep tau_inverse(const Algebra& a, const ModuleRep& m) {
  if (is_injective(a, m)) throw Error(ErrorCode::IsInjective, "inverse tau of an injective module");
  return transpose(a.opposite(), dual(m));
}

// ---------------------------------------------------------------------------
// Ext^1

ExtGroup ext1(const Algebra& a, const ModuleRep& z, const ModuleRep& x) {
  const PrimeField& f = a.field();
  ProjectiveCover cover = projective_cover(a, z);
  HomSpace cocycles = hom_space(a, cover.kernel.module, x);
  const HomSpace from_p = hom_space(a, cover.free.module, x);
  FpMatrix restricted = pre_composition_image(f, from_p, cover.kernel.inclusion);
  FpMatrix coboundaries = restricted.cols() == 0 ? restricted : column_basis(f, restricted);
  FpMatrix classes = relative_complement(f, coboundaries, cocycles.basis);
  return ExtGroup{std::move(cover), std::move(cocycles), std::move(coboundaries), std::move(classes)};
}

Conflation realize_extension(const Algebra& a, const ExtGroup& e, const FpVector& cocycle) {
  return pushout(a, e.cover.sequence(), e.cocycles.element(cocycle)).conflation;
}

std::vector<Conflation> ext1_basis(const Algebra& a, const ModuleRep& z, const ModuleRep& x) {
  const ExtGroup e = ext1(a, z, x);
  std::vector<Conflation> out;
  for (Eigen::Index i = 0; i < e.dim(); ++i) out.push_back(realize_extension(a, e, e.classes.col(i)));
  return out;
}

Eigen::Index ext1_dim(const Algebra& a, const ModuleRep& z, const ModuleRep& x) { return ext1(a, z, x).dim(); }

// ---------------------------------------------------------------------------
// Base change

BaseChange pullback(const Algebra& a, const Conflation& c, const ModMorphism& phi) {
  const PrimeField& f = a.field();
  const ModuleRep& y = c.y();
  const ModuleRep& w = phi.source;
  const ModuleRep s = direct_sum(y, w);
  const ModMorphism nu = row_morphism(s, {c.g, scale(f, -1, phi)}, c.z());
  const Subobject k = kernel_of(a, nu);
  ModMorphism psi = compose(f, projection_second(y, w, s), k.inclusion);
  ModMorphism comparison = compose(f, projection_first(y, w, s), k.inclusion);
  const ModMorphism fx = compose(f, inclusion_first(y, w, s), c.f);
  ModMorphism lifted{c.x(), k.module, {}};
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    lifted.blocks.push_back(*solve(f, k.inclusion.blocks[v], fx.blocks[v]));
  return BaseChange{Conflation{std::move(lifted), std::move(psi)}, std::move(comparison)};
}

BaseChange pushout(const Algebra& a, const Conflation& c, const ModMorphism& alpha) {
  const PrimeField& f = a.field();
  const ModuleRep& w = alpha.target;
  const ModuleRep& y = c.y();
  const ModuleRep s = direct_sum(w, y);
  const ModMorphism mu = column_morphism(c.x(), {scale(f, -1, alpha), c.f}, s);
  const Quotient q = cokernel_of(a, mu);
  ModMorphism f2 = compose(f, q.projection, inclusion_first(w, y, s));
  ModMorphism comparison = compose(f, q.projection, inclusion_second(w, y, s));
  const ModMorphism gz = row_morphism(s, {zero_morphism(w, c.z()), c.g}, c.z());
  ModMorphism g2{q.module, c.z(), {}};
  for (std::size_t v = 0; v < a.num_vertices(); ++v) g2.blocks.push_back(f.reduce(gz.blocks[v] * q.lifts[v]));
  return BaseChange{Conflation{std::move(f2), std::move(g2)}, std::move(comparison)};
}

// ---------------------------------------------------------------------------
// Factorization

FpMatrix post_composition_image(const PrimeField& f, const HomSpace& hom, const ModMorphism& g) {
  FpMatrix out(hom_ambient_dim(hom.source, g.target), hom.dim());
  for (Eigen::Index i = 0; i < hom.dim(); ++i) out.col(i) = flatten(compose(f, g, hom.basis_element(i)));
  return out;
}

FpMatrix pre_composition_image(const PrimeField& f, const HomSpace& hom, const ModMorphism& g) {
  FpMatrix out(hom_ambient_dim(g.source, hom.target), hom.dim());
  for (Eigen::Index i = 0; i < hom.dim(); ++i) out.col(i) = flatten(compose(f, hom.basis_element(i), g));
  return out;
}

namespace {

std::optional<ModMorphism> solve_in(const PrimeField& f, const HomSpace& hom, const FpMatrix& image,
                                    const ModMorphism& h) {
  const FpVector rhs = flatten(h);
  if (rhs.size() == 0 || (rhs.array() == 0).all()) return zero_morphism(hom.source, hom.target);
  if (hom.dim() == 0) return std::nullopt;
  const auto sol = solve(f, image, rhs);
  if (!sol) return std::nullopt;
  return hom.combination(f, *sol);
}

}  // namespace

std::optional<ModMorphism> factor_through(const Algebra& a, const ModMorphism& h, const ModMorphism& g) {
  const HomSpace hom = hom_space(a, h.source, g.source);
  return solve_in(a.field(), hom, post_composition_image(a.field(), hom, g), h);
}

std::optional<ModMorphism> extend_along(const Algebra& a, const ModMorphism& h, const ModMorphism& f) {
  const HomSpace hom = hom_space(a, f.target, h.target);
  return solve_in(a.field(), hom, pre_composition_image(a.field(), hom, f), h);
}

FpMatrix projective_factoring_maps(const Algebra& a, const ModuleRep& w, const ModuleRep& x) {
  const ProjectiveCover c = projective_cover(a, x);
  const HomSpace hom = hom_space(a, w, c.free.module);
  const FpMatrix img = post_composition_image(a.field(), hom, c.cover);
  return img.cols() == 0 ? img : column_basis(a.field(), img);
}

Eigen::Index stable_hom_dim(const Algebra& a, const ModuleRep& w, const ModuleRep& x) {
  return hom_space(a, w, x).dim() - projective_factoring_maps(a, w, x).cols();
}

FpMatrix preimage(const PrimeField& f, const FpMatrix& m, const FpMatrix& s) {
  const FpMatrix k = kernel(f, hstack(m, f.reduce(-s)));
  const FpMatrix top = k.topRows(m.cols());
  return top.cols() == 0 ? top : column_basis(f, top);
}

}  // namespace arex
