#include "arex/arquiver.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace arex {

// ---------------------------------------------------------------------------
// Registry queries

std::optional<std::size_t> IndecRegistry::find(const ModuleRep& m) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.module.dims != m.dims) continue;
    if (iso_between_indecomposables(algebra_, e.module, e.end, m)) return i;
  }
  return std::nullopt;
}

std::vector<int> IndecRegistry::summands(const ModuleRep& m) const {
  std::vector<int> counts(entries_.size(), 0);
  for (const Piece& p : indecomposable_pieces(algebra_, m)) {
    const auto i = find(p.module);
    if (!i) throw Error(ErrorCode::UnknownSummand, "summand " + dimension_vector_string(p.module) + " is not in the registry");
    ++counts[*i];
  }
  return counts;
}

std::optional<std::size_t> IndecRegistry::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label == label) return i;
  return std::nullopt;
}

const Conflation& IndecRegistry::ar_sequence(std::size_t z) const {
  const Entry& e = entries_.at(z);
  if (e.projective || !e.ar) throw Error(ErrorCode::IsProjective, label(z) + " is projective");
  return *e.ar;
}

const Conflation& ar_sequence(const IndecRegistry& reg, std::size_t z) { return reg.ar_sequence(z); }

// ---------------------------------------------------------------------------
// AR conflations

std::vector<Conflation> ar_candidates(const Algebra& a, const ModuleRep& z, const LocalEnd& end_z) {
  auto out = ext_socle_candidates(a, z, end_z, tau(a, z));
  if (out.empty()) throw Error(ErrorCode::VerificationFailed, "Ext^1(z, tau z) vanishes");
  return out;
}

std::vector<Conflation> ext_socle_candidates(const Algebra& a, const ModuleRep& z, const LocalEnd& end_z,
                                             const ModuleRep& x) {
  const PrimeField& f = a.field();
  const ExtGroup e = ext1(a, z, x);
  if (e.dim() == 0) return {};

  const FpMatrix& rad = end_z.radical;
  FpMatrix socle;
  if (rad.cols() == 0) {
    socle = FpMatrix::Identity(e.dim(), e.dim());
  } else {
    const Eigen::Index amb = e.cocycles.ambient_dim(), nb = e.coboundaries.cols(), nr = rad.cols();
    FpMatrix sys = FpMatrix::Zero(nr * amb, e.dim() + nr * nb);
    for (Eigen::Index k = 0; k < nr; ++k) {
      const ModMorphism om = syzygy_morphism(a, e.cover, e.cover, unflatten(z, z, rad.col(k)));
      for (Eigen::Index j = 0; j < e.dim(); ++j)
        sys.block(k * amb, j, amb, 1) = flatten(compose(f, e.cocycles.element(e.classes.col(j)), om));
      if (nb > 0) sys.block(k * amb, e.dim() + k * nb, amb, nb) = f.reduce(-e.coboundaries);
    }
    const FpMatrix top = kernel(f, sys).topRows(e.dim());
    socle = top.cols() == 0 ? top : column_basis(f, top);
  }

  std::vector<Conflation> out;
  for (Eigen::Index k = 0; k < socle.cols(); ++k)
    out.push_back(realize_extension(a, e, f.reduce(e.classes * socle.col(k))));
  if (socle.cols() > 1)
    out.push_back(realize_extension(a, e, f.reduce(e.classes * socle.rowwise().sum())));
  return out;
}

bool verify_almost_split(const IndecRegistry& reg, const Conflation& c) {
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  if (!verify_conflation(a, c)) return false;
  const auto ex = local_endomorphisms(a, c.x());
  if (!ex || !is_indecomposable(a, c.z())) return false;
  if (factor_through(a, identity_morphism(c.z()), c.g)) return false;

  for (std::size_t w = 0; w < reg.size(); ++w) {
    const ModuleRep& wm = reg.module(w);
    const FpMatrix into = radical_hom(a, wm, reg.end(w), c.z());
    if (into.cols() > 0) {
      const FpMatrix img = post_composition_image(f, hom_space(a, wm, c.y()), c.g);
      for (Eigen::Index k = 0; k < into.cols(); ++k)
        if (!in_span(f, img, into.col(k))) return false;
    }
    const FpMatrix out = radical_hom(a, c.x(), *ex, wm);
    if (out.cols() > 0) {
      const FpMatrix img = pre_composition_image(f, hom_space(a, c.y(), wm), c.f);
      for (Eigen::Index k = 0; k < out.cols(); ++k)
        if (!in_span(f, img, out.col(k))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Knitting

IndecRegistry enumerate_indecomposables(const Algebra& a, std::size_t bound) {
  if (bound < a.num_vertices())
    throw Error(ErrorCode::BoundExceeded, "bound is smaller than the number of projectives");
  IndecRegistry reg(a);
  auto& es = reg.entries_;
  std::deque<std::size_t> work;
  std::map<std::size_t, std::vector<Conflation>> candidates;  // by discovery index

  auto add = [&](const ModuleRep& m) {
    for (Piece& p : indecomposable_pieces(a, m)) {
      if (reg.find(p.module)) continue;
      if (es.size() >= bound)
        throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(bound) + " indecomposables");
      IndecRegistry::Entry e;
      e.module = std::move(p.module);
      e.end = std::move(p.end);
      e.discovery = es.size();
      es.push_back(std::move(e));
      work.push_back(es.size() - 1);
    }
  };

  for (std::size_t v = 0; v < a.num_vertices(); ++v) add(indecomposable_projective(a, v));
  for (std::size_t v = 0; v < a.num_vertices(); ++v) add(indecomposable_injective(a, v));
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    const ModuleRep m = es[i].module;
    const LocalEnd end = es[i].end;
    es[i].projective = is_projective(a, m);
    es[i].injective = is_injective(a, m);
    if (!es[i].projective) {
      auto cands = ar_candidates(a, m, end);
      add(cands.front().x());
      add(cands.front().y());
      candidates[es[i].discovery] = std::move(cands);
    } else {
      add(submodule(a, m, radical_spans(a, m)).module);
    }
    if (!es[i].injective)
      add(tau_inverse(a, m));
    else
      add(quotient_module(a, m, socle_spans(a, m)).module);
  }

  std::sort(es.begin(), es.end(), [](const IndecRegistry::Entry& x, const IndecRegistry::Entry& y) {
    const Eigen::Index dx = x.module.total_dim(), dy = y.module.total_dim();
    if (dx != dy) return dx < dy;
    if (x.module.dims != y.module.dims) return x.module.dims < y.module.dims;
    return x.discovery < y.discovery;
  });
  std::map<std::string, int> seen, total;
  for (const auto& e : es) ++total[dimension_vector_string(e.module)];
  for (auto& e : es) {
    const std::string dv = dimension_vector_string(e.module);
    e.label = total[dv] > 1 ? dv + "#" + std::to_string(++seen[dv]) : dv;
  }

  for (auto& e : es) {
    if (e.projective) continue;
    for (Conflation& c : candidates[e.discovery])
      if (verify_almost_split(reg, c)) {
        e.ar = std::move(c);
        break;
      }
    if (!e.ar) throw Error(ErrorCode::VerificationFailed, "no almost split candidate verified for " + e.label);
    e.tau = reg.find(e.ar->x());
  }
  return reg;
}

// ---------------------------------------------------------------------------
// Quiver

ARQuiverGraph build_ar_quiver(const IndecRegistry& reg) {
  const Algebra& a = reg.algebra();
  ARQuiverGraph g;
  g.nodes.resize(reg.size());
  std::iota(g.nodes.begin(), g.nodes.end(), std::size_t{0});
  for (std::size_t z = 0; z < reg.size(); ++z) {
    const ModuleRep& m = reg.module(z);
    const std::vector<int> mult = reg.is_projective(z) ? reg.summands(submodule(a, m, radical_spans(a, m)).module)
                                                       : reg.summands(reg.ar_sequence(z).y());
    for (std::size_t w = 0; w < mult.size(); ++w)
      if (mult[w] > 0) g.edges.push_back(ArrowEdge{w, z, mult[w]});
    if (auto t = reg.tau(z)) g.translation[z] = *t;
  }
  return g;
}

}  // namespace arex
