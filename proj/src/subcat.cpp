#include "arex/subcat.hpp"

#include <algorithm>
#include <random>

namespace arex {

bool SubcategorySpec::has(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

SubcategorySpec make_subcategory(const IndecRegistry& reg, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= reg.size()) throw std::out_of_range("member index outside the registry");
  return SubcategorySpec{&reg, std::move(members)};
}

SubcategorySpec full_subcategory(const IndecRegistry& reg) {
  std::vector<std::size_t> all(reg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return make_subcategory(reg, std::move(all));
}

bool in_subcategory(const SubcategorySpec& s, const ModuleRep& m) {
  const std::vector<int> counts = s.registry->summands(m);
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0 && !s.has(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Closure predicates

std::vector<ModMorphism> find_surjections(const Algebra& a, const ModuleRep& m, const ModuleRep& n,
                                          const ScanOptions& options) {
  const PrimeField& f = a.field();
  std::vector<ModMorphism> out;
  const HomSpace hom = hom_space(a, m, n);
  auto consider = [&](const FpVector& coeffs) {
    const ModMorphism h = hom.combination(f, coeffs);
    if (is_surjective_map(f, h)) out.push_back(h);
  };
  if (n.is_zero()) {
    out.push_back(zero_morphism(m, n));
    return out;
  }
  const std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
  std::uint64_t size = 1;
  bool small = true;
  for (Eigen::Index i = 0; i < hom.dim() && small; ++i) {
    size *= p;
    if (size > options.strict_limit) small = false;
  }
  if (small && (options.strict || hom.dim() <= 3)) {
    for (std::uint64_t code = 1; code < size; ++code) {
      FpVector c(hom.dim());
      std::uint64_t r = code;
      for (Eigen::Index i = 0; i < hom.dim(); ++i, r /= p) c(i) = static_cast<std::int64_t>(r % p);
      consider(c);
    }
    return out;
  }
  for (Eigen::Index i = 0; i < hom.dim(); ++i) consider(FpVector::Unit(hom.dim(), i));
  if (!out.empty()) return out;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> coef(0, f.characteristic() - 1);
  for (int t = 0; t < options.random_trials; ++t) {
    FpVector c(hom.dim());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = coef(rng);
    consider(c);
  }
  return out;
}

bool check_extension_closed(const SubcategorySpec& s) {
  const IndecRegistry& reg = *s.registry;
  for (std::size_t z : s.members)
    for (std::size_t x : s.members)
      for (const Conflation& c : ext1_basis(reg.algebra(), reg.module(z), reg.module(x)))
        if (!in_subcategory(s, c.y())) return false;
  return true;
}

bool check_resolving(const SubcategorySpec& s, const ScanOptions& options) {
  const IndecRegistry& reg = *s.registry;
  const Algebra& a = reg.algebra();
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    if (!in_subcategory(s, indecomposable_projective(a, v))) return false;
  if (!check_extension_closed(s)) return false;
  for (std::size_t x : s.members)
    for (std::size_t y : s.members)
      for (const ModMorphism& h : find_surjections(a, reg.module(x), reg.module(y), options))
        if (!in_subcategory(s, kernel_of(a, h).module)) return false;
  return true;
}

bool check_torsion_class(const SubcategorySpec& s, const ScanOptions& options) {
  const IndecRegistry& reg = *s.registry;
  if (!check_extension_closed(s)) return false;
  for (std::size_t m : s.members)
    for (std::size_t q = 0; q < reg.size(); ++q)
      if (!s.has(q) && !find_surjections(reg.algebra(), reg.module(m), reg.module(q), options).empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Approximations

namespace {

struct Candidate {
  std::size_t index;
  ModMorphism map;
};

// Drops candidates whose removal keeps every column span of `images[j][v]`
// (indexed by candidate j, then test object v) summed over the kept candidates.
std::vector<std::size_t> minimize(const PrimeField& f, const std::vector<std::vector<FpMatrix>>& images,
                                  std::size_t tests) {
  std::vector<std::size_t> kept(images.size());
  for (std::size_t j = 0; j < kept.size(); ++j) kept[j] = j;
  auto span_rank = [&](const std::vector<std::size_t>& js, std::size_t v) {
    Eigen::Index rows = -1;
    std::vector<FpMatrix> parts;
    for (std::size_t j : js) {
      rows = images[j][v].rows();
      if (images[j][v].cols() > 0) parts.push_back(images[j][v]);
    }
    if (parts.empty() || rows <= 0) return Eigen::Index{0};
    FpMatrix all = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) all = hstack(all, parts[k]);
    return rank(f, all);
  };
  std::vector<Eigen::Index> full(tests);
  for (std::size_t v = 0; v < tests; ++v) full[v] = span_rank(kept, v);
  for (std::size_t j = 0; j < images.size();) {
    auto pos = std::find(kept.begin(), kept.end(), j);
    std::vector<std::size_t> trial = kept;
    trial.erase(trial.begin() + (pos - kept.begin()));
    bool same = true;
    for (std::size_t v = 0; v < tests && same; ++v) same = span_rank(trial, v) == full[v];
    if (same) kept = std::move(trial);
    ++j;
  }
  return kept;
}

}  // namespace

Approximation right_approximation(const SubcategorySpec& s, const ModuleRep& x) {
  const IndecRegistry& reg = *s.registry;
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  std::vector<Candidate> cands;
  for (std::size_t w : s.members)
    for (const ModMorphism& h : hom_basis(a, reg.module(w), x)) cands.push_back({w, h});
  std::vector<std::vector<FpMatrix>> images(cands.size());
  for (std::size_t j = 0; j < cands.size(); ++j)
    for (std::size_t v : s.members)
      images[j].push_back(post_composition_image(f, hom_space(a, reg.module(v), reg.module(cands[j].index)),
                                                 cands[j].map));
  Approximation out;
  std::vector<ModuleRep> parts;
  std::vector<ModMorphism> maps;
  for (std::size_t j : minimize(f, images, s.members.size())) {
    parts.push_back(reg.module(cands[j].index));
    maps.push_back(cands[j].map);
    out.summands.push_back(cands[j].index);
  }
  out.source = direct_sum(parts, a);
  out.map = maps.empty() ? zero_morphism(out.source, x) : row_morphism(out.source, maps, x);
  return out;
}

Approximation left_approximation(const SubcategorySpec& s, const ModuleRep& w) {
  const IndecRegistry& reg = *s.registry;
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  std::vector<Candidate> cands;
  for (std::size_t p : s.members)
    for (const ModMorphism& h : hom_basis(a, w, reg.module(p))) cands.push_back({p, h});
  std::vector<std::vector<FpMatrix>> images(cands.size());
  for (std::size_t j = 0; j < cands.size(); ++j)
    for (std::size_t q : s.members)
      images[j].push_back(pre_composition_image(f, hom_space(a, reg.module(cands[j].index), reg.module(q)),
                                                cands[j].map));
  Approximation out;
  std::vector<ModuleRep> parts;
  std::vector<ModMorphism> maps;
  for (std::size_t j : minimize(f, images, s.members.size())) {
    parts.push_back(reg.module(cands[j].index));
    maps.push_back(cands[j].map);
    out.summands.push_back(cands[j].index);
  }
  out.source = direct_sum(parts, a);
  out.map = maps.empty() ? zero_morphism(w, out.source) : column_morphism(w, maps, out.source);
  return out;
}

WeakCogeneratorReport weak_cogenerator(const SubcategorySpec& s) {
  const IndecRegistry& reg = *s.registry;
  const Algebra& a = reg.algebra();
  std::vector<ModuleRep> simples;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) simples.push_back(simple_module(a, v));
  WeakCogeneratorReport r{right_approximation(s, direct_sum(simples, a)), {}, true};
  for (std::size_t w : s.members) {
    if (reg.is_projective(w)) continue;
    const Eigen::Index d = stable_hom_dim(a, reg.module(w), r.approximation.source);
    r.stable_hom.emplace_back(w, d);
    if (d == 0) r.verified = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Relative exact structures

IntVector member_coordinates(const SubcategorySpec& s, const K0Vector& v) {
  IntVector out(static_cast<Eigen::Index>(s.members.size()));
  for (std::size_t k = 0; k < s.members.size(); ++k) out(static_cast<Eigen::Index>(k)) = v.coords(static_cast<Eigen::Index>(s.members[k]));
  for (Eigen::Index i = 0; i < v.coords.size(); ++i)
    if (v.coords(i) != 0 && !s.has(static_cast<std::size_t>(i)))
      throw Error(ErrorCode::VerificationFailed, "class is not supported on the subcategory");
  return out;
}

bool verify_relative_almost_split(const SubcategorySpec& s, const Conflation& c) {
  const IndecRegistry& reg = *s.registry;
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  if (!verify_conflation(a, c)) return false;
  const auto ex = local_endomorphisms(a, c.x());
  if (!ex || !is_indecomposable(a, c.z())) return false;
  if (!in_subcategory(s, c.x()) || !in_subcategory(s, c.y()) || !in_subcategory(s, c.z())) return false;
  if (factor_through(a, identity_morphism(c.z()), c.g)) return false;
  for (std::size_t w : s.members) {
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

RelativeStructure relative_structure(const SubcategorySpec& s) {
  const IndecRegistry& reg = *s.registry;
  const Algebra& a = reg.algebra();
  if (!check_extension_closed(s)) throw Error(ErrorCode::VerificationFailed, "subcategory is not extension-closed");
  const std::size_t n = s.members.size();
  RelativeStructure r{s, std::vector<bool>(n, true), std::vector<std::optional<Conflation>>(n), {}, GenLattice(n),
                      GenLattice(n), false};
  std::vector<IntVector> ex_gens, ar_gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x : s.members)
      for (const Conflation& c : ext1_basis(a, reg.module(s.members[i]), reg.module(x))) {
        r.rel_projective[i] = false;
        ex_gens.push_back(member_coordinates(s, class_of(reg, c)));
      }
  for (std::size_t i = 0; i < n; ++i) {
    if (r.rel_projective[i]) continue;
    const std::size_t z = s.members[i];
    for (std::size_t x : s.members) {
      for (Conflation& c : ext_socle_candidates(a, reg.module(z), reg.end(z), reg.module(x)))
        if (verify_relative_almost_split(s, c)) {
          r.rel_ar[i] = std::move(c);
          break;
        }
      if (r.rel_ar[i]) break;
    }
    if (r.rel_ar[i])
      ar_gens.push_back(member_coordinates(s, class_of(reg, *r.rel_ar[i])));
    else
      r.unresolved.push_back(z);
  }
  r.rel_ex = lattice_from_generators(n, ex_gens);
  r.rel_ar_lattice = lattice_from_generators(n, ar_gens);
  r.equal_exact = r.unresolved.empty() && equal(r.rel_ex, r.rel_ar_lattice);
  return r;
}

// ---------------------------------------------------------------------------
// Perpendicular categories

namespace {

bool seen_before(const Algebra& a, const std::vector<ModuleRep>& history, const ModuleRep& m) {
  for (const ModuleRep& h : history)
    if (h.dims == m.dims && is_iso(a, h, m)) return true;
  return false;
}

}  // namespace

bool higher_ext_vanishes(const Algebra& a, const ModuleRep& x, const ModuleRep& u, std::size_t bound) {
  std::vector<ModuleRep> history;
  ModuleRep cur = x;
  for (std::size_t i = 0; i < bound; ++i) {
    if (cur.is_zero() || is_projective(a, cur)) return true;
    if (ext1_dim(a, cur, u) != 0) return false;
    if (seen_before(a, history, cur)) return true;
    history.push_back(cur);
    cur = syzygy(a, cur);
  }
  return true;
}

std::optional<std::size_t> projective_dimension(const Algebra& a, const ModuleRep& m, std::size_t bound) {
  std::vector<ModuleRep> history;
  ModuleRep cur = m;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (cur.is_zero() || is_projective(a, cur)) return n;
    if (seen_before(a, history, cur)) return std::nullopt;
    history.push_back(cur);
    cur = syzygy(a, cur);
  }
  return std::nullopt;
}

PerpReport perp(const IndecRegistry& reg, const ModuleRep& u) {
  const Algebra& a = reg.algebra();
  const std::size_t bound = a.dimension();
  std::vector<std::size_t> members;
  for (std::size_t w = 0; w < reg.size(); ++w)
    if (higher_ext_vanishes(a, reg.module(w), u, bound)) members.push_back(w);
  PerpReport r{make_subcategory(reg, members)};
  r.finite_injective_dimension = projective_dimension(a.opposite(), dual(u), bound).has_value();
  r.self_orthogonal = higher_ext_vanishes(a, u, u, bound);

  const std::vector<int> counts = reg.summands(u);
  std::vector<std::size_t> add_u;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] > 0) add_u.push_back(i);
  const SubcategorySpec su = make_subcategory(reg, add_u);
  std::vector<ModuleRep> injectives;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) injectives.push_back(indecomposable_injective(a, v));
  ModuleRep cur = direct_sum(injectives, a);
  for (std::size_t step = 0; step <= bound; ++step) {
    const Approximation ap = right_approximation(su, cur);
    if (!is_surjective_map(a.field(), ap.map)) break;
    cur = kernel_of(a, ap.map).module;
    if (cur.is_zero() || in_subcategory(su, cur)) {
      r.resolution_of_dual = true;
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Syzygy category

SubcategorySpec syzygy_category(const IndecRegistry& reg) {
  const Algebra& a = reg.algebra();
  std::vector<std::size_t> projectives, members;
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg.is_projective(i)) projectives.push_back(i);
  const SubcategorySpec proj = make_subcategory(reg, projectives);
  for (std::size_t w = 0; w < reg.size(); ++w) {
    if (is_injective_map(a.field(), left_approximation(proj, reg.module(w)).map)) members.push_back(w);
    const std::vector<int> counts = reg.summands(syzygy(a, reg.module(w)));
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (counts[i] > 0) members.push_back(i);
  }
  return make_subcategory(reg, members);
}

AdjunctionReport omega_minus(const IndecRegistry& reg, std::size_t w, const std::vector<std::size_t>& targets) {
  const Algebra& a = reg.algebra();
  if (reg.is_projective(w) || !syzygy_category(reg).has(w))
    throw Error(ErrorCode::NotInSyzygyCategory, reg.label(w) + " is projective or admits no inflation into a projective");
  std::vector<std::size_t> projectives;
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg.is_projective(i)) projectives.push_back(i);
  const Approximation left = left_approximation(make_subcategory(reg, projectives), reg.module(w));
  const Quotient q = cokernel_of(a, left.map);
  AdjunctionReport r{Conflation{left.map, q.projection}, targets, {}, {}, true};
  if (!verify_conflation(a, r.sequence)) throw Error(ErrorCode::VerificationFailed, "left approximation is not an inflation");
  for (std::size_t x : targets) {
    r.lhs.push_back(stable_hom_dim(a, q.module, reg.module(x)));
    r.rhs.push_back(stable_hom_dim(a, reg.module(w), syzygy(a, reg.module(x))));
    if (r.lhs.back() != r.rhs.back()) r.verified = false;
  }
  return r;
}

SyzygySupportReport syzygy_support(const IndecRegistry& reg, const EffPresentation& m) {
  const Algebra& a = reg.algebra();
  const PrimeField& f = a.field();
  const SubcategorySpec omega = syzygy_category(reg);
  const std::vector<std::size_t> supp = support(m);
  SyzygySupportReport r;
  for (std::size_t w : supp)
    if (omega.has(w)) r.listing.push_back(w);

  const Conflation& c = m.presenting();
  const ProjectiveCover cy = projective_cover(a, c.y()), cz = projective_cover(a, c.z());
  const ModMorphism og = syzygy_morphism(a, cy, cz, c.g);
  for (std::size_t w : omega.members) {
    if (reg.is_projective(w)) continue;
    const HomSpace target = hom_space(a, reg.module(w), og.target);
    if (target.dim() == 0) continue;
    const FpMatrix img = post_composition_image(f, hom_space(a, reg.module(w), og.source), og);
    const FpMatrix pf = projective_factoring_maps(a, reg.module(w), og.target);
    const FpMatrix both = hstack(img, pf);
    if ((both.cols() == 0 ? 0 : rank(f, both)) < target.dim()) r.sibling.push_back(w);
  }
  r.containment_verified = true;
  for (std::size_t w : r.sibling) {
    bool found = false;
    for (std::size_t s : supp)
      if (reg.summands(syzygy(a, reg.module(s)))[w] > 0) found = true;
    if (!found) r.containment_verified = false;
  }
  return r;
}

}  // namespace arex
