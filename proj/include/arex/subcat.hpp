#pragma once

#include <cstdint>
#include <vector>

#include "arex/efffun.hpp"

namespace arex {

/// The additive closure of some registry indecomposables.
struct SubcategorySpec {
  const IndecRegistry* registry = nullptr;
  std::vector<std::size_t> members;  // sorted, distinct

  bool has(std::size_t i) const;
};

/// Sorts and deduplicates; throws std::out_of_range on a bad index.
SubcategorySpec make_subcategory(const IndecRegistry& reg, std::vector<std::size_t> members);
SubcategorySpec full_subcategory(const IndecRegistry& reg);
/// Every indecomposable summand of m is a member.
bool in_subcategory(const SubcategorySpec& s, const ModuleRep& m);

/// How hard to look for surjections in a Hom space.
struct ScanOptions {
  bool strict = false;          // every element of Hom when its size is at most strict_limit
  std::uint64_t strict_limit = 1u << 16;
  int random_trials = 64;       // combinations tried once basis elements are exhausted
  std::uint64_t seed = 1;
};

bool check_extension_closed(const SubcategorySpec& s);
bool check_resolving(const SubcategorySpec& s, const ScanOptions& options = {});
bool check_torsion_class(const SubcategorySpec& s, const ScanOptions& options = {});

/// Surjective elements of Hom(m, n) found by the scan. Outside full
/// enumeration an empty result does not prove there is none.
std::vector<ModMorphism> find_surjections(const Algebra& a, const ModuleRep& m, const ModuleRep& n,
                                          const ScanOptions& options = {});

struct Approximation {
  ModuleRep source;                  // right: E_X; left: P^W
  ModMorphism map;                   // right: E_X -> X; left: W -> P^W
  std::vector<std::size_t> summands; // registry indices, one per summand of source
};

/// Minimal right add(members)-approximation of x.
Approximation right_approximation(const SubcategorySpec& s, const ModuleRep& x);
/// Minimal left add(members)-approximation of w.
Approximation left_approximation(const SubcategorySpec& s, const ModuleRep& w);

struct WeakCogeneratorReport {
  Approximation approximation;                            // of the top of the algebra
  std::vector<std::pair<std::size_t, Eigen::Index>> stable_hom;  // non-projective member -> dim
  bool verified = false;
};

/// Right approximation of Λ/rad Λ and the stable Hom from every non-projective member into it.
WeakCogeneratorReport weak_cogenerator(const SubcategorySpec& s);

struct RelativeStructure {
  SubcategorySpec sub;
  std::vector<bool> rel_projective;               // by position in sub.members
  std::vector<std::optional<Conflation>> rel_ar;  // by position in sub.members
  std::vector<std::size_t> unresolved;            // non-projective members with no verified candidate
  GenLattice rel_ex;
  GenLattice rel_ar_lattice;
  bool equal_exact = false;
};

/// Relative AR conflations: factorization tests quantified over members only.
bool verify_relative_almost_split(const SubcategorySpec& s, const Conflation& c);

/// Requires an extension-closed s; a member without a verified relative AR
/// conflation is listed in `unresolved`.
RelativeStructure relative_structure(const SubcategorySpec& s);

/// Member coordinates of a class supported on s.
IntVector member_coordinates(const SubcategorySpec& s, const K0Vector& v);

struct PerpReport {
  SubcategorySpec sub;
  bool finite_injective_dimension = false;
  bool self_orthogonal = false;
  bool resolution_of_dual = false;
  bool cotilting() const { return finite_injective_dimension && self_orthogonal && resolution_of_dual; }
};

/// Ext^i(x, u) for i >= 1 via Ext^1(Ω^{i-1} x, u), up to the bound.
bool higher_ext_vanishes(const Algebra& a, const ModuleRep& x, const ModuleRep& u, std::size_t bound);
/// Some n with Ω^n m projective, searching up to the bound; none if a syzygy repeats.
std::optional<std::size_t> projective_dimension(const Algebra& a, const ModuleRep& m, std::size_t bound);

/// Members W with Ext^{>0}(W, u) = 0, and the cotilting conditions for u.
PerpReport perp(const IndecRegistry& reg, const ModuleRep& u);

/// Indecomposables admitting an inflation into a projective.
SubcategorySpec syzygy_category(const IndecRegistry& reg);

struct AdjunctionReport {
  Conflation sequence;  // W -> P^W -> Ω⁻W
  std::vector<std::size_t> targets;
  std::vector<Eigen::Index> lhs;  // dim stable Hom(Ω⁻W, X)
  std::vector<Eigen::Index> rhs;  // dim stable Hom(W, ΩX)
  bool verified = false;
};

/// Throws NotInSyzygyCategory for w outside the syzygy category or projective.
AdjunctionReport omega_minus(const IndecRegistry& reg, std::size_t w, const std::vector<std::size_t>& targets);

struct SyzygySupportReport {
  std::vector<std::size_t> listing;  // supp M within the syzygy category
  std::vector<std::size_t> sibling;  // supp of coker stable Hom(-, Ω g) within the syzygy category
  bool containment_verified = false; // each sibling element is a summand of Ω A for some A in supp M
};

SyzygySupportReport syzygy_support(const IndecRegistry& reg, const EffPresentation& m);

}  // namespace arex
