#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arex/decompose.hpp"
#include "arex/homological.hpp"

namespace arex {

/// The indecomposables of a finite-type algebra up to isomorphism, sorted by
/// (total dimension, dimension vector, discovery order), with their AR
/// conflations. Immutable once built.
class IndecRegistry {
 public:
  const Algebra& algebra() const { return algebra_; }
  std::size_t size() const { return entries_.size(); }

  const ModuleRep& module(std::size_t i) const { return entries_.at(i).module; }
  const LocalEnd& end(std::size_t i) const { return entries_.at(i).end; }
  Eigen::Index division_degree(std::size_t i) const { return entries_.at(i).end.division_degree; }
  bool is_projective(std::size_t i) const { return entries_.at(i).projective; }
  bool is_injective(std::size_t i) const { return entries_.at(i).injective; }
  /// Dimension vector, with "#k" appended when several indecomposables share it.
  const std::string& label(std::size_t i) const { return entries_.at(i).label; }
  std::optional<std::size_t> index_of_label(const std::string& label) const;

  /// Index of the class of an indecomposable module.
  std::optional<std::size_t> find(const ModuleRep& m) const;
  /// Multiplicity of each registry class in m; throws UnknownSummand.
  std::vector<int> summands(const ModuleRep& m) const;

  /// The verified AR conflation ending at z; throws IsProjective.
  const Conflation& ar_sequence(std::size_t z) const;
  std::optional<std::size_t> tau(std::size_t z) const { return entries_.at(z).tau; }

 private:
  struct Entry {
    ModuleRep module;
    LocalEnd end;
    bool projective = false;
    bool injective = false;
    std::size_t discovery = 0;
    std::string label;
    std::optional<std::size_t> tau;
    std::optional<Conflation> ar;
  };

  explicit IndecRegistry(Algebra a) : algebra_(std::move(a)) {}

  Algebra algebra_;
  std::vector<Entry> entries_;

  friend IndecRegistry enumerate_indecomposables(const Algebra& a, std::size_t bound);
};

/// Knitting from projectives and injectives; throws BoundExceeded.
IndecRegistry enumerate_indecomposables(const Algebra& a, std::size_t bound = 256);

/// Non-split extensions of z by tau z spanning the socle of Ext^1(z, tau z)
/// over End(z). Candidates, not yet verified.
std::vector<Conflation> ar_candidates(const Algebra& a, const ModuleRep& z, const LocalEnd& end_z);

/// Realizations of a basis of the socle of Ext^1(z, x) under the action of
/// rad End(z), plus their sum when there are several. Empty if Ext^1 vanishes.
std::vector<Conflation> ext_socle_candidates(const Algebra& a, const ModuleRep& z, const LocalEnd& end_z,
                                             const ModuleRep& x);

const Conflation& ar_sequence(const IndecRegistry& reg, std::size_t z);

/// Every radical map from a registry object into z factors through g, every
/// radical map out of x factors through f, and c does not split.
bool verify_almost_split(const IndecRegistry& reg, const Conflation& c);

struct ArrowEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  int multiplicity = 0;
};

struct ARQuiverGraph {
  std::vector<std::size_t> nodes;
  std::vector<ArrowEdge> edges;
  std::map<std::size_t, std::size_t> translation;  // z -> tau z
};

ARQuiverGraph build_ar_quiver(const IndecRegistry& reg);

}  // namespace arex
