#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arex/algebra.hpp"

namespace arex {

/// End(M) of an indecomposable M together with its radical.
struct LocalEnd {
  HomSpace endomorphisms;
  FpMatrix radical;  // basis columns, hom coordinates
  Eigen::Index division_degree = 1;  // dim End(M) / rad End(M)
};

/// Some LocalEnd if End(m) is local, nothing if m splits (or is zero).
std::optional<LocalEnd> local_endomorphisms(const Algebra& a, const ModuleRep& m);

/// An indecomposable direct summand with a split inclusion into the parent.
struct Piece {
  ModuleRep module;
  ModMorphism inclusion;
  ModMorphism projection;
  LocalEnd end;
};

/// Krull-Schmidt decomposition with explicit inclusions and projections.
std::vector<Piece> indecomposable_pieces(const Algebra& a, const ModuleRep& m);

struct Summand {
  ModuleRep module;
  int multiplicity = 0;
};

/// Isomorphism classes of summands in order of first appearance.
std::vector<Summand> decompose(const Algebra& a, const ModuleRep& m);

bool is_indecomposable(const Algebra& a, const ModuleRep& m);

/// m ≅ n for indecomposable m with known End(m): some g f ∉ rad End(m).
std::optional<ModMorphism> iso_between_indecomposables(const Algebra& a, const ModuleRep& m, const LocalEnd& end_m,
                                                       const ModuleRep& n);

struct IsoOptions {
  int trial_bound = 64;
  std::uint64_t seed = 1;
};

/// An explicit isomorphism m -> n if one exists.
std::optional<ModMorphism> is_iso(const Algebra& a, const ModuleRep& m, const ModuleRep& n,
                                  const IsoOptions& options = {});

/// rad(m, n) as a subspace of Hom(m, n), given the endomorphism data of m.
FpMatrix radical_hom(const Algebra& a, const ModuleRep& m, const LocalEnd& end_m, const ModuleRep& n);

/// Basis of rad(m, n); throws NotIndecomposable.
std::vector<ModMorphism> rad_hom_basis(const Algebra& a, const ModuleRep& m, const ModuleRep& n);

}  // namespace arex
