#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arex/algebra.hpp"

namespace arex {

/// A certified short exact sequence 0 -> x -f-> y -g-> z -> 0.
struct Conflation {
  ModMorphism f;
  ModMorphism g;

  const ModuleRep& x() const { return f.source; }
  const ModuleRep& y() const { return f.target; }
  const ModuleRep& z() const { return g.target; }
};

/// Vertexwise exactness plus validity of both maps.
bool verify_conflation(const Algebra& a, const Conflation& c);

Conflation split_conflation(const Algebra& a, const ModuleRep& x, const ModuleRep& z);
Conflation direct_sum(const Conflation& c1, const Conflation& c2);

/// A direct sum of indecomposable projectives P_{tops[0]} ⊕ P_{tops[1]} ⊕ ...
/// with its path basis: basis vector k at vertex w is the path
/// labels[w][k].second starting at the top of summand labels[w][k].first.
struct FreeModule {
  ModuleRep module;
  std::vector<std::size_t> tops;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> labels;
  std::vector<Eigen::Index> generator;  // coordinate of e_{tops[i]} at vertex tops[i]

  Eigen::Index coordinate(std::size_t vertex, std::size_t summand, std::size_t path) const;
};

FreeModule free_module(const Algebra& a, const std::vector<std::size_t>& tops);

/// The unique morphism sending the generator of summand i to images[i],
/// a vector in target(tops[i]).
ModMorphism morphism_from_generators(const Algebra& a, const FreeModule& p, const ModuleRep& target,
                                     const std::vector<FpVector>& images);

ModuleRep indecomposable_projective(const Algebra& a, std::size_t v);
ModuleRep indecomposable_injective(const Algebra& a, std::size_t v);

/// Minimal projective cover built from the top of m.
struct ProjectiveCover {
  FreeModule free;
  ModMorphism cover;  // P ↠ m
  Subobject kernel;   // Ω m ↣ P
  Conflation sequence() const { return Conflation{kernel.inclusion, cover}; }
};

ProjectiveCover projective_cover(const Algebra& a, const ModuleRep& m);
ModuleRep syzygy(const Algebra& a, const ModuleRep& m);
/// Omega(h) for h: m -> n: a lift of h to the covers restricted to the kernels.
ModMorphism syzygy_morphism(const Algebra& a, const ProjectiveCover& cm, const ProjectiveCover& cn,
                            const ModMorphism& h);
ModuleRep top_module(const Algebra& a, const ModuleRep& m);

bool is_projective(const Algebra& a, const ModuleRep& m);
bool is_injective(const Algebra& a, const ModuleRep& m);

/// Tr m over a.opposite(), from the minimal presentation P1 -> P0 -> m.
ModuleRep transpose(const Algebra& a, const ModuleRep& m);
/// D Tr; throws IsProjective.
ModuleRep tau(const Algebra& a, const ModuleRep& m);
/// Tr D; throws IsInjective.
ModuleRep tau_inverse(const Algebra& a, const ModuleRep& m);

/// Ext^1(z, x) = Hom(Ω z, x) / (restrictions of Hom(P_0, x)).
struct ExtGroup {
  ProjectiveCover cover;  // of z
  HomSpace cocycles;      // Hom(Ω z, x)
  FpMatrix coboundaries;  // basis, hom coordinates of Hom(Ω z, x)
  FpMatrix classes;       // cocycles completing coboundaries to a basis of Hom(Ω z, x)

  Eigen::Index dim() const { return classes.cols(); }
  const ModuleRep& z() const { return cover.cover.target; }
  const ModuleRep& x() const { return cocycles.target; }
};

ExtGroup ext1(const Algebra& a, const ModuleRep& z, const ModuleRep& x);
/// Pushout of 0 -> Ω z -> P_0 -> z -> 0 along the cocycle with the given hom coordinates.
Conflation realize_extension(const Algebra& a, const ExtGroup& e, const FpVector& cocycle);
std::vector<Conflation> ext1_basis(const Algebra& a, const ModuleRep& z, const ModuleRep& x);
Eigen::Index ext1_dim(const Algebra& a, const ModuleRep& z, const ModuleRep& x);

/// The new conflation together with the comparison map into (pullback) or
/// out of (pushout) the old middle term.
struct BaseChange {
  Conflation conflation;
  ModMorphism comparison;
};

BaseChange pullback(const Algebra& a, const Conflation& c, const ModMorphism& phi);
BaseChange pushout(const Algebra& a, const Conflation& c, const ModMorphism& alpha);

/// Some k with g k = h (h: W -> Z, g: Y -> Z).
std::optional<ModMorphism> factor_through(const Algebra& a, const ModMorphism& h, const ModMorphism& g);
/// Some k with k f = h (h: X -> W, f: X -> Y).
std::optional<ModMorphism> extend_along(const Algebra& a, const ModMorphism& h, const ModMorphism& f);

/// Columns: flatten(g k) for the basis k of hom (a Hom(W, Y)), i.e. the image of
/// Hom(W, g) in the coordinates of Hom(W, Z).
FpMatrix post_composition_image(const PrimeField& f, const HomSpace& hom, const ModMorphism& g);
/// Columns: flatten(k f) for the basis k of hom (a Hom(Y, W)).
FpMatrix pre_composition_image(const PrimeField& f, const HomSpace& hom, const ModMorphism& g);

/// Maps factoring through a projective, as a subspace of Hom(w, x).
FpMatrix projective_factoring_maps(const Algebra& a, const ModuleRep& w, const ModuleRep& x);
Eigen::Index stable_hom_dim(const Algebra& a, const ModuleRep& w, const ModuleRep& x);

/// Basis of { c : m c ∈ span(s) }.
FpMatrix preimage(const PrimeField& f, const FpMatrix& m, const FpMatrix& s);

}  // namespace arex
