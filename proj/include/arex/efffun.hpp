#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "arex/groth.hpp"

namespace arex {

/// M(W) = Hom(W, Z) / Hom(W, g)(Hom(W, Y)), all in hom coordinates of Hom(W, Z).
struct EffValue {
  HomSpace hom;          // Hom(W, Z)
  FpMatrix image;        // basis of the image of Hom(W, g)
  FpMatrix complement;   // basis vectors of Hom(W, Z) completing `image`

  Eigen::Index k_dimension() const { return complement.cols(); }
  /// Hom element represented by a vector of M(W) in complement coordinates.
  FpVector lift(const PrimeField& f, const FpVector& v) const;
  /// Complement coordinates of the class of a Hom(W, Z) element.
  FpVector coordinates(const PrimeField& f, const FpVector& hom_coords) const;
};

/// M = coker Hom(-, g) for a presenting conflation, evaluated eagerly at every
/// registry object, so concurrent reads need no locking.
class EffPresentation {
 public:
  EffPresentation(const IndecRegistry& reg, Conflation presenting);

  const IndecRegistry& registry() const { return *reg_; }
  const Conflation& presenting() const { return presenting_; }
  const EffValue& value(std::size_t w) const { return values_.at(w); }

 private:
  const IndecRegistry* reg_;
  Conflation presenting_;
  std::vector<EffValue> values_;
};

const EffValue& evaluate(const EffPresentation& m, std::size_t w);
std::vector<std::size_t> support(const EffPresentation& m);

struct MultiplicityVector {
  std::vector<int> mults;  // by registry index
  int length() const;
};

/// dim M(W) / division degree of W; throws NonIntegralMultiplicity.
MultiplicityVector multiplicities(const EffPresentation& m);

/// Multiplicities of the cokernel functor of c, asserting
/// class_of(c) = sum m_W class_of(ar_sequence(W)); throws IdentityViolated.
MultiplicityVector decompose_into_ar(const IndecRegistry& reg, const Conflation& c);

struct EffacementWitness {
  ModMorphism phi;         // W -> Z lifting v
  BaseChange pulled_back;  // deflation psi = pulled_back.conflation.g : E ->> W
  bool verified = false;   // (M psi)(v) = 0
};

/// v in complement coordinates of M(W), nonzero.
EffacementWitness effacement_witness(const EffPresentation& m, std::size_t w, const FpVector& v);

/// a: X1 -> X2, b: Y1 -> Y2, c: Z1 -> Z2.
struct ConflationMorphism {
  ModMorphism a;
  ModMorphism b;
  ModMorphism c;
};

/// b f1 = f2 a and c g1 = g2 b.
bool is_conflation_morphism(const Algebra& alg, const Conflation& c1, const Conflation& c2, const ConflationMorphism& t);

/// The map M1(W) -> M2(W) induced by t.c, in complement coordinates.
FpMatrix induced_map(const EffPresentation& m1, const EffPresentation& m2, const ModMorphism& c, std::size_t w);

/// Some triple extending c, if c g1 factors through g2.
std::optional<ConflationMorphism> lift_to_triple(const Algebra& alg, const Conflation& c1, const Conflation& c2,
                                                 const ModMorphism& c);

/// Uniformly random triple from the space of all morphisms c1 -> c2.
ConflationMorphism random_triple(const Algebra& alg, const Conflation& c1, const Conflation& c2, std::mt19937_64& rng);

struct KerImCoker {
  EffPresentation kernel;
  EffPresentation image;
  EffPresentation cokernel;
};

/// With E the pushout of the top conflation along a: kernel presented by
/// X2 ⊕ Y1 ->> E, image by E ->> Z1, cokernel by Y2 ⊕ Z1 ->> Z2. Throws NonCommuting.
KerImCoker ker_im_coker(const EffPresentation& m1, const EffPresentation& m2, const ConflationMorphism& t);

struct AdmissibilityReport {
  bool admissible = true;
  int max_length = 0;
  std::size_t presentations = 0;
};

/// Lengths of the cokernel functors of every Ex generator and every AR conflation.
AdmissibilityReport check_admissible(const IndecRegistry& reg);

struct CFVerdict {
  bool supports_equal = false;
  bool lengths_equal = false;
  std::vector<std::size_t> support1, support2;
  int length1 = 0, length2 = 0;
};

/// Throws ClassMismatch unless class_of(c1) = class_of(c2).
CFVerdict check_cf_pair(const IndecRegistry& reg, const Conflation& c1, const Conflation& c2);

/// c ⊕ (x -> x ⊕ z -> z); same class as c.
Conflation pad_with_split(const Algebra& alg, const Conflation& c, const ModuleRep& x, const ModuleRep& z);

}  // namespace arex
