#pragma once

#include <vector>

#include "arex/arquiver.hpp"
#include "arex/intlat.hpp"

namespace arex {

/// Coordinates in K0(E,0), indexed by registry order.
struct K0Vector {
  IntVector coords;
};

K0Vector operator+(const K0Vector& a, const K0Vector& b);
K0Vector operator-(const K0Vector& a, const K0Vector& b);
bool operator==(const K0Vector& a, const K0Vector& b);

/// Summand multiplicities of m; throws UnknownSummand.
K0Vector class_of(const IndecRegistry& reg, const ModuleRep& m);
/// [X] - [Y] + [Z].
K0Vector class_of(const IndecRegistry& reg, const Conflation& c);
/// Class of the AR conflation ending at the non-projective z.
K0Vector ar_class(const IndecRegistry& reg, std::size_t z);

/// Classes of conflations between indecomposables: every Ext^1 class up to
/// scalars when Ext^1 has at most 4096 elements, a basis otherwise.
GenLattice ex_lattice(const IndecRegistry& reg);
GenLattice ar_lattice(const IndecRegistry& reg);

struct ExArVerdict {
  GenLattice ar_lattice;
  GenLattice ex_lattice;
  bool equal_exact = false;
  bool equal_rational = false;
  std::size_t k0_free_rank = 0;
  std::vector<BigInt> k0_torsion;
};

ExArVerdict check_ar_eq_ex(const IndecRegistry& reg);

}  // namespace arex
