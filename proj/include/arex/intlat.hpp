#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "arex/fp.hpp"

namespace arex {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical row Hermite normal form: zero rows dropped, pivot columns strictly
/// increasing, pivots positive, entries above a pivot reduced into [0, pivot).
IntMatrix hnf(const IntMatrix& m);

/// Invariant factors d_1 | d_2 | ... of m (nonzero ones only, ones included).
std::vector<BigInt> snf(const IntMatrix& m);

/// Integer basis (as rows) of { x in Z^n : m x = 0 }, n = m.cols().
IntMatrix integer_kernel(const IntMatrix& m);

/// A subgroup of Z^n held by its canonical HNF basis, so equality of
/// subgroups is entrywise equality of bases.
class GenLattice {
 public:
  explicit GenLattice(std::size_t ambient_rank = 0);
  GenLattice(std::size_t ambient_rank, const IntMatrix& generators);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return static_cast<std::size_t>(basis_.rows()); }

  friend bool operator==(const GenLattice& a, const GenLattice& b);

 private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

GenLattice lattice_from_generators(std::size_t ambient_rank, const std::vector<IntVector>& gens);

/// Successive pivot elimination with exact divisibility checks.
bool contains(const GenLattice& l, const IntVector& v);

/// Throws DimensionMismatch if the ambient ranks differ.
bool equal(const GenLattice& a, const GenLattice& b);

/// Smallest subgroup containing l with torsion-free quotient.
GenLattice saturation(const GenLattice& l);

struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
};

/// Structure of Z^ambient_rank / l.
QuotientInvariants quotient_invariants(std::size_t ambient_rank, const GenLattice& l);

/// Same shape and entries.
bool identical(const IntMatrix& a, const IntMatrix& b);

IntMatrix to_int_matrix(const std::vector<std::vector<long long>>& rows, std::size_t cols);

}  // namespace arex
