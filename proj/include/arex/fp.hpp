#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace arex {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Entries of F_p matrices are stored reduced to [0, p).
using FpMatrix = Matrix<std::int64_t>;
using FpVector = Vector<std::int64_t>;

/// The prime field F_p. Products of reduced matrices are exact in int64 as
/// long as inner dimensions stay below 2^20, which the field bound guarantees
/// for every module we build.
class PrimeField {
 public:
  static constexpr std::int64_t kMaxCharacteristic = (std::int64_t{1} << 20);

  explicit PrimeField(std::int64_t p = 2);

  std::int64_t characteristic() const { return p_; }

  std::int64_t reduce(std::int64_t a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  template <typename Derived>
  FpMatrix reduce(const Eigen::MatrixBase<Derived>& m) const {
    return m.unaryExpr([this](std::int64_t a) { return reduce(a); });
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(a * b); }
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::uint64_t e) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  FpMatrix rref;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

Echelon row_reduce(const PrimeField& f, FpMatrix m);

Eigen::Index rank(const PrimeField& f, const FpMatrix& m);

/// Columns form a basis of { x : m x = 0 }, one per free column of the rref,
/// in increasing free-column order.
FpMatrix kernel(const PrimeField& f, const FpMatrix& m);

/// A maximal independent subset of the columns of m, in column order.
FpMatrix column_basis(const PrimeField& f, const FpMatrix& m);

/// Standard basis vectors e_i (increasing i) extending the column span of
/// `basis` to the whole of F_p^n.
FpMatrix complement_basis(const PrimeField& f, const FpMatrix& basis, Eigen::Index n);

/// Extends the columns of `sub` (a basis of a subspace of span(`space`)) by
/// columns of `space`, in order, to a basis of span(`space`). Only the added
/// columns are returned.
FpMatrix relative_complement(const PrimeField& f, const FpMatrix& sub, const FpMatrix& space);

/// Some x with a x = b, if one exists.
std::optional<FpMatrix> solve(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const PrimeField& f, const FpMatrix& m);

bool in_span(const PrimeField& f, const FpMatrix& basis, const FpMatrix& v);

/// Basis of span(a) ∩ span(b) as columns.
FpMatrix intersect(const PrimeField& f, const FpMatrix& a, const FpMatrix& b);

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

/// A subspace of F_p^n grown one vector at a time, kept in reduced echelon
/// form so membership costs one reduction.
class IncrementalSpan {
 public:
  IncrementalSpan(const PrimeField& f, Eigen::Index n) : f_(f), n_(n) {}

  /// Adds v; returns false if v was already in the span.
  bool add(const FpVector& v);
  bool contains(const FpVector& v) const;
  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  FpMatrix basis() const;

 private:
  FpVector reduce(FpVector v) const;

  PrimeField f_;
  Eigen::Index n_;
  std::vector<FpVector> rows_;
  std::vector<Eigen::Index> pivots_;
};

FpMatrix mat_pow(const PrimeField& f, const FpMatrix& m, std::uint64_t e);

}  // namespace arex
