#include "arex/fp.hpp"

#include <stdexcept>
#include <string>

namespace arex {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p) || p >= kMaxCharacteristic)
    throw std::invalid_argument("field characteristic must be a prime below 2^20, got " +
                                std::to_string(p));
}

std::int64_t PrimeField::pow(std::int64_t a, std::uint64_t e) const {
  std::int64_t base = reduce(a), acc = 1;
  while (e > 0) {
    if (e & 1u) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return acc;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, static_cast<std::uint64_t>(p_ - 2));
}

Echelon row_reduce(const PrimeField& f, FpMatrix m) {
  Echelon out;
  const std::int64_t p = f.characteristic();
  const Eigen::Index rows = m.rows(), cols = m.cols();
  auto mod = [p](std::int64_t a) { return a % p; };
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Eigen::Index w = cols - c;
    const std::int64_t s = f.inv(m(r, c));
    m.row(r).tail(w) = (m.row(r).tail(w) * s).unaryExpr(mod);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const std::int64_t t = p - m(i, c);
      m.row(i).tail(w) = (m.row(i).tail(w) + t * m.row(r).tail(w)).unaryExpr(mod);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(m);
  return out;
}

Eigen::Index rank(const PrimeField& f, const FpMatrix& m) {
  if (m.size() == 0) return 0;
  return row_reduce(f, m).rank();
}

FpMatrix kernel(const PrimeField& f, const FpMatrix& m) {
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return FpMatrix::Identity(n, n);
  const Echelon e = row_reduce(f, m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  FpMatrix out(n, n - e.rank());
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    out.col(k).setZero();
    out(free, k) = 1;
    for (Eigen::Index i = 0; i < e.rank(); ++i)
      out(e.pivots[static_cast<std::size_t>(i)], k) = f.reduce(-e.rref(i, free));
    ++k;
  }
  return out;
}

FpMatrix column_basis(const PrimeField& f, const FpMatrix& m) {
  if (m.cols() == 0 || m.rows() == 0) return FpMatrix(m.rows(), 0);
  const Echelon e = row_reduce(f, m);
  FpMatrix out(m.rows(), e.rank());
  for (Eigen::Index i = 0; i < e.rank(); ++i) out.col(i) = m.col(e.pivots[static_cast<std::size_t>(i)]);
  return out;
}

FpMatrix relative_complement(const PrimeField& f, const FpMatrix& sub, const FpMatrix& space) {
  const Eigen::Index n = space.rows();
  IncrementalSpan span(f, n);
  for (Eigen::Index j = 0; j < sub.cols(); ++j) span.add(sub.col(j));
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index j = 0; j < space.cols(); ++j)
    if (span.add(space.col(j))) chosen.push_back(j);
  FpMatrix out(n, static_cast<Eigen::Index>(chosen.size()));
  for (std::size_t k = 0; k < chosen.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = space.col(chosen[k]);
  return out;
}

FpMatrix complement_basis(const PrimeField& f, const FpMatrix& basis, Eigen::Index n) {
  FpMatrix sub = basis.cols() == 0 ? FpMatrix(n, 0) : basis;
  return relative_complement(f, sub, FpMatrix::Identity(n, n));
}

std::optional<FpMatrix> solve(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) {
    if (b.size() != 0 && !(b.array() == 0).all()) return std::nullopt;
    return FpMatrix(FpMatrix::Zero(n, b.cols()));
  }
  const Echelon e = row_reduce(f, hstack(a, b));
  FpMatrix x = FpMatrix::Zero(n, b.cols());
  for (Eigen::Index i = 0; i < e.rank(); ++i) {
    const Eigen::Index c = e.pivots[static_cast<std::size_t>(i)];
    if (c >= n) return std::nullopt;
    x.row(c) = e.rref.row(i).tail(b.cols());
  }
  return x;
}

std::optional<FpMatrix> inverse(const PrimeField& f, const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return FpMatrix(0, 0);
  if (rank(f, m) != m.rows()) return std::nullopt;
  return solve(f, m, FpMatrix::Identity(m.rows(), m.rows()));
}

bool in_span(const PrimeField& f, const FpMatrix& basis, const FpMatrix& v) {
  if (v.size() == 0 || (v.array() == 0).all()) return true;
  if (basis.cols() == 0) return false;
  return solve(f, basis, v).has_value();
}

FpMatrix intersect(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
  const Eigen::Index n = a.rows();
  if (a.cols() == 0 || b.cols() == 0) return FpMatrix(n, 0);
  // a x = b y  <=>  [a | -b] (x; y) = 0
  const FpMatrix k = kernel(f, hstack(a, f.reduce(-b)));
  return column_basis(f, f.reduce(a * k.topRows(a.cols())));
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

FpMatrix mat_pow(const PrimeField& f, const FpMatrix& m, std::uint64_t e) {
  FpMatrix base = m;
  FpMatrix acc = FpMatrix::Identity(m.rows(), m.cols());
  while (e > 0) {
    if (e & 1u) acc = f.reduce(acc * base);
    e >>= 1u;
    if (e > 0) base = f.reduce(base * base);
  }
  return acc;
}

FpVector IncrementalSpan::reduce(FpVector v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::int64_t c = v(pivots_[k]);
    if (c != 0) v = f_.reduce(v - c * rows_[k]);
  }
  return v;
}

bool IncrementalSpan::contains(const FpVector& v) const {
  const FpVector r = reduce(v);
  return r.size() == 0 || (r.array() == 0).all();
}

bool IncrementalSpan::add(const FpVector& v) {
  FpVector r = reduce(v);
  Eigen::Index p = 0;
  while (p < r.size() && r(p) == 0) ++p;
  if (p == r.size()) return false;
  r = f_.reduce(r * f_.inv(r(p)));
  for (auto& row : rows_)
    if (row(p) != 0) row = f_.reduce(row - row(p) * r);
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

FpMatrix IncrementalSpan::basis() const {
  FpMatrix out(n_, dim());
  for (std::size_t k = 0; k < rows_.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = rows_[k];
  return out;
}

}  // namespace arex
