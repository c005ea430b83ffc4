#include "arex/intlat.hpp"

#include <algorithm>
#include <utility>

namespace arex {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void row_axpy(IntMatrix& m, Eigen::Index dst, Eigen::Index src, const BigInt& q) {
  if (q == 0) return;
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void swap_rows(IntMatrix& m, Eigen::Index a, Eigen::Index b) {
  if (a == b) return;
  for (Eigen::Index j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void negate_row(IntMatrix& m, Eigen::Index r) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Row HNF in place; returns the number of nonzero rows (which come first).
Eigen::Index hnf_in_place(IntMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        if (best < 0 || abs(m(i, c)) < abs(m(best, c))) best = i;
      }
      if (best < 0) break;
      swap_rows(m, r, best);
      bool cleared = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        row_axpy(m, i, r, floor_div(m(i, c), m(r, c)));
        if (m(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) negate_row(m, r);
    for (Eigen::Index i = 0; i < r; ++i) row_axpy(m, i, r, floor_div(m(i, c), m(r, c)));
    ++r;
  }
  return r;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix work = m;
  const Eigen::Index r = hnf_in_place(work);
  return work.topRows(r);
}

std::vector<BigInt> snf(const IntMatrix& input) {
  IntMatrix m = input;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<BigInt> diag;
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry of the trailing block as pivot
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    swap_rows(m, t, pr);
    if (pc != t)
      for (Eigen::Index i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));
    bool done = false;
    while (!done) {
      done = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        row_axpy(m, i, t, floor_div(m(i, t), m(t, t)));
        if (m(i, t) != 0) {
          swap_rows(m, t, i);
          done = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = floor_div(m(t, j), m(t, t));
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) {
          for (Eigen::Index i = 0; i < rows; ++i) std::swap(m(i, t), m(i, j));
          done = false;
        }
      }
      if (!done) continue;
      // the pivot must divide the whole trailing block
      for (Eigen::Index i = t + 1; i < rows && done; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (Eigen::Index k = 0; k < cols; ++k) m(t, k) += m(i, k);
            done = false;
            break;
          }
    }
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const Eigen::Index r = m.rows(), n = m.cols();
  // Row-reduce [m^T | I]; rows whose left part vanishes span the kernel.
  IntMatrix aug = IntMatrix::Zero(n, r + n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) aug(i, j) = m(j, i);
    aug(i, r + i) = 1;
  }
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < r && row < n; ++c) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = row; i < n; ++i) {
        if (aug(i, c) == 0) continue;
        if (best < 0 || abs(aug(i, c)) < abs(aug(best, c))) best = i;
      }
      if (best < 0) break;
      swap_rows(aug, row, best);
      bool cleared = true;
      for (Eigen::Index i = row + 1; i < n; ++i) {
        if (aug(i, c) == 0) continue;
        row_axpy(aug, i, row, floor_div(aug(i, c), aug(row, c)));
        if (aug(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (aug(row, c) != 0) ++row;
  }
  IntMatrix k = aug.bottomRightCorner(n - row, n);
  return hnf(k);
}

GenLattice::GenLattice(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, static_cast<Eigen::Index>(ambient_rank)) {}

GenLattice::GenLattice(std::size_t ambient_rank, const IntMatrix& generators)
    : ambient_rank_(ambient_rank) {
  if (generators.rows() > 0 && static_cast<std::size_t>(generators.cols()) != ambient_rank)
    throw DimensionMismatch("generator length does not match ambient rank");
  if (generators.rows() == 0)
    basis_ = IntMatrix(0, static_cast<Eigen::Index>(ambient_rank));
  else
    basis_ = hnf(generators);
}

bool operator==(const GenLattice& a, const GenLattice& b) {
  return a.ambient_rank_ == b.ambient_rank_ && identical(a.basis_, b.basis_);
}

GenLattice lattice_from_generators(std::size_t ambient_rank, const std::vector<IntVector>& gens) {
  IntMatrix stacked(static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(ambient_rank));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (static_cast<std::size_t>(gens[i].size()) != ambient_rank)
      throw DimensionMismatch("generator length does not match ambient rank");
    stacked.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  }
  return GenLattice(ambient_rank, stacked);
}

bool contains(const GenLattice& l, const IntVector& v) {
  if (static_cast<std::size_t>(v.size()) != l.ambient_rank())
    throw DimensionMismatch("vector length does not match ambient rank");
  IntVector residue = v;
  const IntMatrix& b = l.basis();
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < residue.size(); ++c) {
    const bool pivot_here = row < b.rows() && b(row, c) != 0;
    if (!pivot_here) {
      if (residue(c) != 0) return false;
      continue;
    }
    if (residue(c) % b(row, c) != 0) return false;
    const BigInt q = residue(c) / b(row, c);
    for (Eigen::Index j = c; j < residue.size(); ++j) residue(j) -= q * b(row, j);
    ++row;
  }
  return true;
}

bool equal(const GenLattice& a, const GenLattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw DimensionMismatch("lattices live in different ambient groups");
  return a == b;
}

GenLattice saturation(const GenLattice& l) {
  const auto n = static_cast<Eigen::Index>(l.ambient_rank());
  if (l.rank() == 0) return l;
  // Integer points of the rational span: the annihilator of the annihilator.
  const IntMatrix orth = integer_kernel(l.basis());
  if (orth.rows() == 0) return GenLattice(l.ambient_rank(), IntMatrix::Identity(n, n));
  return GenLattice(l.ambient_rank(), integer_kernel(orth));
}

QuotientInvariants quotient_invariants(std::size_t ambient_rank, const GenLattice& l) {
  if (l.ambient_rank() != ambient_rank)
    throw DimensionMismatch("lattice does not live in the requested ambient group");
  QuotientInvariants q;
  q.free_rank = ambient_rank - l.rank();
  for (const BigInt& d : snf(l.basis()))
    if (d > 1) q.torsion.push_back(d);
  return q;
}

bool identical(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

IntMatrix to_int_matrix(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return m;
}

}  // namespace arex
