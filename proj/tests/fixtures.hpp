#pragma once

#include <string>
#include <vector>

#include "arex/algebra.hpp"

namespace arex::testing {

// 1 -> 2 -> ... -> n, no relations.
inline Algebra linear_a(std::size_t n, std::int64_t p = 2) {
  QuiverPresentation q;
  q.field_char = p;
  for (std::size_t v = 0; v < n; ++v) q.vertices.push_back(std::to_string(v + 1));
  for (std::size_t v = 0; v + 1 < n; ++v) q.arrows.push_back({"a" + std::to_string(v + 1), v, v + 1});
  return build_algebra(q);
}

// One loop x with x^n = 0.
inline Algebra truncated_loop(std::size_t n, std::int64_t p = 2) {
  QuiverPresentation q;
  q.field_char = p;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  q.relations = {std::vector<std::string>(n, "x")};
  return build_algebra(q);
}

inline Algebra semisimple(std::size_t n, std::int64_t p = 2) {
  QuiverPresentation q;
  q.field_char = p;
  for (std::size_t v = 0; v < n; ++v) q.vertices.push_back(std::to_string(v + 1));
  return build_algebra(q);
}

// Interval module [i, j] (1-based, inclusive) over linear_a(n): identities along the support.
inline ModuleRep interval(const Algebra& a, std::size_t i, std::size_t j) {
  ModuleRep m = zero_module(a);
  for (std::size_t v = i - 1; v < j; ++v) m.dims[v] = 1;
  for (std::size_t k = 0; k < a.num_arrows(); ++k) {
    const std::size_t s = a.arrow(k).source, t = a.arrow(k).target;
    m.action[k] = FpMatrix::Zero(m.dims[t], m.dims[s]);
    if (m.dims[s] == 1 && m.dims[t] == 1) m.action[k](0, 0) = 1;
  }
  return m;
}

// k[x]/x^n module k[x]/x^r: a single Jordan block of size r.
inline ModuleRep jordan(std::size_t r) {
  ModuleRep m;
  m.dims = {static_cast<Eigen::Index>(r)};
  FpMatrix x = FpMatrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (Eigen::Index k = 0; k + 1 < static_cast<Eigen::Index>(r); ++k) x(k + 1, k) = 1;
  m.action = {x};
  return m;
}

}  // namespace arex::testing
