#ifndef HESSBERG_LINALG_HPP
#define HESSBERG_LINALG_HPP

#include <cstddef>

#include "hessberg/rational.hpp"

namespace hessberg {

// Small exact linear algebra over Q used for Cartan inverses, regular-element
// matrices and catalecticant ranks. Sizes here are tiny; plain Gaussian
// elimination over mpq is exact and fast enough.

inline RatMat rat_identity(std::size_t n) {
  RatMat m(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  RatMat out(r, RatVec(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

inline RatVec rat_mat_vec(const RatMat& a, const RatVec& v) {
  RatVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline bool rat_mat_eq(const RatMat& a, const RatMat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline RatMat rat_mat_inverse(const RatMat& m) {
  std::size_t n = m.size();
  RatMat a = m;
  RatMat inv = rat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InternalError("rat_mat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Rank over Q by exact elimination; no thresholds involved.
inline std::size_t rat_mat_rank(RatMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (a[row][col] == 0) continue;
      Rat f = a[row][col] / a[rank][col];
      for (std::size_t j = col; j < cols; ++j) a[row][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline RatMat rat_mat_from_int(const IntMat& m) {
  RatMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = RatVec(m[i].begin(), m[i].end());
  return out;
}

inline IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntMat out(r, IntVec(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  return out;
}

inline IntVec int_mat_vec(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline IntMat int_identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace hessberg

#endif
