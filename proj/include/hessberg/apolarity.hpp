#ifndef HESSBERG_APOLARITY_HPP
#define HESSBERG_APOLARITY_HPP

#include <functional>
#include <map>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/polyring.hpp"
#include "hessberg/rootsys.hpp"
#include "hessberg/volume.hpp"

namespace hessberg {

// Graded Hilbert function of R / Ann(P_H) by exact catalecticant ranks. The
// degree-k value is the rank of the pairing sending a degree-k monomial m to
// the coefficient vector of del^(m) P_H; for the regular nilpotent Hessenberg
// variety these are the even Betti numbers.

struct GradedBetti {
  std::vector<long> betti;  // b_0 .. b_d
  long d = 0;

  bool palindromic() const {
    for (std::size_t k = 0; k < betti.size(); ++k)
      if (betti[k] != betti[betti.size() - 1 - k]) return false;
    return true;
  }

  long total() const {
    long s = 0;
    for (long b : betti) s += b;
    return s;
  }
};

namespace detail {

/// Exponent vectors of total degree k in n variables, degree-lex descending
/// (x_1^k first); the order is part of the reported output.
inline std::vector<std::vector<int>> monomials_of_degree(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == n - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, rem - e);
    }
  };
  if (n == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  rec(0, k);
  return out;
}

}  // namespace detail

inline GradedBetti betti_numbers(const RootSystem& rs, const HessenbergSpace& h,
                                 long matrix_budget = 4000000) {
  VolumePolynomial vp = volume_polynomial(rs, h);
  long d = static_cast<long>(h.dimension());
  int n = rs.rank();

  GradedBetti out;
  out.d = d;
  out.betti.assign(d + 1, 0);

  // derivatives del^(m) P built level by level: the parent of m is m minus
  // its first nonzero exponent.
  std::map<std::vector<int>, Polynomial> level;
  level[std::vector<int>(n, 0)] = vp.p_h;
  out.betti[0] = vp.p_h.is_zero() ? 0 : 1;

  std::vector<Derivation> simple_der(n);
  for (int i = 0; i < n; ++i) {
    Root r;
    r.coords.assign(n, 0);
    r.coords[i] = 1;
    simple_der[i] = Derivation::from_root(rs, r);
  }

  for (long k = 1; k <= d; ++k) {
    auto rows_idx = detail::monomials_of_degree(n, static_cast<int>(k));
    auto cols_idx = detail::monomials_of_degree(n, static_cast<int>(d - k));
    if (static_cast<long>(rows_idx.size()) * static_cast<long>(cols_idx.size()) > matrix_budget)
      throw ResourceError("catalecticant matrix exceeds the linear-algebra budget");
    std::map<std::vector<int>, int> col_of;
    for (std::size_t c = 0; c < cols_idx.size(); ++c) col_of[cols_idx[c]] = static_cast<int>(c);

    std::map<std::vector<int>, Polynomial> next;
    RatMat mat(rows_idx.size(), RatVec(cols_idx.size(), 0));
    for (std::size_t r = 0; r < rows_idx.size(); ++r) {
      const auto& m = rows_idx[r];
      int first = 0;
      while (m[first] == 0) ++first;
      std::vector<int> parent = m;
      parent[first] -= 1;
      const Polynomial& pp = level.at(parent);
      Polynomial der = apply_derivation(simple_der[first], pp);
      for (const auto& [e, c] : der.terms()) mat[r][col_of.at(e)] = c;
      next.emplace(m, std::move(der));
    }
    out.betti[k] = static_cast<long>(rat_mat_rank(mat));
    level = std::move(next);
  }
  return out;
}

/// Cross-module oracle: for H = g the Hilbert function must equal the length
/// generating function of the Weyl group (the graded ring is the coinvariant
/// algebra).
inline bool check_weyl_series(const RootSystem& rs) {
  GradedBetti b = betti_numbers(rs, full_space(rs));
  const WeylGroup& wg = rs.weyl();
  if (b.betti.size() != wg.length_histogram.size()) {
    throw InternalError("coinvariant Hilbert function has wrong length for " + rs.label());
  }
  for (std::size_t k = 0; k < b.betti.size(); ++k)
    if (b.betti[k] != wg.length_histogram[k])
      throw InternalError("coinvariant Hilbert function disagrees with the Weyl length series");
  return true;
}

}  // namespace hessberg

#endif
