#ifndef HESSBERG_VOLUME_HPP
#define HESSBERG_VOLUME_HPP

#include <cstdint>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/polyring.hpp"
#include "hessberg/prng.hpp"
#include "hessberg/rootsys.hpp"

namespace hessberg {

// Two independent volume computations for a Hessenberg space H and a weight
// lambda: the differential-operator polynomial P_H evaluated at lambda, and
// the fixed-point localization sum over the Weyl group. They must agree
// exactly, and the test batteries enforce that.

struct VolumePolynomial {
  Polynomial p_h;         // homogeneous of degree |Phi_H|
  Rat z_constant;         // prod_{alpha>0} (alpha, rho)
  HessenbergSpace hessenberg;
};

/// P_H = (1/Z) (prod_{alpha not in Phi_H} del_alpha) prod_{alpha>0} alpha.
inline VolumePolynomial volume_polynomial(const RootSystem& rs, const HessenbergSpace& h) {
  Polynomial prod = Polynomial::constant(rs.rank(), 1);
  Rat z = 1;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    prod = prod * root_form(rs, rs.root(k));
    z *= rs.inner(rs.root(k), rs.rho());
  }
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    if (h.contains(static_cast<int>(k))) continue;
    prod = apply_derivation(Derivation::from_root(rs, rs.root(k)), prod);
  }
  VolumePolynomial vp;
  vp.p_h = prod * (Rat(1) / z);
  vp.z_constant = z;
  vp.hessenberg = h;
  long d = static_cast<long>(h.dimension());
  if (!vp.p_h.is_homogeneous(d)) throw InternalError("P_H is not homogeneous of degree |Phi_H|");
  if (evaluate_at_weight(rs, vp.p_h, rs.rho()) <= 0)
    throw InternalError("P_H(rho) must be positive");
  return vp;
}

inline Rat volume(const RootSystem& rs, const VolumePolynomial& vp, const Weight& lambda) {
  return evaluate_at_weight(rs, vp.p_h, lambda);
}

struct LocalizationResult {
  Rat value;
  std::uint64_t seed;
  IntVec xi;  // the first generic point used (recorded for reproducibility)
};

namespace detail {

/// Generic integer point with (beta, xi) != 0 for every root beta.
inline IntVec sample_generic_point(const RootSystem& rs, Rng& rng, long lo, long hi,
                                   int max_tries = 200) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    IntVec xi(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) xi[i] = rng.uniform(lo, hi);
    RatVec xir(xi.begin(), xi.end());
    bool ok = true;
    for (std::size_t k = 0; k < rs.num_positive_roots() && ok; ++k) {
      RatVec rc(rs.root(k).coords.begin(), rs.root(k).coords.end());
      if (rs.inner_rc(rc, xir) == 0) ok = false;
    }
    if (ok) return xi;
  }
  throw InternalError("failed to sample a generic point");
}

inline Rat localization_sum_at(const RootSystem& rs, const HessenbergSpace& h,
                               const RatVec& lambda_rc, const IntVec& xi) {
  const WeylGroup& wg = rs.weyl();
  long d = static_cast<long>(h.dimension());
  RatVec xir(xi.begin(), xi.end());
  // precompute (e_i, xi)
  RatVec gxi(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    RatVec ei(rs.rank(), 0);
    ei[i] = 1;
    gxi[i] = rs.inner_rc(ei, xir);
  }
  auto pair_xi = [&](const RatVec& v) {
    Rat s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += v[i] * gxi[i];
    return s;
  };
  Rat total = 0;
  for (const WeylElement& w : wg.elements) {
    RatVec wl(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        if (w.action_matrix[i][j] != 0) wl[i] += Rat(w.action_matrix[i][j]) * lambda_rc[j];
    Rat num = rat_pow(-pair_xi(wl), static_cast<unsigned long>(d));
    Rat den = 1;
    for (int k : h.root_indices) {
      IntVec wa = int_mat_vec(w.action_matrix, rs.root(k).coords);
      RatVec warc(wa.begin(), wa.end());
      Rat f = -pair_xi(warc);
      if (f == 0) throw InternalError("degenerate point reached localization denominator");
      den *= f;
    }
    total += num / den;
  }
  return total / Rat(factorial(static_cast<unsigned long>(d)));
}

}  // namespace detail

/// Localization formula Vol = (1/d!) sum_w (-w lambda)^d / prod_{alpha in Phi_H} (-w alpha),
/// evaluated at two independent generic points; the sum is a constant, so the
/// two evaluations must agree exactly.
inline LocalizationResult volume_localization(const RootSystem& rs, const HessenbergSpace& h,
                                              const Weight& lambda, std::uint64_t seed = 1) {
  Rng rng(mix_seed(seed, "volume-localization:" + rs.label()));
  RatVec lrc = rs.weight_to_root_coords(lambda);
  IntVec xi1 = detail::sample_generic_point(rs, rng, -10000, 10000);
  IntVec xi2 = detail::sample_generic_point(rs, rng, -10000, 10000);
  Rat v1 = detail::localization_sum_at(rs, h, lrc, xi1);
  Rat v2 = detail::localization_sum_at(rs, h, lrc, xi2);
  if (v1 != v2)
    throw InternalError("localization sum depends on the generic point (bug)");
  return {v1, seed, xi1};
}

}  // namespace hessberg

#endif
