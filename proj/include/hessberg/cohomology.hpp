#ifndef HESSBERG_COHOMOLOGY_HPP
#define HESSBERG_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/polyring.hpp"
#include "hessberg/prng.hpp"
#include "hessberg/rootsys.hpp"
#include "hessberg/series.hpp"
#include "hessberg/volume.hpp"

namespace hessberg {

// Cohomological and K-theoretic invariants: Schubert expansion of the
// fundamental class, top-degree integration, Borel-Weil-Bott classification,
// Euler characteristics of line bundles by fixed-point localization, and
// Hilbert polynomials. Euler characteristics are computed on the smooth
// fiber, whose tangent weights at the fixed point wB are {-w alpha : alpha in
// Phi_H}; the fiber weight of L_lambda there is -w lambda. Fractions are
// expanded as truncated exponential series along a generic direction xi; the
// pole cancels in the sum over W and the constant term is chi.

// ---- Schubert expansion ---------------------------------------------------

struct SchubertExpansion {
  long degree = 0;  // common length of supporting elements = codim Hess
  std::vector<std::pair<std::vector<int>, Rat>> coefficients;  // (reduced word, coeff)
};

/// The polynomial prod_{alpha not in Phi_H} alpha representing the class of Hess.
inline Polynomial euler_class_polynomial(const RootSystem& rs, const HessenbergSpace& h) {
  Polynomial e = Polynomial::constant(rs.rank(), 1);
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (!h.contains(static_cast<int>(k))) e = e * root_form(rs, rs.root(k));
  return e;
}

/// Coefficient of w (with l(w) = codim) is the constant del_w applied to the
/// Euler-class polynomial; effectivity makes them nonnegative integers.
inline SchubertExpansion euler_class_expansion(const RootSystem& rs, const HessenbergSpace& h) {
  Polynomial e = euler_class_polynomial(rs, h);
  long codim = static_cast<long>(rs.num_positive_roots() - h.dimension());
  SchubertExpansion out;
  out.degree = codim;
  const WeylGroup& wg = rs.weyl();
  for (const WeylElement& w : wg.elements) {
    if (w.length != codim) continue;
    Polynomial c = divided_difference_word(rs, w.reduced_word, e);
    if (c.is_zero()) continue;
    out.coefficients.emplace_back(w.reduced_word, c.constant_value());
  }
  return out;
}

/// Top-degree integration del_{w0}(E_H * lambda^d); cross-checked against
/// d! * P_H(lambda) on every call.
inline Int integrate_degree(const RootSystem& rs, const HessenbergSpace& h, const Weight& lambda) {
  long d = static_cast<long>(h.dimension());
  Polynomial f = euler_class_polynomial(rs, h) * weight_form(rs, lambda).pow(d);
  const WeylGroup& wg = rs.weyl();
  Polynomial value = divided_difference_word(rs, wg.longest().reduced_word, f);
  Rat got = value.is_zero() ? Rat(0) : value.constant_value();
  Rat expect = Rat(factorial(static_cast<unsigned long>(d))) *
               volume(rs, volume_polynomial(rs, h), lambda);
  if (got != expect)
    throw InternalError("integrate_degree disagrees with d! * volume (" + rat_str(got) +
                        " vs " + rat_str(expect) + ")");
  if (!rat_is_integer(got)) throw InternalError("degree is not an integer");
  return got.get_num();
}

// ---- Weyl dimension formula and Borel-Weil-Bott ---------------------------

/// dim V_mu = prod_{alpha>0} (alpha, mu+rho) / (alpha, rho) for dominant mu.
inline Int weyl_dimension(const RootSystem& rs, const Weight& mu) {
  RatVec mr = rs.weight_to_root_coords(mu);
  const RatVec& rr = rs.rho_root_coords();
  RatVec sum(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) sum[i] = mr[i] + rr[i];
  Rat dim = 1;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    RatVec rc(rs.root(k).coords.begin(), rs.root(k).coords.end());
    dim *= rs.inner_rc(rc, sum) / rs.inner_rc(rc, rr);
  }
  if (!rat_is_integer(dim)) throw InternalError("Weyl dimension is not an integer");
  return dim.get_num();
}

struct BWBResult {
  bool singular = false;
  WeylElement w;            // regular case: the unique w with w.(lambda) dominant
  Weight dominant_weight;   // w.(lambda)
  long cohomological_degree = 0;
  Int dimension;            // dim V_{w.(lambda)}
};

inline bool weight_is_integral(const Weight& w) {
  for (const Rat& c : w.fw)
    if (!rat_is_integer(c)) return false;
  return true;
}

inline bool weight_is_dominant(const Weight& w, bool strict = false) {
  for (const Rat& c : w.fw) {
    if (c < 0) return false;
    if (strict && c == 0) return false;
  }
  return true;
}

/// Classify lambda: either lambda+rho lies on a wall (all cohomology of
/// L_lambda vanishes) or there is a unique w with w.(lambda) dominant, and
/// only H^{l(w)} survives, with dimension dim V_{w.(lambda)}.
inline BWBResult bwb_classify(const RootSystem& rs, const Weight& lambda) {
  if (!weight_is_integral(lambda)) throw InputError("Borel-Weil-Bott requires an integral weight");
  BWBResult res;
  Weight nu;
  nu.fw.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) nu.fw[i] = lambda.fw[i] + 1;  // lambda + rho
  IntMat m = int_identity(rs.rank());
  RatVec rc = rs.weight_to_root_coords(nu);
  for (;;) {
    int neg = -1;
    bool wall = false;
    for (int i = 0; i < rs.rank(); ++i) {
      Rat p = rs.coroot_pairing(rc, i);
      if (p == 0) wall = true;
      if (p < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) {
      if (wall) {
        res.singular = true;
        return res;
      }
      break;
    }
    rc = [&] {
      RatVec img(rs.rank(), 0);
      const IntMat& r = rs.simple_reflection(neg);
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
          if (r[i][j] != 0) img[i] += Rat(r[i][j]) * rc[j];
      return img;
    }();
    m = int_mat_mul(rs.simple_reflection(neg), m);
  }
  res.singular = false;
  res.w.action_matrix = m;
  res.w.length = rs.inversions(m);
  res.w.reduced_word = rs.to_reduced_word(m);
  // w.(lambda) = w(lambda+rho) - rho
  RatVec dom(rs.rank());
  const RatVec& rr = rs.rho_root_coords();
  for (int i = 0; i < rs.rank(); ++i) dom[i] = rc[i] - rr[i];
  res.dominant_weight = rs.weight_from_root_coords(dom);
  res.cohomological_degree = res.w.length;

  // invariant: l(w) = |{beta > 0 : (beta, lambda+rho) < 0}|
  RatVec lam_rho = rs.weight_to_root_coords(nu);
  long neg_count = 0;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    RatVec b(rs.root(k).coords.begin(), rs.root(k).coords.end());
    if (rs.inner_rc(b, lam_rho) < 0) ++neg_count;
  }
  if (neg_count != res.w.length)
    throw InternalError("BWB degree disagrees with negative-pairing count");

  res.dimension = weyl_dimension(rs, res.dominant_weight);
  return res;
}

// ---- rho-wall witness ------------------------------------------------------

/// For distinct non-simple positive roots gamma_1..gamma_p there is a root
/// alpha with (alpha, rho - sum gamma_i) = 0; exhaustive scan returns one.
inline Root check_rho_wall(const RootSystem& rs, const std::vector<int>& gamma_indices) {
  if (gamma_indices.empty()) throw InputError("rho-wall check requires p >= 1 roots");
  std::set<int> uniq(gamma_indices.begin(), gamma_indices.end());
  if (uniq.size() != gamma_indices.size()) throw InputError("gamma roots must be distinct");
  RatVec v = rs.rho_root_coords();
  for (int k : gamma_indices) {
    if (rs.root(k).height < 2) throw InputError("gamma roots must be non-simple");
    for (int i = 0; i < rs.rank(); ++i) v[i] -= Rat(rs.root(k).coords[i]);
  }
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    RatVec b(rs.root(k).coords.begin(), rs.root(k).coords.end());
    if (rs.inner_rc(b, v) == 0) return rs.root(k);
  }
  throw InternalError("no rho-wall witness found (one always exists; bug signal)");
}

// ---- Euler characteristics --------------------------------------------------

/// Restriction data of L_lambda at a torus-fixed point wB of the smooth
/// fiber: the fiber weight -w lambda and the tangent weights {w alpha :
/// alpha in Phi_H} entering the localization denominator.
struct FixedPointCharacter {
  std::vector<int> word;                   // which fixed point
  RatVec numerator_exponent;               // -w lambda, root coordinates
  std::vector<IntVec> denominator_weights;  // size |Phi_H|
};

inline std::vector<FixedPointCharacter> fixed_point_characters(const RootSystem& rs,
                                                               const HessenbergSpace& h,
                                                               const Weight& lambda) {
  RatVec lrc = rs.weight_to_root_coords(lambda);
  std::vector<FixedPointCharacter> out;
  for (const WeylElement& w : rs.weyl().elements) {
    FixedPointCharacter fp;
    fp.word = w.reduced_word;
    fp.numerator_exponent.assign(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        if (w.action_matrix[i][j] != 0)
          fp.numerator_exponent[i] -= Rat(w.action_matrix[i][j]) * lrc[j];
    for (int k : h.root_indices)
      fp.denominator_weights.push_back(int_mat_vec(w.action_matrix, rs.root(k).coords));
    out.push_back(std::move(fp));
  }
  return out;
}

/// Precomputed per-fixed-point data for chi sums over one Hessenberg space:
/// the inverted denominator units 1 / prod_{alpha in Phi_H}((1-e^{(w alpha, xi)t})/t)
/// reused across weights (the denominators do not depend on lambda).
class ChiContext {
public:
  ChiContext(const RootSystem& rs, const HessenbergSpace& h, std::uint64_t seed, int order)
      : rs_(rs), h_(h), seed_(seed), order_(order) {
    Rng rng(mix_seed(seed, "chi:" + rs.label()));
    xi_ = detail::sample_generic_point(rs, rng, -99, 99);
    RatVec xir(xi_.begin(), xi_.end());
    gxi_.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      RatVec ei(rs.rank(), 0);
      ei[i] = 1;
      gxi_[i] = rs.inner_rc(ei, xir);
    }
    const WeylGroup& wg = rs.weyl();
    for (const WeylElement& w : wg.elements) {
      TruncatedSeries unit = TruncatedSeries::constant(1, order_);
      for (int k : h.root_indices) {
        IntVec wa = int_mat_vec(w.action_matrix, rs.root(k).coords);
        Rat rate = 0;
        for (int i = 0; i < rs.rank(); ++i) rate += Rat(wa[i]) * gxi_[i];
        // (1 - e^{rate t}) / t, a unit with constant term -rate
        TruncatedSeries f = TruncatedSeries::one_minus_exp(rate, order_ + 1).shifted(-1);
        unit = unit * f;
      }
      inv_units_.push_back(unit.inverse());
    }
  }

  const IntVec& xi() const { return xi_; }
  int order() const { return order_; }

  /// chi(Hess, L_lambda) = sum_w e^{-w lambda} / prod_{alpha in Phi_H}(1 - e^{w alpha}).
  Int chi(const Weight& lambda) const {
    if (!weight_is_integral(lambda)) throw InputError("chi requires an integral weight");
    long d = static_cast<long>(h_.dimension());
    RatVec lrc = rs_.weight_to_root_coords(lambda);
    const WeylGroup& wg = rs_.weyl();
    RatVec acc(order_ + 1, Rat(0));
    for (std::size_t widx = 0; widx < wg.elements.size(); ++widx) {
      const WeylElement& w = wg.elements[widx];
      RatVec wl(rs_.rank(), 0);
      for (int i = 0; i < rs_.rank(); ++i)
        for (int j = 0; j < rs_.rank(); ++j)
          if (w.action_matrix[i][j] != 0) wl[i] += Rat(w.action_matrix[i][j]) * lrc[j];
      Rat rate = 0;
      for (int i = 0; i < rs_.rank(); ++i) rate -= wl[i] * gxi_[i];
      TruncatedSeries num = TruncatedSeries::exponential(rate, order_);
      TruncatedSeries term = num * inv_units_[widx];
      for (int k = 0; k <= std::min(order_, term.prec()); ++k) acc[k] += term.coeff(k);
    }
    // term_w = t^{-d} (num * unit^{-1}); poles must cancel in the sum
    for (long k = 0; k < d; ++k)
      if (acc[k] != 0)
        throw InternalError("fixed-point sum has an uncancelled pole (order " +
                            std::to_string(k - d) + ")");
    Rat chi_val = acc[d];
    if (!rat_is_integer(chi_val)) throw InternalError("chi is not an integer");
    return chi_val.get_num();
  }

private:
  const RootSystem& rs_;
  HessenbergSpace h_;
  std::uint64_t seed_;
  int order_;
  IntVec xi_;
  RatVec gxi_;
  std::vector<TruncatedSeries> inv_units_;
};

namespace detail {

/// One-time sign calibration per root system: chi(G/B, L_{varpi_1}) must equal
/// dim V_{varpi_1} under the conventions above.
inline void calibrate_chi(const RootSystem& rs, std::uint64_t seed) {
  static std::mutex mu;
  static std::set<std::string> done;
  std::string key = rs.label() + "@" + rat_str(rs.metric_scale());
  {
    std::lock_guard<std::mutex> lock(mu);
    if (done.count(key)) return;
  }
  HessenbergSpace gb = full_space(rs);
  int order = static_cast<int>(rs.num_positive_roots()) + 2;
  ChiContext ctx(rs, gb, mix_seed(seed, "calibration"), order);
  Weight w1 = rs.fundamental_weights()[0];
  if (ctx.chi(w1) != weyl_dimension(rs, w1))
    throw InternalError("chi sign calibration failed for " + rs.label());
  std::lock_guard<std::mutex> lock(mu);
  done.insert(key);
}

}  // namespace detail

/// Euler characteristic chi(Hess(x,H), L_lambda); independent of the regular
/// element by construction (the formula never consumes J). Retries once at
/// doubled truncation order if a pole fails to cancel, then hard-errors.
inline Int chi_line_bundle(const RootSystem& rs, const HessenbergSpace& h, const Weight& lambda,
                           std::uint64_t seed = 1) {
  detail::calibrate_chi(rs, seed);
  int order = static_cast<int>(rs.num_positive_roots()) + 2;
  try {
    ChiContext ctx(rs, h, seed, order);
    return ctx.chi(lambda);
  } catch (const InternalError&) {
    ChiContext ctx(rs, h, seed, 2 * order);
    return ctx.chi(lambda);
  }
}

// ---- Hilbert polynomial ------------------------------------------------------

/// Coefficients (ascending in m) of the polynomial m -> chi(L_{m lambda}),
/// interpolated exactly at m = 0..d+1 and verified at m = d+2. Constant term
/// is 1 and the leading coefficient equals P_H(lambda).
inline RatVec hilbert_polynomial(const RootSystem& rs, const HessenbergSpace& h,
                                 const Weight& lambda, std::uint64_t seed = 1) {
  if (!weight_is_integral(lambda) || !weight_is_dominant(lambda, /*strict=*/true))
    throw InputError("Hilbert polynomial requires a regular dominant integral weight");
  detail::calibrate_chi(rs, seed);
  long d = static_cast<long>(h.dimension());
  int order = static_cast<int>(rs.num_positive_roots()) + 2;
  ChiContext ctx(rs, h, seed, order);

  std::vector<Rat> values;  // chi(m lambda) for m = 0..d+2
  for (long m = 0; m <= d + 2; ++m) {
    Weight ml;
    ml.fw.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) ml.fw[i] = lambda.fw[i] * m;
    values.push_back(Rat(ctx.chi(ml)));
  }

  // exact Lagrange interpolation through m = 0..d+1
  long npts = d + 2;
  RatVec coeffs(npts, Rat(0));
  for (long j = 0; j < npts; ++j) {
    // basis polynomial prod_{k != j} (m - k)/(j - k)
    RatVec basis{Rat(1)};
    Rat denom = 1;
    for (long k = 0; k < npts; ++k) {
      if (k == j) continue;
      RatVec next(basis.size() + 1, Rat(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] += basis[t] * Rat(-k);
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
      denom *= Rat(j - k);
    }
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += values[j] * basis[t] / denom;
  }
  // chi is a degree-d polynomial in m, so the interpolant's top term vanishes
  if (coeffs[d + 1] != 0) throw InternalError("Hilbert interpolation has spurious degree d+1 term");
  coeffs.pop_back();
  // out-of-sample node
  Rat check = 0;
  for (long t = d; t >= 0; --t) check = check * Rat(d + 2) + coeffs[t];
  if (check != values[d + 2]) throw InternalError("Hilbert polynomial fails at the extra node");
  if (coeffs[0] != 1) throw InternalError("Hilbert polynomial constant term is not 1");
  Rat lead_expected = volume(rs, volume_polynomial(rs, h), lambda);
  if (coeffs[d] != lead_expected)
    throw InternalError("Hilbert leading coefficient differs from the volume");
  return coeffs;
}

}  // namespace hessberg

#endif
