#ifndef HESSBERG_SERIES_HPP
#define HESSBERG_SERIES_HPP

#include <algorithm>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/rational.hpp"

namespace hessberg {

// Truncated Laurent series in one formal parameter t with exact rational
// coefficients: support on exponents [lo, lo + size - 1], everything above
// order `prec` discarded. Coefficients below the truncation order are always
// exact (truncation never feeds back into lower orders).
class TruncatedSeries {
public:
  TruncatedSeries() : lo_(0), prec_(-1) {}

  /// Power series from coefficient list c[0..], truncated at order prec.
  static TruncatedSeries power(const RatVec& c, int prec) {
    TruncatedSeries s;
    s.lo_ = 0;
    s.prec_ = prec;
    s.c_.assign(c.begin(), c.begin() + std::min<std::size_t>(c.size(), prec + 1));
    s.normalize();
    return s;
  }

  static TruncatedSeries constant(const Rat& v, int prec) { return power({v}, prec); }

  /// exp(a t) up to order prec.
  static TruncatedSeries exponential(const Rat& a, int prec) {
    RatVec c(prec + 1);
    c[0] = 1;
    for (int k = 1; k <= prec; ++k) c[k] = c[k - 1] * a / k;
    return power(c, prec);
  }

  /// (1 - exp(a t)) for a != 0; valuation exactly 1.
  static TruncatedSeries one_minus_exp(const Rat& a, int prec) {
    if (a == 0) throw InputError("one_minus_exp requires a nonzero rate");
    TruncatedSeries e = exponential(a, prec);
    TruncatedSeries one = constant(1, prec);
    return one - e;
  }

  int lo() const { return lo_; }
  int prec() const { return prec_; }
  bool is_zero() const { return c_.empty(); }

  Rat coeff(int k) const {
    if (k > prec_) throw InternalError("coefficient above truncation order");
    if (k < lo_ || k >= lo_ + static_cast<int>(c_.size())) return 0;
    return c_[k - lo_];
  }

  /// Valuation: order of the lowest nonzero coefficient.
  int valuation() const {
    if (c_.empty()) throw InternalError("valuation of zero series");
    return lo_;
  }

  TruncatedSeries shifted(int k) const {
    TruncatedSeries s = *this;
    s.lo_ += k;
    s.prec_ += k;
    return s;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s;
    s.prec_ = std::min(a.prec_, b.prec_);
    int lo = std::min(a.c_.empty() ? s.prec_ : a.lo_, b.c_.empty() ? s.prec_ : b.lo_);
    s.lo_ = lo;
    s.c_.assign(std::max(0, s.prec_ - lo + 1), Rat(0));
    for (int k = 0; k < static_cast<int>(a.c_.size()); ++k)
      if (a.lo_ + k <= s.prec_) s.c_[a.lo_ + k - lo] += a.c_[k];
    for (int k = 0; k < static_cast<int>(b.c_.size()); ++k)
      if (b.lo_ + k <= s.prec_) s.c_[b.lo_ + k - lo] += b.c_[k];
    s.normalize();
    return s;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (b * Rat(-1));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rat& r) {
    TruncatedSeries s = a;
    if (r == 0) {
      s.c_.clear();
      return s;
    }
    for (Rat& x : s.c_) x *= r;
    return s;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries s;
    if (a.c_.empty() || b.c_.empty()) {
      s.prec_ = std::min(a.prec_, b.prec_);
      return s;
    }
    // reliable up to min over cross precisions
    s.prec_ = std::min(a.prec_ + b.lo_, b.prec_ + a.lo_);
    s.lo_ = a.lo_ + b.lo_;
    s.c_.assign(std::max(0, s.prec_ - s.lo_ + 1), Rat(0));
    for (int i = 0; i < static_cast<int>(a.c_.size()); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < static_cast<int>(b.c_.size()); ++j) {
        int k = a.lo_ + i + b.lo_ + j;
        if (k > s.prec_) break;
        s.c_[k - s.lo_] += a.c_[i] * b.c_[j];
      }
    }
    s.normalize();
    return s;
  }

  /// Multiplicative inverse; requires a nonzero leading coefficient.
  TruncatedSeries inverse() const {
    if (c_.empty() || c_[0] == 0)
      throw InputError("series inverse requires an invertible leading term");
    int m = prec_ - lo_;  // relative precision
    RatVec u(m + 1, Rat(0));
    u[0] = 1 / c_[0];
    for (int k = 1; k <= m; ++k) {
      Rat s = 0;
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * u[k - j];
      u[k] = -s / c_[0];
    }
    TruncatedSeries out;
    out.lo_ = -lo_;
    out.prec_ = m - lo_;
    out.c_ = std::move(u);
    out.normalize();
    return out;
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b.inverse();
  }

private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + lead);
      lo_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) lo_ = 0;
  }

  int lo_;
  int prec_;
  RatVec c_;  // coefficient of t^(lo_ + k)
};

}  // namespace hessberg

#endif
