#ifndef HESSBERG_POLYRING_HPP
#define HESSBERG_POLYRING_HPP

#include <map>
#include <string>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/rational.hpp"
#include "hessberg/rootsys.hpp"

namespace hessberg {

// Sparse multivariate polynomials over Q. For the symmetric algebra R the
// variables are the simple roots alpha_1..alpha_n themselves; chart ideals
// reuse the same type with variables t_1..t_N. Terms are kept in a map keyed
// by exponent vector (lexicographic), which doubles as the canonical
// serialization order. Zero coefficients are never stored.
class Polynomial {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rat>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static Polynomial variable(int nvars, int var, const Rat& coeff = Rat(1)) {
    Polynomial p(nvars);
    if (coeff != 0) {
      Exponents e(nvars, 0);
      e[var] = 1;
      p.terms_[e] = coeff;
    }
    return p;
  }

  /// Linear form sum c_i x_i.
  static Polynomial linear(const RatVec& coeffs) {
    Polynomial p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.terms_[e] = coeffs[i];
    }
    return p;
  }

  static Polynomial linear_int(const IntVec& coeffs) {
    return linear(RatVec(coeffs.begin(), coeffs.end()));
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
  }

  Rat constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw InternalError("polynomial is not constant");
    return terms_.begin()->second;
  }

  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (int x : e) s += x;
      if (s > d) d = s;
    }
    return d;  // -1 for the zero polynomial
  }

  bool is_homogeneous(long degree) const {
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (int x : e) s += x;
      if (s != degree) return false;
    }
    return true;
  }

  void add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Rat& s) {
    Polynomial out(a.nvars_);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.terms_[e] = c * s;
    return out;
  }

  friend Polynomial operator*(const Rat& s, const Polynomial& a) { return a * s; }

  friend Polynomial operator-(const Polynomial& a) { return a * Rat(-1); }

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned long k) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      if (k >>= 1) base = base * base;
    }
    return r;
  }

  /// Evaluate with variable i set to values[i].
  Rat evaluate(const RatVec& values) const {
    if (static_cast<int>(values.size()) != nvars_) throw InputError("evaluation arity mismatch");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) t *= rat_pow(values[i], e[i]);
      sum += t;
    }
    return sum;
  }

  /// Substitute one variable by a polynomial (same variable set).
  Polynomial substitute(int var, const Polynomial& sub) const {
    check_vars(sub);
    Polynomial out(nvars_);
    std::vector<Polynomial> powers{constant(nvars_, 1)};
    for (const auto& [e, c] : terms_) {
      int k = e[var];
      while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * sub);
      Exponents rest = e;
      rest[var] = 0;
      Polynomial mono(nvars_);
      mono.terms_[rest] = c;
      out += mono * powers[k];
    }
    return out;
  }

  /// Simultaneous substitution x_i -> images[i] (used for reflections).
  Polynomial substitute_all(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw InputError("substitution arity mismatch");
    int out_vars = images.empty() ? nvars_ : images[0].nvars();
    Polynomial out(out_vars);
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(out_vars, c);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * images[i];
      out += t;
    }
    return out;
  }

  Polynomial partial_derivative(int var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(d, c * Rat(e[var]));
    }
    return out;
  }

  /// Exact division by the variable var; throws if some term lacks it.
  Polynomial divide_by_variable(int var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) throw InternalError("polynomial not divisible by variable");
      Exponents d = e;
      d[var] -= 1;
      out.terms_[d] = c;
    }
    return out;
  }

  /// Variables that actually occur.
  std::vector<int> support() const {
    std::vector<char> seen(nvars_, 0);
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < nvars_; ++i)
        if (e[i] > 0) seen[i] = 1;
    std::vector<int> out;
    for (int i = 0; i < nvars_; ++i)
      if (seen[i]) out.push_back(i);
    return out;
  }

  /// Coefficient of the pure linear monomial x_var.
  Rat linear_coefficient(int var) const {
    Exponents e(nvars_, 0);
    e[var] = 1;
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  std::string to_string(const std::string& var_prefix = "x") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rat a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += (a < 0) ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      bool has_vars = false;
      std::string vars;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (has_vars) vars += "*";
        vars += var_prefix + std::to_string(i + 1);
        if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        has_vars = true;
      }
      if (!has_vars) {
        s += rat_str(a);
      } else if (a == 1) {
        s += vars;
      } else {
        s += rat_str(a) + "*" + vars;
      }
    }
    return s;
  }

private:
  void check_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InputError("polynomial variable sets differ");
  }

  int nvars_;
  TermMap terms_;
};

// ---- derivations --------------------------------------------------------

/// The derivation del_f determined by Leibniz and del_f(g) = (f, g) on linear
/// forms, stored as gradient coefficients: del_f = sum_j (f, alpha_j) d/dx_j.
struct Derivation {
  RatVec grad;

  static Derivation from_root_coords(const RootSystem& rs, const RatVec& rc) {
    Derivation d;
    d.grad.assign(rs.rank(), 0);
    for (int j = 0; j < rs.rank(); ++j) {
      RatVec ej(rs.rank(), 0);
      ej[j] = 1;
      d.grad[j] = rs.inner_rc(rc, ej);
    }
    return d;
  }

  static Derivation from_weight(const RootSystem& rs, const Weight& w) {
    return from_root_coords(rs, rs.weight_to_root_coords(w));
  }

  static Derivation from_root(const RootSystem& rs, const Root& r) {
    return from_root_coords(rs, RatVec(r.coords.begin(), r.coords.end()));
  }
};

inline Polynomial apply_derivation(const Derivation& d, const Polynomial& p) {
  Polynomial out(p.nvars());
  for (int j = 0; j < p.nvars(); ++j) {
    if (d.grad[j] == 0) continue;
    out += p.partial_derivative(j) * d.grad[j];
  }
  return out;
}

/// del^(m) P = prod_i del_{alpha_i}^{m_i} (P); the del_{alpha_i} commute.
inline Polynomial apply_monomial_derivation(const RootSystem& rs, const std::vector<int>& m,
                                            const Polynomial& p) {
  Polynomial cur = p;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (m[i] == 0) continue;
    Root r;
    r.coords.assign(rs.rank(), 0);
    r.coords[i] = 1;
    Derivation d = Derivation::from_root(rs, r);
    for (int k = 0; k < m[i]; ++k) cur = apply_derivation(d, cur);
    if (cur.is_zero()) break;
  }
  return cur;
}

// ---- reflections and divided differences --------------------------------

/// Algebra automorphism induced by the simple reflection s_i (substitution
/// x_j -> x_j - cartan[i][j] x_i).
inline Polynomial reflect(const RootSystem& rs, int i, const Polynomial& p) {
  if (i < 1 || i > rs.rank()) throw InputError("simple index out of range");
  std::vector<Polynomial> images;
  for (int j = 0; j < rs.rank(); ++j) {
    RatVec c(rs.rank(), 0);
    c[j] = 1;
    c[i - 1] -= Rat(rs.cartan()[i - 1][j]);
    images.push_back(Polynomial::linear(c));
  }
  return p.substitute_all(images);
}

/// BGG operator del_i f = (f - s_i f) / alpha_i. The numerator vanishes on
/// the wall x_i = 0, so the division is exact; this does not depend on the
/// inner product.
inline Polynomial divided_difference(const RootSystem& rs, int i, const Polynomial& p) {
  Polynomial num = p - reflect(rs, i, p);
  if (num.is_zero()) return Polynomial(p.nvars());
  return num.divide_by_variable(i - 1);
}

/// Composite along a word, rightmost letter applied first. For reduced words
/// this is the operator del_w, independent of the chosen reduced word.
inline Polynomial divided_difference_word(const RootSystem& rs, const std::vector<int>& word,
                                          const Polynomial& p) {
  if (!rs.word_is_reduced(word)) throw InputError("word is not reduced");
  Polynomial cur = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = divided_difference(rs, *it, cur);
    if (cur.is_zero()) break;
  }
  return cur;
}

/// Linear form of a root inside R (its simple-root coordinates as a polynomial).
inline Polynomial root_form(const RootSystem&, const Root& r) {
  return Polynomial::linear_int(r.coords);
}

inline Polynomial weight_form(const RootSystem& rs, const Weight& w) {
  return Polynomial::linear(rs.weight_to_root_coords(w));
}

/// Evaluate an R-polynomial as a function on t*: x_i -> (alpha_i, mu).
inline Rat evaluate_at_weight(const RootSystem& rs, const Polynomial& p, const Weight& mu) {
  RatVec murc = rs.weight_to_root_coords(mu);
  RatVec values(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    RatVec ei(rs.rank(), 0);
    ei[i] = 1;
    values[i] = rs.inner_rc(ei, murc);
  }
  return p.evaluate(values);
}

}  // namespace hessberg

#endif
