#ifndef HESSBERG_CHARTS_HPP
#define HESSBERG_CHARTS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/polyring.hpp"
#include "hessberg/prng.hpp"
#include "hessberg/rootsys.hpp"

namespace hessberg {

// Type A realizations: regular elements x_J = s_J + sum_{i in J} E_{alpha_i}
// as traceless matrices, the chart functions f_alpha on the big cell
// coordinates of w U^-, the variable elimination that exhibits the chart of
// the longest element as a polynomial ring, and the conjugation algorithms
// that normalize s_J + sum_i c_i E_{alpha_i} and identify x(t) with t x_J.
//
// Matrix conventions for sl_n: alpha_i = eps_i - eps_{i+1}; the positive root
// alpha_i + ... + alpha_{j-1} corresponds to (i,j), E_alpha = E_{ij} (matrix
// unit above the diagonal), F_alpha = E_{ji}. The g_{-alpha} component of a
// matrix is its (j,i) entry.

struct RegularElement {
  std::vector<int> j_set;      // 1-based simple indices, sorted
  RatVec semisimple_values;    // alpha_i(s_J); zero exactly on J
  RatMat matrix;               // type A realization (n x n traceless)
  std::uint64_t seed = 0;
};

struct ChartIdealGenerators {
  std::vector<int> weyl_word;         // reduced word of w
  RatMat representative;              // the chosen lift of w (signed permutation)
  std::vector<std::pair<int, Polynomial>> generators;  // (root index, f_alpha in t_1..t_N)
};

struct EliminationStep {
  int generator_root;  // enumeration index of alpha
  int pivot_variable;  // 0-based t index
};

struct EliminationReport {
  bool success = false;
  std::vector<EliminationStep> steps;
  std::vector<int> free_variables;  // 0-based indices of surviving t's
  std::string failure_reason;
};

/// Extension point for chart computations beyond type A: a provider realizes
/// the chosen root vectors E_alpha, F_alpha and Cartan elements in a faithful
/// matrix representation. Only the type A provider ships; other types depend
/// on structure-constant sign conventions that are not pinned here, so
/// requesting a provider for them raises UnsupportedError.
class StructureConstantProvider {
public:
  virtual ~StructureConstantProvider() = default;
  virtual int matrix_size() const = 0;
  virtual RatMat positive_root_vector(int root_index) const = 0;  // E_alpha
  virtual RatMat negative_root_vector(int root_index) const = 0;  // F_alpha
  /// Traceless Cartan element s with alpha_i(s) = values[i].
  virtual RatMat cartan_element(const RatVec& values) const = 0;
};

namespace typea {

inline void require_type_a(const RootSystem& rs) {
  if (rs.component_ranks().size() != 1 || rs.label()[0] != 'A')
    throw UnsupportedError("chart computations are implemented for irreducible type A only");
}

/// (i, j) with 1 <= i < j <= n for a type A positive root.
inline std::pair<int, int> root_to_pair(const RootSystem& rs, const Root& r) {
  int i = -1, j = -1;
  for (int k = 0; k < rs.rank(); ++k) {
    if (r.coords[k] == 1) {
      if (i < 0) i = k + 1;
      j = k + 2;
    } else if (r.coords[k] != 0) {
      throw InternalError("not a type A root");
    }
  }
  return {i, j};
}

/// Set of roots supported on the sub-diagram J (type A: runs inside J).
inline std::vector<char> roots_in_subsystem(const RootSystem& rs, const std::vector<int>& j_set) {
  std::set<int> j(j_set.begin(), j_set.end());
  std::vector<char> in(rs.num_positive_roots(), 0);
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.root(k).coords[i] != 0 && !j.count(i + 1)) inside = false;
    in[k] = inside ? 1 : 0;
  }
  return in;
}

}  // namespace typea

class TypeAMatrixProvider final : public StructureConstantProvider {
public:
  explicit TypeAMatrixProvider(const RootSystem& rs) : rs_(rs) { typea::require_type_a(rs); }

  int matrix_size() const override { return rs_.rank() + 1; }

  RatMat positive_root_vector(int root_index) const override {
    auto [i, j] = typea::root_to_pair(rs_, rs_.root(root_index));
    RatMat m(matrix_size(), RatVec(matrix_size(), 0));
    m[i - 1][j - 1] = 1;
    return m;
  }

  RatMat negative_root_vector(int root_index) const override {
    auto [i, j] = typea::root_to_pair(rs_, rs_.root(root_index));
    RatMat m(matrix_size(), RatVec(matrix_size(), 0));
    m[j - 1][i - 1] = 1;
    return m;
  }

  RatMat cartan_element(const RatVec& values) const override {
    int n = matrix_size();
    RatVec d(n, 0);
    for (int i = n - 2; i >= 0; --i) d[i] = d[i + 1] + values[i];
    Rat mean = 0;
    for (const Rat& x : d) mean += x;
    mean /= n;
    RatMat m(n, RatVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = d[i] - mean;
    return m;
  }

private:
  const RootSystem& rs_;
};

inline std::unique_ptr<StructureConstantProvider> make_structure_provider(const RootSystem& rs) {
  return std::make_unique<TypeAMatrixProvider>(rs);
}

/// x_J with seeded random distinct integer values alpha_i(s_J) for i not in J,
/// resampled until alpha(s_J) != 0 for every positive root outside Phi(J).
inline RegularElement make_regular_element(const RootSystem& rs, const std::vector<int>& j_set,
                                           std::uint64_t seed = 1) {
  for (int i : j_set)
    if (i < 1 || i > rs.rank()) throw InputError("J index out of range");
  std::set<int> j(j_set.begin(), j_set.end());
  std::vector<char> in_j_roots = typea::roots_in_subsystem(rs, j_set);
  Rng rng(mix_seed(seed, "regular-element:" + rs.label()));
  RegularElement x;
  x.j_set.assign(j.begin(), j.end());
  x.seed = seed;
  const int budget = 1000;
  for (int attempt = 0; attempt < budget; ++attempt) {
    RatVec v(rs.rank(), 0);
    std::set<long> used;
    bool distinct = true;
    for (int i = 0; i < rs.rank(); ++i) {
      if (j.count(i + 1)) continue;
      long val = rng.nonzero(-20, 20);
      if (!used.insert(val).second) distinct = false;
      v[i] = val;
    }
    if (!distinct) continue;
    bool generic = true;
    for (std::size_t k = 0; k < rs.num_positive_roots() && generic; ++k) {
      if (in_j_roots[k]) continue;
      Rat s = 0;
      for (int i = 0; i < rs.rank(); ++i) s += Rat(rs.root(k).coords[i]) * v[i];
      if (s == 0) generic = false;
    }
    if (!generic) continue;
    x.semisimple_values = v;
    break;
  }
  if (x.semisimple_values.empty() && rs.rank() > 0)
    throw InternalError("regular-element sampling budget exhausted");

  if (rs.component_ranks().size() == 1 && rs.label()[0] == 'A') {
    TypeAMatrixProvider prov(rs);
    x.matrix = prov.cartan_element(x.semisimple_values);
    for (int i : x.j_set) {
      RatMat e = prov.positive_root_vector(rs.simple_root_index(i - 1));
      for (std::size_t a = 0; a < x.matrix.size(); ++a)
        for (std::size_t b = 0; b < x.matrix.size(); ++b) x.matrix[a][b] += e[a][b];
    }
  }
  return x;
}

namespace typea {

/// Signed permutation representative of w built from a reduced word; the sign
/// of the last row is flipped when needed to land in SL_n. For the longest
/// element of A2 this reproduces the standard lift [[0,0,1],[0,1,0],[-1,0,0]].
inline RatMat weyl_representative(const RootSystem& rs, const std::vector<int>& word) {
  require_type_a(rs);
  int n = rs.rank() + 1;
  RatMat m = rat_identity(n);
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw InputError("simple index out of range in word");
    // right-multiply by the transposition matrix of (i, i+1)
    for (int r = 0; r < n; ++r) std::swap(m[r][i - 1], m[r][i]);
  }
  // determinant of a permutation matrix = parity of the word
  if (word.size() % 2 == 1)
    for (int c = 0; c < n; ++c) m[n - 1][c] = -m[n - 1][c];
  return m;
}

inline RatMat transpose(const RatMat& m) {
  RatMat t(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

using PolyMat = std::vector<std::vector<Polynomial>>;

inline PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  std::size_t r = a.size(), k = b.size(), c = b[0].size();
  int nv = a[0][0].nvars();
  PolyMat out(r, std::vector<Polynomial>(c, Polynomial(nv)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < c; ++l) {
        if (b[j][l].is_zero()) continue;
        out[i][l] += a[i][j] * b[j][l];
      }
    }
  return out;
}

inline PolyMat poly_mat_from_rat(const RatMat& m, int nvars) {
  PolyMat out(m.size(), std::vector<Polynomial>(m[0].size(), Polynomial(nvars)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = Polynomial::constant(nvars, m[i][j]);
  return out;
}

/// exp(sign * t_var * F) for nilpotent F, as an exact polynomial matrix; the
/// series terminates when F^k = 0.
inline PolyMat exp_nilpotent(const RatMat& f, int var, int nvars, int sign) {
  std::size_t n = f.size();
  PolyMat out = poly_mat_from_rat(rat_identity(n), nvars);
  RatMat power = f;
  Rat fact = 1;
  for (std::size_t k = 1; ; ++k) {
    if (k > n) throw InternalError("exp_nilpotent: matrix is not nilpotent");
    bool zero = true;
    for (const RatVec& row : power)
      for (const Rat& e : row)
        if (e != 0) zero = false;
    if (zero) break;
    fact *= static_cast<long>(k);
    Polynomial::Exponents exps(nvars, 0);
    exps[var] = static_cast<int>(k);
    Rat s = (sign < 0 && k % 2 == 1) ? Rat(-1) : Rat(1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (power[r][c] != 0) out[r][c].add_term(exps, s * power[r][c] / fact);
    power = rat_mat_mul(power, f);
  }
  return out;
}

}  // namespace typea

/// Chart functions f_alpha for alpha outside Phi_H on the chart of w:
/// with M(t) = wtilde * prod_l exp(t_l F_{beta_l}), the generator f_alpha is
/// the (-alpha)-component of M(t)^{-1} x M(t). Everything is exact; the
/// unipotent factors invert term by term.
inline ChartIdealGenerators chart_polynomials(const RootSystem& rs, const RegularElement& x,
                                              const HessenbergSpace& h,
                                              const std::vector<int>& weyl_word) {
  auto provider = make_structure_provider(rs);
  if (!rs.word_is_reduced(weyl_word)) throw InputError("Weyl word must be reduced");
  int N = static_cast<int>(rs.num_positive_roots());

  RatMat rep = typea::weyl_representative(rs, weyl_word);
  typea::PolyMat m = typea::poly_mat_from_rat(rep, N);
  typea::PolyMat minv = typea::poly_mat_from_rat(typea::transpose(rep), N);

  for (int l = 0; l < N; ++l) {
    RatMat f = provider->negative_root_vector(l);
    m = typea::poly_mat_mul(m, typea::exp_nilpotent(f, l, N, +1));
    minv = typea::poly_mat_mul(typea::exp_nilpotent(f, l, N, -1), minv);
  }

  typea::PolyMat xmat = typea::poly_mat_from_rat(x.matrix, N);
  typea::PolyMat y = typea::poly_mat_mul(typea::poly_mat_mul(minv, xmat), m);

  ChartIdealGenerators out;
  out.weyl_word = weyl_word;
  out.representative = rep;
  for (int k = 0; k < N; ++k) {
    if (h.contains(k)) continue;
    auto [i, jj] = typea::root_to_pair(rs, rs.root(k));
    out.generators.emplace_back(k, y[jj - 1][i - 1]);
  }
  return out;
}

/// Direct membership test Ad(M(t0)^{-1}) x in H at a rational point t0, used
/// as the brute-force oracle against the symbolic generators.
inline bool chart_membership(const RootSystem& rs, const RegularElement& x,
                             const HessenbergSpace& h, const std::vector<int>& weyl_word,
                             const RatVec& t0) {
  typea::require_type_a(rs);
  int n = rs.rank() + 1;
  int N = static_cast<int>(rs.num_positive_roots());
  RatMat m = typea::weyl_representative(rs, weyl_word);
  RatMat minv = typea::transpose(m);
  for (int l = 0; l < N; ++l) {
    auto [i, jj] = typea::root_to_pair(rs, rs.root(l));
    RatMat f = rat_identity(n), fi = rat_identity(n);
    f[jj - 1][i - 1] = t0[l];
    fi[jj - 1][i - 1] = -t0[l];
    m = rat_mat_mul(m, f);
    minv = rat_mat_mul(fi, minv);
  }
  RatMat y = rat_mat_mul(rat_mat_mul(minv, x.matrix), m);
  for (int k = 0; k < N; ++k) {
    if (h.contains(k)) continue;
    auto [i, jj] = typea::root_to_pair(rs, rs.root(k));
    if (y[jj - 1][i - 1] != 0) return false;
  }
  return true;
}

/// Triangular elimination of the chart ideal at the longest element: each
/// generator contains a pivot variable that occurs only as c * t_k with a
/// nonzero constant c; substituting it away consumes the generator without
/// imposing relations among the remaining variables. Pivot preference: the
/// variable of alpha itself (semisimple term present), then theta(k) from the
/// height injection (nilpotent term), then the smallest eligible index.
inline EliminationReport eliminate_w0(const RootSystem& rs, ChartIdealGenerators gens) {
  EliminationReport rep;
  int N = static_cast<int>(rs.num_positive_roots());
  HeightInjection inj = rs.find_height_injection();

  auto pivot_ok = [](const Polynomial& f, int var) {
    if (f.linear_coefficient(var) == 0) return false;
    // the variable must not occur in any other monomial
    for (const auto& [e, c] : f.terms()) {
      long tot = 0;
      for (int x : e) tot += x;
      if (e[var] > 0 && !(e[var] == 1 && tot == 1)) return false;
    }
    return true;
  };

  std::vector<char> eliminated(N, 0);
  std::vector<std::pair<int, Polynomial>> work = std::move(gens.generators);
  while (!work.empty()) {
    bool progressed = false;
    for (std::size_t g = 0; g < work.size(); ++g) {
      Polynomial& f = work[g].second;
      if (f.is_zero()) {
        rep.failure_reason = "generator collapsed to zero";
        return rep;
      }
      if (f.is_constant()) {
        rep.failure_reason = "nonzero constant relation";
        return rep;
      }
      int root_idx = work[g].first;
      std::vector<int> candidates;
      candidates.push_back(root_idx);  // Case 1 pivot: t_k with beta_k = alpha
      auto it = inj.theta.find(root_idx);
      if (it != inj.theta.end()) candidates.push_back(it->second);  // Case 2 pivot
      for (int v = 0; v < N; ++v) candidates.push_back(v);
      int pivot = -1;
      for (int v : candidates) {
        if (!eliminated[v] && pivot_ok(f, v)) {
          pivot = v;
          break;
        }
      }
      if (pivot < 0) continue;
      Rat c = f.linear_coefficient(pivot);
      Polynomial rest = f - Polynomial::variable(N, pivot, c);
      Polynomial sub = rest * (Rat(-1) / c);
      eliminated[pivot] = 1;
      rep.steps.push_back({root_idx, pivot});
      std::vector<std::pair<int, Polynomial>> next;
      for (std::size_t g2 = 0; g2 < work.size(); ++g2) {
        if (g2 == g) continue;
        next.emplace_back(work[g2].first, work[g2].second.substitute(pivot, sub));
      }
      work = std::move(next);
      progressed = true;
      break;
    }
    if (!progressed) {
      rep.failure_reason = "no pivot variable available";
      return rep;
    }
  }
  for (int v = 0; v < N; ++v)
    if (!eliminated[v]) rep.free_variables.push_back(v);
  rep.success = true;
  return rep;
}

// ---- conjugation normal forms ---------------------------------------------

struct ConjugationResult {
  RatMat g;       // group element with Ad(g) x = normal form
  RatMat result;  // the normal form reached
};

namespace typea {

inline RatMat identity_like(const RatMat& m) { return rat_identity(m.size()); }

/// Ad(I + c E_{ij}) X = (I + c E_{ij}) X (I - c E_{ij}).
inline RatMat ad_unipotent(const RatMat& x, int i, int j, const Rat& c) {
  int n = static_cast<int>(x.size());
  RatMat g = rat_identity(n), gi = rat_identity(n);
  g[i][j] = c;
  gi[i][j] = -c;
  return rat_mat_mul(rat_mat_mul(g, x), gi);
}

}  // namespace typea

/// Height-increasing elimination: for x = s + sum_{i in I} c_i E_{alpha_i}
/// with s regular on the complement of Phi(J), conjugate away every E_alpha
/// component with alpha outside Phi(J), height by height. The result is
/// exactly s + sum_{j in J} c_j E_{alpha_j}.
inline ConjugationResult conjugate_to_normal_form(const RootSystem& rs, const RatMat& x,
                                                  const std::vector<int>& j_set) {
  typea::require_type_a(rs);
  int n = rs.rank() + 1;
  if (static_cast<int>(x.size()) != n) throw InputError("matrix size mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (b != a && b != a + 1 && x[a][b] != 0)
        throw InputError("input must have the form s + sum_i c_i E_{alpha_i}");
  std::vector<char> in_j_roots = typea::roots_in_subsystem(rs, j_set);

  // alpha_l(s) from the diagonal
  RatVec alpha_s(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) alpha_s[i] = x[i][i] - x[i + 1][i + 1];
  auto root_value = [&](const Root& r) {
    Rat s = 0;
    for (int i = 0; i < rs.rank(); ++i) s += Rat(r.coords[i]) * alpha_s[i];
    return s;
  };

  RatMat y = x;
  RatMat g = rat_identity(n);
  long max_h = rs.root(rs.num_positive_roots() - 1).height;
  for (long hgt = 1; hgt <= max_h; ++hgt) {
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      const Root& r = rs.root(k);
      if (r.height != hgt || in_j_roots[k]) continue;
      auto [i, jj] = typea::root_to_pair(rs, r);
      Rat c = y[i - 1][jj - 1];
      if (c == 0) continue;
      Rat denom = root_value(r);
      if (denom == 0)
        throw InputError("alpha(s_J) = 0 outside Phi(J): s_J is not generic");
      Rat coef = c / denom;
      y = typea::ad_unipotent(y, i - 1, jj - 1, coef);
      RatMat step = rat_identity(n);
      step[i - 1][jj - 1] = coef;
      g = rat_mat_mul(step, g);
    }
  }
  // exact verification of the normal form
  std::set<int> j(j_set.begin(), j_set.end());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) {
        if (y[a][b] != x[a][b]) throw InternalError("conjugation changed the semisimple part");
      } else if (b == a + 1 && j.count(a + 1)) {
        if (y[a][b] != x[a][b]) throw InternalError("conjugation changed a J-component");
      } else if (a < b) {
        if (y[a][b] != 0) throw InternalError("unexpected residual component above diagonal");
      } else {
        if (y[a][b] != 0) throw InternalError("unexpected component below diagonal");
      }
    }
  return {g, y};
}

struct LineConjugation {
  RatMat g;
  bool verified = false;
  RatMat x_t;  // the element t x_J + (1-t) N_0 that was normalized
};

/// For t != 0, x(t) = t x_J + (1-t) N_0 is conjugate to t x_J: first the
/// normal form elimination, then a diagonal (general linear) rescaling with
/// alpha_j(h) = t on J. The adjoint action kills the center, so working in
/// GL_n is legitimate and keeps everything rational.
inline LineConjugation conjugate_line(const RootSystem& rs, const RegularElement& x_j,
                                      const Rat& t) {
  typea::require_type_a(rs);
  if (t == 0) throw InputError("conjugate_line requires t != 0");
  int n = rs.rank() + 1;

  RatMat xt(n, RatVec(n, 0));
  std::set<int> j(x_j.j_set.begin(), x_j.j_set.end());
  for (int a = 0; a < n; ++a) xt[a][a] = t * x_j.matrix[a][a];
  for (int i = 1; i <= rs.rank(); ++i) xt[i - 1][i] = j.count(i) ? Rat(1) : (Rat(1) - t);

  ConjugationResult norm = conjugate_to_normal_form(rs, xt, x_j.j_set);

  // diagonal h with h_i / h_{i+1} = t for i in J, 1 otherwise
  RatVec diag(n, 1);
  for (int i = n - 2; i >= 0; --i) diag[i] = diag[i + 1] * (j.count(i + 1) ? t : Rat(1));
  RatMat h = rat_identity(n), hinv = rat_identity(n);
  for (int a = 0; a < n; ++a) {
    h[a][a] = diag[a];
    hinv[a][a] = 1 / diag[a];
  }
  RatMat y = rat_mat_mul(rat_mat_mul(h, norm.result), hinv);
  RatMat g = rat_mat_mul(h, norm.g);

  RatMat expected(n, RatVec(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) expected[a][b] = t * x_j.matrix[a][b];
  if (!rat_mat_eq(y, expected)) throw InternalError("conjugate_line verification failed");

  // end-to-end check: Ad(g) x(t) = t x_J as one product
  RatMat ginv = rat_mat_inverse(g);
  RatMat direct = rat_mat_mul(rat_mat_mul(g, xt), ginv);
  if (!rat_mat_eq(direct, expected)) throw InternalError("conjugate_line composite check failed");

  LineConjugation out;
  out.g = g;
  out.verified = true;
  out.x_t = xt;
  return out;
}

}  // namespace hessberg

#endif
