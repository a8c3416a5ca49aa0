#ifndef HESSBERG_ROOTSYS_HPP
#define HESSBERG_ROOTSYS_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/linalg.hpp"
#include "hessberg/rational.hpp"

namespace hessberg {

// Root systems of types A-G (and direct products, labels joined by 'x'),
// built from Cartan data alone. The positive roots are enumerated once, in a
// fixed order (height ascending, then coordinate vectors lexicographically
// descending) and every downstream module indexes roots by this enumeration.
//
// Conventions used throughout:
//   cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
//   s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i
//   gram[i][j]   = (alpha_i, alpha_j) = d_i * cartan[i][j],  d_i = |alpha_i|^2/2
// The symmetrizer d is normalized so short roots have squared length 2; an
// optional metric_scale multiplies the whole inner product (the library's
// function-level outputs must not depend on it, and tests check that).

struct Root {
  IntVec coords;  // simple-root coordinates, all >= 0 for positive roots
  long height = 0;

  bool operator==(const Root& o) const { return coords == o.coords; }
};

/// Weight in fundamental-weight coordinates (integral weights have integer entries).
struct Weight {
  RatVec fw;

  bool operator==(const Weight& o) const { return fw == o.fw; }
};

struct WeylElement {
  IntMat action_matrix;        // on simple-root coordinates
  long length = 0;             // |{alpha > 0 : w(alpha) < 0}|
  std::vector<int> reduced_word;  // 1-based simple indices

  bool operator==(const WeylElement& o) const { return action_matrix == o.action_matrix; }
};

struct WeylGroup {
  std::vector<WeylElement> elements;  // sorted by (length, word)
  std::size_t longest_index = 0;
  std::vector<int> istar;             // 1-based: w0(alpha_i) = -alpha_{istar[i-1]}
  std::vector<long> length_histogram; // index = length

  std::size_t size() const { return elements.size(); }
  const WeylElement& longest() const { return elements[longest_index]; }
};

/// Height-lowering injection iota on {alpha : ht >= 2},
/// iota(alpha) = alpha - alpha_i for some simple alpha_i, stored as indices
/// into the fixed enumeration together with the induced index map theta.
struct HeightInjection {
  std::map<int, int> theta;  // enumeration index of alpha -> index of iota(alpha)
};

namespace detail {

struct SimpleComponent {
  char series;
  int rank;
};

inline std::vector<SimpleComponent> parse_label(const std::string& label) {
  std::vector<SimpleComponent> comps;
  std::size_t pos = 0;
  while (pos < label.size()) {
    char series = label[pos];
    if (series < 'A' || series > 'G') throw InputError("unknown root-system label: '" + label + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
    if (start == pos) throw InputError("missing rank in label: '" + label + "'");
    int rank = std::stoi(label.substr(start, pos - start));
    comps.push_back({series, rank});
    if (pos < label.size()) {
      if (label[pos] != 'x') throw InputError("bad product separator in label: '" + label + "'");
      ++pos;
      if (pos == label.size()) throw InputError("trailing 'x' in label: '" + label + "'");
    }
  }
  if (comps.empty()) throw InputError("empty root-system label");
  return comps;
}

inline IntMat simple_cartan(char series, int rank) {
  auto chain = [&](int n) {
    IntMat c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    return c;
  };
  switch (series) {
    case 'A': {
      if (rank < 1) throw InputError("A requires rank >= 1");
      return chain(rank);
    }
    case 'B': {
      if (rank < 2) throw InputError("B requires rank >= 2");
      IntMat c = chain(rank);
      c[rank - 1][rank - 2] = -2;  // alpha_{n} short
      return c;
    }
    case 'C': {
      if (rank < 2) throw InputError("C requires rank >= 2");
      IntMat c = chain(rank);
      c[rank - 2][rank - 1] = -2;  // alpha_{n} long
      return c;
    }
    case 'D': {
      if (rank < 3) throw InputError("D requires rank >= 3");
      IntMat c = chain(rank - 1);
      c.resize(rank);
      for (auto& row : c) row.resize(rank, 0);
      c[rank - 1][rank - 1] = 2;
      c[rank - 1][rank - 3] = c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 2] = c[rank - 2][rank - 1] = 0;
      return c;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw InputError("E requires rank in {6,7,8}");
      IntMat c(rank, IntVec(rank, 0));
      for (int i = 0; i < rank; ++i) c[i][i] = 2;
      auto link = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      link(4, 5);
      link(5, 6);
      if (rank >= 7) link(6, 7);
      if (rank >= 8) link(7, 8);
      return c;
    }
    case 'F': {
      if (rank != 4) throw InputError("F requires rank 4");
      IntMat c = chain(4);
      c[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      return c;
    }
    case 'G': {
      if (rank != 2) throw InputError("G requires rank 2");
      return IntMat{{2, -3}, {-1, 2}};  // alpha_1 short, alpha_2 long
    }
    default:
      throw InputError("unknown series");
  }
}

}  // namespace detail

class RootSystem {
public:
  explicit RootSystem(const std::string& label, const Rat& metric_scale = Rat(1))
      : label_(label), scale_(metric_scale) {
    if (metric_scale <= 0) throw InputError("metric scale must be positive");
    build(detail::parse_label(label));
  }

  RootSystem(const RootSystem&) = delete;
  RootSystem& operator=(const RootSystem&) = delete;

  const std::string& label() const { return label_; }
  int rank() const { return n_; }
  const IntMat& cartan() const { return cartan_; }
  const RatVec& symmetrizer() const { return d_; }
  const Rat& metric_scale() const { return scale_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  const Root& root(std::size_t idx) const { return roots_[idx]; }
  const std::vector<int>& component_ranks() const { return comp_ranks_; }

  /// Index in the fixed enumeration, or -1 if not a positive root.
  int root_index(const IntVec& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
  }

  bool is_positive_root(const IntVec& coords) const { return index_.count(coords) > 0; }

  const Weight& rho() const { return rho_; }
  const RatVec& rho_root_coords() const { return rho_rc_; }
  const std::vector<Weight>& fundamental_weights() const { return fweights_; }

  /// Dual basis to the simple roots under ( , ): eps_j with (alpha_i, eps_j) = delta_ij.
  const std::vector<Weight>& dual_basis() const { return dual_basis_; }

  // ---- coordinate conversions -------------------------------------------

  RatVec weight_to_root_coords(const Weight& w) const {
    if (static_cast<int>(w.fw.size()) != n_) throw InputError("weight rank mismatch");
    return rat_mat_vec(cartan_inv_, w.fw);
  }

  Weight weight_from_root_coords(const RatVec& rc) const {
    Weight w;
    w.fw = rat_mat_vec(cartan_rat_, rc);
    return w;
  }

  Weight weight_of_root(const Root& r) const {
    RatVec rc(r.coords.begin(), r.coords.end());
    return weight_from_root_coords(rc);
  }

  // ---- inner product ----------------------------------------------------

  const RatMat& gram() const { return gram_; }

  Rat inner_rc(const RatVec& a, const RatVec& b) const {
    Rat s = 0;
    for (int i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n_; ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
  }

  Rat inner(const Weight& a, const Weight& b) const {
    return inner_rc(weight_to_root_coords(a), weight_to_root_coords(b));
  }

  Rat inner(const Root& a, const Weight& b) const {
    RatVec rc(a.coords.begin(), a.coords.end());
    return inner_rc(rc, weight_to_root_coords(b));
  }

  Rat inner(const Root& a, const Root& b) const {
    RatVec x(a.coords.begin(), a.coords.end()), y(b.coords.begin(), b.coords.end());
    return inner_rc(x, y);
  }

  /// <mu, alpha_i^vee> for mu in root coordinates; integer Cartan pairing,
  /// independent of the metric scale.
  Rat coroot_pairing(const RatVec& root_coords, int i) const {
    Rat s = 0;
    for (int j = 0; j < n_; ++j) s += Rat(cartan_[i][j]) * root_coords[j];
    return s;
  }

  Rat coroot_pairing(const Weight& w, int i) const { return w.fw[i]; }

  // ---- Weyl group -------------------------------------------------------

  /// Matrix of s_i on simple-root coordinates.
  const IntMat& simple_reflection(int i) const { return refl_[i]; }

  IntVec act_on_root_coords(const IntMat& m, const IntVec& v) const { return int_mat_vec(m, v); }

  Root act(const WeylElement& w, const Root& r) const {
    IntVec c = int_mat_vec(w.action_matrix, r.coords);
    Root out;
    out.coords = std::move(c);
    out.height = 0;
    for (long x : out.coords) out.height += x;
    return out;
  }

  Weight act(const WeylElement& w, const Weight& v) const {
    RatVec rc = weight_to_root_coords(v);
    RatVec img(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (w.action_matrix[i][j] != 0) img[i] += Rat(w.action_matrix[i][j]) * rc[j];
    return weight_from_root_coords(img);
  }

  long inversions(const IntMat& m) const {
    long cnt = 0;
    for (const Root& r : roots_) {
      IntVec img = int_mat_vec(m, r.coords);
      for (long x : img) {
        if (x < 0) {
          ++cnt;
          break;
        }
        if (x > 0) break;
      }
    }
    return cnt;
  }

  WeylElement identity_element() const {
    WeylElement e;
    e.action_matrix = int_identity(n_);
    e.length = 0;
    return e;
  }

  WeylElement element_from_word(const std::vector<int>& word) const {
    IntMat m = int_identity(n_);
    for (int i : word) {
      if (i < 1 || i > n_) throw InputError("simple index out of range in word");
      m = int_mat_mul(m, refl_[i - 1]);
    }
    WeylElement w;
    w.action_matrix = std::move(m);
    w.length = inversions(w.action_matrix);
    w.reduced_word = to_reduced_word(w.action_matrix);
    return w;
  }

  bool word_is_reduced(const std::vector<int>& word) const {
    IntMat m = int_identity(n_);
    for (int i : word) {
      if (i < 1 || i > n_) throw InputError("simple index out of range in word");
      m = int_mat_mul(m, refl_[i - 1]);
    }
    return inversions(m) == static_cast<long>(word.size());
  }

  /// Canonical reduced word by repeatedly splitting off the smallest left descent.
  std::vector<int> to_reduced_word(IntMat m) const {
    std::vector<int> word;
    long len = inversions(m);
    while (len > 0) {
      int desc = -1;
      for (int i = 0; i < n_; ++i) {
        // s_i is a left descent iff w^{-1}(alpha_i) < 0 iff row check on m^{-1};
        // equivalently inversions(s_i * m) < inversions(m).
        IntMat cand = int_mat_mul(refl_[i], m);
        long l2 = inversions(cand);
        if (l2 == len - 1) {
          desc = i;
          m = std::move(cand);
          len = l2;
          break;
        }
      }
      if (desc < 0) throw InternalError("descent walk failed");
      word.push_back(desc + 1);
    }
    return word;  // m = s_{word[0]} ... s_{word[k-1]} read back in order
  }

  /// Predicted |W| from the classification (product over components).
  Int weyl_order() const {
    Int total = 1;
    std::size_t offset = 0;
    for (std::size_t c = 0; c < comp_series_.size(); ++c) {
      char s = comp_series_[c];
      int r = comp_ranks_[c];
      Int w;
      switch (s) {
        case 'A': w = factorial(r + 1); break;
        case 'B':
        case 'C': {
          w = factorial(r);
          mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), r);
          break;
        }
        case 'D': {
          w = factorial(r);
          mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), r - 1);
          break;
        }
        case 'E': w = (r == 6) ? Int(51840) : (r == 7) ? Int(2903040) : Int(696729600); break;
        case 'F': w = 1152; break;
        case 'G': w = 12; break;
        default: throw InternalError("bad series");
      }
      total *= w;
      offset += r;
    }
    return total;
  }

  void set_weyl_bound(unsigned long bound) { weyl_bound_ = bound; }
  unsigned long weyl_bound() const { return weyl_bound_; }

  /// Complete enumeration of W (BFS over right multiplication by simple
  /// reflections; the BFS tree yields reduced words). Built once, cached,
  /// immutable afterwards; safe for concurrent readers.
  const WeylGroup& weyl() const {
    std::call_once(weyl_once_, [this] { weyl_ptr_ = std::make_shared<const WeylGroup>(enumerate_weyl()); });
    return *weyl_ptr_;
  }

  /// Install a precomputed table (e.g. from the on-disk cache). No-op if the
  /// group has already been built.
  void install_weyl(WeylGroup&& wg) const {
    std::call_once(weyl_once_, [this, &wg] { weyl_ptr_ = std::make_shared<const WeylGroup>(std::move(wg)); });
  }

  WeylGroup enumerate_weyl() const {
    Int order = weyl_order();
    if (order > Int(static_cast<unsigned long>(weyl_bound_)))
      throw ResourceError("Weyl group order " + order.get_str() + " exceeds bound");

    std::map<IntMat, std::size_t> seen;
    WeylGroup wg;
    WeylElement e = identity_element();
    seen.emplace(e.action_matrix, 0);
    wg.elements.push_back(std::move(e));
    for (std::size_t head = 0; head < wg.elements.size(); ++head) {
      // copy: elements vector may reallocate
      WeylElement cur = wg.elements[head];
      for (int i = 0; i < n_; ++i) {
        IntMat m = int_mat_mul(cur.action_matrix, refl_[i]);
        if (seen.count(m)) continue;
        long len = inversions(m);
        if (len != cur.length + 1) continue;  // not a reduced extension; reached later
        WeylElement nxt;
        nxt.action_matrix = std::move(m);
        nxt.length = len;
        nxt.reduced_word = cur.reduced_word;
        nxt.reduced_word.push_back(i + 1);
        seen.emplace(nxt.action_matrix, wg.elements.size());
        wg.elements.push_back(std::move(nxt));
      }
    }
    if (Int(static_cast<unsigned long>(wg.elements.size())) != order)
      throw InternalError("Weyl BFS count disagrees with classification");

    std::sort(wg.elements.begin(), wg.elements.end(), [](const WeylElement& a, const WeylElement& b) {
      if (a.length != b.length) return a.length < b.length;
      return a.reduced_word < b.reduced_word;
    });
    long maxlen = 0;
    for (std::size_t k = 0; k < wg.elements.size(); ++k)
      if (wg.elements[k].length > maxlen) maxlen = wg.elements[k].length;
    wg.length_histogram.assign(maxlen + 1, 0);
    for (std::size_t k = 0; k < wg.elements.size(); ++k) {
      wg.length_histogram[wg.elements[k].length]++;
      if (wg.elements[k].length == maxlen) wg.longest_index = k;
    }
    if (maxlen != static_cast<long>(roots_.size()))
      throw InternalError("longest element length != |Phi+|");

    // istar: w0(alpha_i) = -alpha_{i*}; w0 is an involution so w0^{-1} = w0.
    const IntMat& w0 = wg.elements[wg.longest_index].action_matrix;
    wg.istar.resize(n_);
    for (int i = 0; i < n_; ++i) {
      IntVec img = int_mat_vec(w0, roots_[simple_index_[i]].coords);
      for (long& x : img) x = -x;
      int idx = root_index(img);
      if (idx < 0 || roots_[idx].height != 1) throw InternalError("w0 image of simple root not simple");
      for (int j = 0; j < n_; ++j)
        if (simple_index_[j] == idx) wg.istar[i] = j + 1;
    }
    return wg;
  }

  /// Enumeration index of alpha_i (they are the height-1 roots).
  int simple_root_index(int i) const { return simple_index_[i]; }

  // ---- partial order and height injection -------------------------------

  /// a <= b iff b - a has all-nonnegative coordinates.
  bool root_order_leq(const Root& a, const Root& b) const {
    for (int i = 0; i < n_; ++i)
      if (b.coords[i] < a.coords[i]) return false;
    return true;
  }

  /// Injection iota on {ht >= 2} with iota(alpha) = alpha - alpha_i, found by
  /// bipartite matching over the covering edges. Kuhn's algorithm, scanning
  /// left vertices and candidates in enumeration order so the result is
  /// deterministic and prefers small iota(alpha).
  HeightInjection find_height_injection() const {
    std::size_t N = roots_.size();
    std::vector<std::vector<int>> adj(N);
    std::vector<int> left;  // indices with height >= 2
    for (std::size_t k = 0; k < N; ++k) {
      if (roots_[k].height < 2) continue;
      left.push_back(static_cast<int>(k));
      for (int i = 0; i < n_; ++i) {
        IntVec c = roots_[k].coords;
        c[i] -= 1;
        int idx = root_index(c);
        if (idx >= 0) adj[k].push_back(idx);
      }
      std::sort(adj[k].begin(), adj[k].end());
    }
    std::vector<int> match_right(N, -1), match_left(N, -1);
    std::vector<char> used(N, 0);
    std::function<bool(int)> augment = [&](int u) -> bool {
      for (int v : adj[u]) {
        if (used[v]) continue;
        used[v] = 1;
        if (match_right[v] < 0 || augment(match_right[v])) {
          match_right[v] = u;
          match_left[u] = v;
          return true;
        }
      }
      return false;
    };
    for (int u : left) {
      std::fill(used.begin(), used.end(), 0);
      if (!augment(u))
        throw InternalError("height injection matching failed for " + label_ +
                            " (such an injection always exists; this is a bug signal)");
    }
    HeightInjection inj;
    for (int u : left) inj.theta[u] = match_left[u];
    return inj;
  }

private:
  void build(const std::vector<detail::SimpleComponent>& comps) {
    n_ = 0;
    for (const auto& c : comps) {
      comp_series_.push_back(c.series);
      comp_ranks_.push_back(c.rank);
      n_ += c.rank;
    }
    // block-diagonal Cartan matrix
    cartan_.assign(n_, IntVec(n_, 0));
    int off = 0;
    for (const auto& c : comps) {
      IntMat blk = detail::simple_cartan(c.series, c.rank);
      for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) cartan_[off + i][off + j] = blk[i][j];
      off += c.rank;
    }
    cartan_rat_ = rat_mat_from_int(cartan_);
    cartan_inv_ = rat_mat_inverse(cartan_rat_);

    // symmetrizer per component: d_i C_ij = d_j C_ji, short roots normalized to
    // squared length 2, then scaled by the metric factor.
    d_.assign(n_, Rat(0));
    off = 0;
    for (const auto& c : comps) {
      std::vector<Rat> local(c.rank, Rat(0));
      local[0] = 1;
      // propagate along the (connected) Dynkin graph
      std::vector<int> stack{0};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < c.rank; ++j) {
          if (i == j || cartan_[off + i][off + j] == 0 || local[j] != 0) continue;
          local[j] = local[i] * Rat(cartan_[off + i][off + j]) / Rat(cartan_[off + j][off + i]);
          stack.push_back(j);
        }
      }
      Rat mn = local[0];
      for (const Rat& v : local) mn = std::min(mn, v);
      for (int i = 0; i < c.rank; ++i) d_[off + i] = scale_ * local[i] / mn;
      off += c.rank;
    }
    gram_.assign(n_, RatVec(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) gram_[i][j] = d_[i] * Rat(cartan_[i][j]);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (gram_[i][j] != gram_[j][i]) throw InternalError("Gram matrix not symmetric");

    build_roots();

    // rho = sum of fundamental weights; also = half sum of positive roots.
    rho_.fw.assign(n_, Rat(1));
    rho_rc_ = weight_to_root_coords(rho_);
    RatVec half(n_, 0);
    for (const Root& r : roots_)
      for (int i = 0; i < n_; ++i) half[i] += Rat(r.coords[i]) / 2;
    if (half != rho_rc_) throw InternalError("rho != half sum of positive roots");

    fweights_.resize(n_);
    dual_basis_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      fweights_[j].fw.assign(n_, Rat(0));
      fweights_[j].fw[j] = 1;
      dual_basis_[j].fw.assign(n_, Rat(0));
      dual_basis_[j].fw[j] = Rat(1) / d_[j];
    }

    refl_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      refl_[i] = int_identity(n_);
      for (int j = 0; j < n_; ++j) refl_[i][i][j] -= cartan_[i][j];
    }

    simple_index_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      IntVec c(n_, 0);
      c[i] = 1;
      simple_index_[i] = root_index(c);
      if (simple_index_[i] < 0) throw InternalError("simple root missing from enumeration");
    }
  }

  // Closure by root strings: beta + alpha_i is a root iff p > 0 where
  // p = q - <beta, alpha_i^vee> and q is the largest k with beta - k alpha_i a root.
  void build_roots() {
    std::set<IntVec> known;
    std::vector<IntVec> frontier;
    for (int i = 0; i < n_; ++i) {
      IntVec c(n_, 0);
      c[i] = 1;
      known.insert(c);
      frontier.push_back(c);
    }
    while (!frontier.empty()) {
      std::vector<IntVec> next;
      for (const IntVec& beta : frontier) {
        for (int i = 0; i < n_; ++i) {
          long pairing = 0;
          for (int j = 0; j < n_; ++j) pairing += cartan_[i][j] * beta[j];
          long q = 0;
          IntVec down = beta;
          for (;;) {
            down[i] -= 1;
            bool neg = false;
            for (long x : down) neg = neg || x < 0;
            if (neg || !known.count(down)) break;
            ++q;
          }
          if (q - pairing <= 0) continue;
          IntVec up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
      frontier = std::move(next);
    }
    roots_.clear();
    for (const IntVec& c : known) {
      Root r;
      r.coords = c;
      for (long x : c) r.height += x;
      roots_.push_back(std::move(r));
    }
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.coords > b.coords;  // lexicographically descending within a height
    });
    for (std::size_t k = 0; k < roots_.size(); ++k) index_[roots_[k].coords] = static_cast<int>(k);
  }

  std::string label_;
  Rat scale_;
  int n_ = 0;
  std::vector<char> comp_series_;
  std::vector<int> comp_ranks_;
  IntMat cartan_;
  RatMat cartan_rat_;
  RatMat cartan_inv_;
  RatVec d_;
  RatMat gram_;
  std::vector<Root> roots_;
  std::map<IntVec, int> index_;
  std::vector<IntMat> refl_;
  std::vector<int> simple_index_;
  Weight rho_;
  RatVec rho_rc_;
  std::vector<Weight> fweights_;
  std::vector<Weight> dual_basis_;
  unsigned long weyl_bound_ = 1000000;

  mutable std::once_flag weyl_once_;
  mutable std::shared_ptr<const WeylGroup> weyl_ptr_;
};

}  // namespace hessberg

#endif
