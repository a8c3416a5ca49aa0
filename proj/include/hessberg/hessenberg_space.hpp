#ifndef HESSBERG_HESSENBERG_SPACE_HPP
#define HESSBERG_HESSENBERG_SPACE_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hessberg/error.hpp"
#include "hessberg/rootsys.hpp"

namespace hessberg {

// A Hessenberg space is encoded by its set of positive roots Phi_H: a
// lower-closed subset of Phi+ containing every simple root. Values of this
// type are only ever produced through validation, so holding one is proof
// that both conditions hold.

struct HessenbergSpace {
  std::vector<int> root_indices;  // ascending enumeration indices
  std::vector<char> member;       // size |Phi+|, membership bitmap

  std::size_t dimension() const { return root_indices.size(); }
  bool contains(int root_idx) const { return member[root_idx] != 0; }
};

struct HessenbergViolation {
  std::string kind;  // "missing-simple" | "not-lower-closed" | "not-a-root"
  IntVec witness_a;
  IntVec witness_b;  // the pair (alpha, beta) for closure violations
};

inline std::vector<HessenbergViolation> check_hessenberg(const RootSystem& rs,
                                                         const std::vector<int>& root_indices) {
  std::vector<HessenbergViolation> bad;
  std::vector<char> in(rs.num_positive_roots(), 0);
  for (int k : root_indices) {
    if (k < 0 || k >= static_cast<int>(rs.num_positive_roots()))
      throw InputError("root index out of range");
    in[k] = 1;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    int k = rs.simple_root_index(i);
    if (!in[k]) bad.push_back({"missing-simple", rs.root(k).coords, {}});
  }
  for (std::size_t b = 0; b < rs.num_positive_roots(); ++b) {
    if (!in[b]) continue;
    for (std::size_t a = 0; a < b; ++a) {
      if (in[a]) continue;
      if (rs.root_order_leq(rs.root(a), rs.root(b)))
        bad.push_back({"not-lower-closed", rs.root(a).coords, rs.root(b).coords});
    }
  }
  return bad;
}

inline std::string violations_to_string(const std::vector<HessenbergViolation>& v) {
  std::string s;
  for (const auto& x : v) {
    s += x.kind + " [";
    for (std::size_t i = 0; i < x.witness_a.size(); ++i)
      s += (i ? "," : "") + std::to_string(x.witness_a[i]);
    s += "]";
    if (!x.witness_b.empty()) {
      s += " <= [";
      for (std::size_t i = 0; i < x.witness_b.size(); ++i)
        s += (i ? "," : "") + std::to_string(x.witness_b[i]);
      s += "]";
    }
    s += "; ";
  }
  return s;
}

inline HessenbergSpace validate_hessenberg(const RootSystem& rs, std::vector<int> root_indices) {
  std::sort(root_indices.begin(), root_indices.end());
  root_indices.erase(std::unique(root_indices.begin(), root_indices.end()), root_indices.end());
  auto bad = check_hessenberg(rs, root_indices);
  if (!bad.empty())
    throw InputError("invalid Hessenberg space: " + violations_to_string(bad));
  HessenbergSpace h;
  h.root_indices = std::move(root_indices);
  h.member.assign(rs.num_positive_roots(), 0);
  for (int k : h.root_indices) h.member[k] = 1;
  return h;
}

inline HessenbergSpace validate_hessenberg_roots(const RootSystem& rs,
                                                 const std::vector<IntVec>& roots) {
  std::vector<int> idx;
  for (const IntVec& c : roots) {
    int k = rs.root_index(c);
    if (k < 0) throw InputError("not a positive root in " + rs.label());
    idx.push_back(k);
  }
  return validate_hessenberg(rs, std::move(idx));
}

inline HessenbergSpace full_space(const RootSystem& rs) {
  std::vector<int> all(rs.num_positive_roots());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  return validate_hessenberg(rs, std::move(all));
}

inline HessenbergSpace minimal_space(const RootSystem& rs) {
  std::vector<int> idx;
  for (int i = 0; i < rs.rank(); ++i) idx.push_back(rs.simple_root_index(i));
  return validate_hessenberg(rs, std::move(idx));
}

/// Type A encoding: h nondecreasing, i <= h(i) <= n, with Phi_H =
/// {alpha_i + ... + alpha_{j-1} : i < j <= h(i)}. Rejects h that fail to
/// produce every simple root.
inline HessenbergSpace from_hessenberg_function(const RootSystem& rs, std::vector<int> h) {
  if (rs.component_ranks().size() != 1)
    throw InputError("Hessenberg functions require an irreducible type A system");
  int n = rs.rank() + 1;
  if (static_cast<int>(h.size()) == n - 1) h.push_back(n);  // h(n) = n is forced
  if (static_cast<int>(h.size()) != n) throw InputError("Hessenberg function must have length n");
  for (int i = 0; i < n; ++i) {
    if (h[i] < i + 1 || h[i] > n) throw InputError("Hessenberg function requires i <= h(i) <= n");
    if (i > 0 && h[i] < h[i - 1]) throw InputError("Hessenberg function must be nondecreasing");
  }
  std::vector<int> idx;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= h[i - 1]; ++j) {
      IntVec c(rs.rank(), 0);
      for (int k = i; k < j; ++k) c[k - 1] = 1;
      int r = rs.root_index(c);
      if (r < 0) throw InternalError("type A root lookup failed");
      idx.push_back(r);
    }
  }
  return validate_hessenberg(rs, std::move(idx));  // catches h(i) = i violating (simple roots)
}

/// Inverse of the encoding above, defined for every valid type A space.
inline std::vector<int> to_hessenberg_function(const RootSystem& rs, const HessenbergSpace& h) {
  int n = rs.rank() + 1;
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    int best = i;
    for (int j = i + 1; j <= n; ++j) {
      IntVec c(rs.rank(), 0);
      for (int k = i; k < j; ++k) c[k - 1] = 1;
      int r = rs.root_index(c);
      if (r >= 0 && h.contains(r)) best = j;
    }
    out[i - 1] = best;
  }
  return out;
}

/// All lower-closed supersets of the simple roots; DFS over the non-simple
/// roots in enumeration order (a linear extension of the partial order), so a
/// root may be included only when all its lower covers already are.
inline std::vector<HessenbergSpace> enumerate_hessenberg_spaces(const RootSystem& rs) {
  if (rs.rank() > 4) throw ResourceError("Hessenberg enumeration bounded to rank <= 4");
  std::vector<int> nonsimple;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.root(k).height >= 2) nonsimple.push_back(static_cast<int>(k));

  std::vector<HessenbergSpace> out;
  std::vector<char> chosen(rs.num_positive_roots(), 1);
  for (int k : nonsimple) chosen[k] = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == nonsimple.size()) {
      std::vector<int> idx;
      for (std::size_t k = 0; k < chosen.size(); ++k)
        if (chosen[k]) idx.push_back(static_cast<int>(k));
      out.push_back(validate_hessenberg(rs, std::move(idx)));
      return;
    }
    int k = nonsimple[pos];
    dfs(pos + 1);  // excluded: never blocks smaller roots (enumeration respects order)
    bool closed = true;
    for (int i = 0; i < rs.rank() && closed; ++i) {
      IntVec c = rs.root(k).coords;
      c[i] -= 1;
      if (c[i] < 0) continue;
      int lower = rs.root_index(c);
      if (lower >= 0 && !chosen[lower]) closed = false;
    }
    if (closed) {
      chosen[k] = 1;
      dfs(pos + 1);
      chosen[k] = 0;
    }
  };
  dfs(0);
  // exclusion of a cover only prunes immediate predecessors; run a final filter
  // to be safe against non-cover order relations
  std::vector<HessenbergSpace> valid;
  for (auto& h : out) {
    if (check_hessenberg(rs, h.root_indices).empty()) valid.push_back(std::move(h));
  }
  std::sort(valid.begin(), valid.end(), [](const HessenbergSpace& a, const HessenbergSpace& b) {
    if (a.root_indices.size() != b.root_indices.size())
      return a.root_indices.size() < b.root_indices.size();
    return a.root_indices < b.root_indices;
  });
  valid.erase(std::unique(valid.begin(), valid.end(),
                          [](const HessenbergSpace& a, const HessenbergSpace& b) {
                            return a.root_indices == b.root_indices;
                          }),
              valid.end());
  return valid;
}

/// Chain H = H_0 > H_1 > ... > Delta, each step removing a maximal non-simple
/// root (ties broken towards the latest root in the fixed enumeration).
/// Returns pairs (space after removal, removed root index).
inline std::vector<std::pair<HessenbergSpace, int>> codim_one_chain(const RootSystem& rs,
                                                                    const HessenbergSpace& h) {
  std::vector<std::pair<HessenbergSpace, int>> chain;
  HessenbergSpace cur = h;
  for (;;) {
    int pick = -1;
    for (int k : cur.root_indices) {
      if (rs.root(k).height < 2) continue;
      bool maximal = true;
      for (int m : cur.root_indices) {
        if (m == k) continue;
        if (rs.root_order_leq(rs.root(k), rs.root(m))) {
          maximal = false;
          break;
        }
      }
      if (maximal && k > pick) pick = k;
    }
    if (pick < 0) break;
    std::vector<int> idx;
    for (int k : cur.root_indices)
      if (k != pick) idx.push_back(k);
    cur = validate_hessenberg(rs, std::move(idx));
    chain.emplace_back(cur, pick);
  }
  return chain;
}

}  // namespace hessberg

#endif
