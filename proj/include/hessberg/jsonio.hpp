#ifndef HESSBERG_JSONIO_HPP
#define HESSBERG_JSONIO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hessberg/error.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/polyring.hpp"
#include "hessberg/rootsys.hpp"

namespace hessberg {

// Wire formats. Rationals are always "p/q" strings (never floats), roots are
// integer coordinate arrays in the simple-root basis, weights are arrays in
// the fundamental-weight basis. Key order is insertion order so identical
// inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

inline Json json_rat(const Rat& q) { return rat_str(q); }

inline Json json_rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& q : v) a.push_back(rat_str(q));
  return a;
}

inline Json json_root(const Root& r) {
  Json a = Json::array();
  for (long c : r.coords) a.push_back(c);
  return a;
}

inline Json json_weight(const Weight& w) { return json_rat_vec(w.fw); }

inline Json json_polynomial(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["e"] = e;
    t["c"] = rat_str(c);
    terms.push_back(t);
  }
  return terms;
}

inline Json json_rat_mat(const RatMat& m) {
  Json rows = Json::array();
  for (const RatVec& r : m) rows.push_back(json_rat_vec(r));
  return rows;
}

inline Json json_hessenberg(const RootSystem& rs, const HessenbergSpace& h) {
  Json j;
  j["type"] = rs.label();
  Json roots = Json::array();
  for (int k : h.root_indices) roots.push_back(json_root(rs.root(k)));
  j["roots"] = roots;
  j["dimension"] = h.dimension();
  if (rs.component_ranks().size() == 1 && rs.label()[0] == 'A') {
    j["hfun"] = to_hessenberg_function(rs, h);
  }
  return j;
}

/// Parse {"type": "...", "roots": [[...],...]} or {"type": "...", "hfun": [...]}.
inline HessenbergSpace hessenberg_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) throw InputError("Hessenberg JSON must be an object");
  bool has_roots = j.contains("roots"), has_hfun = j.contains("hfun");
  if (has_roots == has_hfun)
    throw InputError("Hessenberg JSON needs exactly one of 'roots' or 'hfun'");
  if (has_hfun) {
    std::vector<int> h = j.at("hfun").get<std::vector<int>>();
    return from_hessenberg_function(rs, h);
  }
  std::vector<IntVec> roots;
  for (const auto& arr : j.at("roots")) roots.push_back(arr.get<IntVec>());
  return validate_hessenberg_roots(rs, roots);
}

inline Weight weight_from_json(const RootSystem& rs, const Json& j) {
  Weight w;
  for (const auto& x : j) {
    if (x.is_number_integer())
      w.fw.push_back(Rat(x.get<long>()));
    else
      w.fw.push_back(rat_parse(x.get<std::string>()));
  }
  if (static_cast<int>(w.fw.size()) != rs.rank()) throw InputError("weight rank mismatch");
  return w;
}

}  // namespace hessberg

#endif
