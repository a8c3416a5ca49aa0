#ifndef HESSBERG_CACHE_HPP
#define HESSBERG_CACHE_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "hessberg/jsonio.hpp"
#include "hessberg/rootsys.hpp"

namespace hessberg {

// On-disk cache for Weyl-group tables, keyed by root-system label and a
// format version. Corrupt or stale entries fall back to recomputation; the
// cache is an optimization only and is consulted by the CLI, never by the
// library core. Only unscaled systems are cached.

constexpr int kCacheFormatVersion = 1;

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("HESSBERG_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "hessberg";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "hessberg";
  return std::filesystem::path(".hessberg-cache");
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& label) {
  return dir / ("weyl-" + label + "-v" + std::to_string(kCacheFormatVersion) + ".json");
}

inline bool load_weyl_cache(const RootSystem& rs, const std::filesystem::path& dir) {
  std::error_code ec;
  std::ifstream in(cache_file(dir, rs.label()));
  if (!in) return false;
  Json j;
  try {
    in >> j;
    if (j.at("format").get<int>() != kCacheFormatVersion) return false;
    if (j.at("label").get<std::string>() != rs.label()) return false;
    WeylGroup wg;
    for (const auto& el : j.at("elements")) {
      WeylElement w;
      w.action_matrix = el.at("matrix").get<IntMat>();
      w.reduced_word = el.at("word").get<std::vector<int>>();
      w.length = static_cast<long>(w.reduced_word.size());
      if (static_cast<int>(w.action_matrix.size()) != rs.rank()) return false;
      if (rs.inversions(w.action_matrix) != w.length) return false;
      wg.elements.push_back(std::move(w));
    }
    if (Int(static_cast<unsigned long>(wg.elements.size())) != rs.weyl_order()) return false;
    // derived tables are recomputed rather than trusted from disk
    long maxlen = 0;
    for (const WeylElement& w : wg.elements) maxlen = std::max(maxlen, w.length);
    if (maxlen != static_cast<long>(rs.num_positive_roots())) return false;
    wg.length_histogram.assign(maxlen + 1, 0);
    for (std::size_t k = 0; k < wg.elements.size(); ++k) {
      wg.length_histogram[wg.elements[k].length]++;
      if (wg.elements[k].length == maxlen) wg.longest_index = k;
    }
    const IntMat& w0 = wg.elements[wg.longest_index].action_matrix;
    wg.istar.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      IntVec img = int_mat_vec(w0, rs.root(rs.simple_root_index(i)).coords);
      for (long& x : img) x = -x;
      int idx = rs.root_index(img);
      if (idx < 0 || rs.root(idx).height != 1) return false;
      for (int jdx = 0; jdx < rs.rank(); ++jdx)
        if (rs.simple_root_index(jdx) == idx) wg.istar[i] = jdx + 1;
    }
    rs.install_weyl(std::move(wg));
    return true;
  } catch (...) {
    return false;  // corrupted entry: recompute
  }
}

inline void save_weyl_cache(const RootSystem& rs, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const WeylGroup& wg = rs.weyl();
  Json j;
  j["format"] = kCacheFormatVersion;
  j["label"] = rs.label();
  Json els = Json::array();
  for (const WeylElement& w : wg.elements) {
    Json el;
    el["word"] = w.reduced_word;
    el["matrix"] = w.action_matrix;
    els.push_back(el);
  }
  j["elements"] = els;
  auto path = cache_file(dir, rs.label());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

/// Prime the Weyl tables of rs from disk when possible, computing and writing
/// back otherwise. Scaled systems are computed directly.
inline void prime_weyl_tables(const RootSystem& rs, const std::filesystem::path& dir) {
  if (rs.metric_scale() != 1) {
    rs.weyl();
    return;
  }
  if (load_weyl_cache(rs, dir)) return;
  rs.weyl();
  save_weyl_cache(rs, dir);
}

}  // namespace hessberg

#endif
