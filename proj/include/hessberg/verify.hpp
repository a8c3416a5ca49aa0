#ifndef HESSBERG_VERIFY_HPP
#define HESSBERG_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hessberg/apolarity.hpp"
#include "hessberg/charts.hpp"
#include "hessberg/cohomology.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/polyring.hpp"
#include "hessberg/rootsys.hpp"
#include "hessberg/volume.hpp"

namespace hessberg {

// The `verify` battery: independent cross-checks wired together across
// modules. Each check builds its own root systems, so the workers share no
// mutable state; results are reported in a fixed order regardless of which
// worker finishes first.

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int max_rank = 3;
  std::uint64_t seed = 1;
  bool parallel = true;
};

namespace verify_detail {

inline std::vector<std::string> systems_up_to_rank(int r) {
  std::vector<std::string> all = {"A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3",
                                  "A4", "B4", "C4", "D4", "F4", "A5"};
  std::vector<std::string> out;
  for (const auto& s : all) {
    int rank = std::stoi(s.substr(1));
    if (rank <= r) out.push_back(s);
  }
  return out;
}

inline Weight random_dominant_weight(const RootSystem& rs, Rng& rng) {
  Weight w;
  w.fw.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) w.fw[i] = rng.uniform(1, 6);
  return w;
}

inline CheckResult check_height_injection(const VerifyOptions& opt) {
  CheckResult res{"height-injection", true, ""};
  std::vector<std::string> labels = {"A1", "A2", "A3", "A4", "A5", "B2", "B3",
                                     "B4", "C3", "D4", "G2", "F4"};
  for (const auto& label : labels) {
    int rank = std::stoi(label.substr(1));
    if (rank > std::max(opt.max_rank, 2) && label != "F4" && label != "G2") continue;
    RootSystem rs(label);
    HeightInjection inj = rs.find_height_injection();
    std::set<int> images;
    for (const auto& [a, b] : inj.theta) {
      const Root& alpha = rs.root(a);
      const Root& img = rs.root(b);
      if (!images.insert(b).second) {
        res.pass = false;
        res.detail += label + ": not injective; ";
      }
      if (img.height != alpha.height - 1 || !rs.root_order_leq(img, alpha) || img == alpha) {
        res.pass = false;
        res.detail += label + ": bad image; ";
      }
    }
    std::size_t expected = 0;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
      if (rs.root(k).height >= 2) ++expected;
    if (inj.theta.size() != expected) {
      res.pass = false;
      res.detail += label + ": incomplete; ";
    }
  }
  if (res.pass) res.detail = "injection exists on every tested system";
  return res;
}

inline CheckResult check_rho_wall_scan(const VerifyOptions& opt) {
  CheckResult res{"rho-wall-scan", true, ""};
  for (const auto& label : systems_up_to_rank(std::min(opt.max_rank, 4))) {
    RootSystem rs(label);
    std::vector<int> nonsimple;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
      if (rs.root(k).height >= 2) nonsimple.push_back(static_cast<int>(k));
    for (std::size_t a = 0; a < nonsimple.size(); ++a) {
      check_rho_wall(rs, {nonsimple[a]});
      for (std::size_t b = a + 1; b < nonsimple.size(); ++b)
        check_rho_wall(rs, {nonsimple[a], nonsimple[b]});
    }
  }
  res.detail = "wall witness found for every p <= 2 subset";
  return res;
}

inline CheckResult check_volume_cross_formula(const VerifyOptions& opt) {
  CheckResult res{"volume-cross-formula", true, ""};
  for (const auto& label : systems_up_to_rank(std::min(opt.max_rank, 3))) {
    RootSystem rs(label);
    Rng rng(mix_seed(opt.seed, "verify-volume:" + label));
    for (const HessenbergSpace& h : enumerate_hessenberg_spaces(rs)) {
      VolumePolynomial vp = volume_polynomial(rs, h);
      for (int trial = 0; trial < 3; ++trial) {
        Weight lambda = random_dominant_weight(rs, rng);
        Rat deriv = volume(rs, vp, lambda);
        Rat local = volume_localization(rs, h, lambda, opt.seed + trial).value;
        if (deriv != local) {
          res.pass = false;
          res.detail += label + ": methods disagree; ";
        }
      }
    }
  }
  if (res.pass) res.detail = "derivative and localization volumes agree exactly";
  return res;
}

inline CheckResult check_degree_triangle(const VerifyOptions& opt) {
  CheckResult res{"degree-triangle", true, ""};
  for (const auto& label : systems_up_to_rank(std::min(opt.max_rank, 3))) {
    RootSystem rs(label);
    Rng rng(mix_seed(opt.seed, "verify-degree:" + label));
    for (const HessenbergSpace& h : enumerate_hessenberg_spaces(rs)) {
      Weight lambda = random_dominant_weight(rs, rng);
      integrate_degree(rs, h, lambda);  // throws on any internal mismatch
    }
  }
  res.detail = "integrate_degree = d! * volume on every space";
  return res;
}

inline CheckResult check_chi_trivial(const VerifyOptions& opt) {
  CheckResult res{"chi-structure-sheaf", true, ""};
  for (const auto& label : systems_up_to_rank(std::min(opt.max_rank, 3))) {
    RootSystem rs(label);
    Weight zero;
    zero.fw.assign(rs.rank(), 0);
    for (const HessenbergSpace& h : enumerate_hessenberg_spaces(rs)) {
      Int chi = chi_line_bundle(rs, h, zero, opt.seed);
      if (chi != 1) {
        res.pass = false;
        res.detail += label + ": chi(O) = " + chi.get_str() + "; ";
      }
    }
  }
  if (res.pass) res.detail = "chi(O) = 1 on every space";
  return res;
}

inline CheckResult check_elimination(const VerifyOptions& opt) {
  CheckResult res{"chart-elimination", true, ""};
  for (int n = 2; n <= std::min(opt.max_rank + 1, 4); ++n) {
    RootSystem rs("A" + std::to_string(n - 1));
    const WeylGroup& wg = rs.weyl();
    const std::vector<int>& w0 = wg.longest().reduced_word;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> j;
      for (int i = 0; i < n - 1; ++i)
        if (mask & (1u << i)) j.push_back(i + 1);
      RegularElement x = make_regular_element(rs, j, opt.seed);
      for (const HessenbergSpace& h : enumerate_hessenberg_spaces(rs)) {
        ChartIdealGenerators gens = chart_polynomials(rs, x, h, w0);
        EliminationReport rep = eliminate_w0(rs, gens);
        if (!rep.success || rep.free_variables.size() != h.dimension()) {
          res.pass = false;
          res.detail += rs.label() + " J-mask " + std::to_string(mask) + ": " +
                        (rep.success ? "wrong free count" : rep.failure_reason) + "; ";
        }
      }
    }
  }
  if (res.pass) res.detail = "w0 chart is a polynomial ring in |Phi_H| variables";
  return res;
}

inline CheckResult check_conjugation(const VerifyOptions& opt) {
  CheckResult res{"line-conjugation", true, ""};
  std::vector<Rat> ts = {Rat(1), Rat(2), Rat(-1), Rat(7) / 3};
  for (int n = 2; n <= std::min(opt.max_rank + 1, 4); ++n) {
    RootSystem rs("A" + std::to_string(n - 1));
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> j;
      for (int i = 0; i < n - 1; ++i)
        if (mask & (1u << i)) j.push_back(i + 1);
      RegularElement x = make_regular_element(rs, j, opt.seed);
      for (const Rat& t : ts) {
        LineConjugation lc = conjugate_line(rs, x, t);
        if (!lc.verified) {
          res.pass = false;
          res.detail += rs.label() + ": verification flag false; ";
        }
      }
    }
  }
  if (res.pass) res.detail = "Ad(g) x(t) = t x_J verified exactly";
  return res;
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verify_battery(const VerifyOptions& opt) {
  std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
      {"height-injection", [&] { return verify_detail::check_height_injection(opt); }},
      {"rho-wall-scan", [&] { return verify_detail::check_rho_wall_scan(opt); }},
      {"volume-cross-formula", [&] { return verify_detail::check_volume_cross_formula(opt); }},
      {"degree-triangle", [&] { return verify_detail::check_degree_triangle(opt); }},
      {"chi-structure-sheaf", [&] { return verify_detail::check_chi_trivial(opt); }},
      {"chart-elimination", [&] { return verify_detail::check_elimination(opt); }},
      {"line-conjugation", [&] { return verify_detail::check_conjugation(opt); }},
  };
  std::vector<CheckResult> results(checks.size());
  auto run_one = [&](std::size_t i) -> CheckResult {
    try {
      return checks[i].second();
    } catch (const std::exception& e) {
      return {checks[i].first, false, e.what()};
    }
  };
  if (opt.parallel) {
    std::vector<std::future<CheckResult>> futs;
    for (std::size_t i = 0; i < checks.size(); ++i)
      futs.push_back(std::async(std::launch::async, run_one, i));
    for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_one(i);
  }
  return results;
}

}  // namespace hessberg

#endif
