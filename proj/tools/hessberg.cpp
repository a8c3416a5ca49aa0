// hessberg: exact geometric invariants of regular Hessenberg varieties.
//
// Subcommands: roots, hess, volume, degree, class, chi, hilbert, bwb,
// charts, conjugate, betti, verify. All numeric output is exact ("p/q"
// strings); identical configuration and seed produce byte-identical JSON.
// Exit codes: 0 ok, 2 input error, 3 resource bound, 4 internal cross-check
// failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hessberg/apolarity.hpp"
#include "hessberg/cache.hpp"
#include "hessberg/charts.hpp"
#include "hessberg/cohomology.hpp"
#include "hessberg/hessenberg_space.hpp"
#include "hessberg/jsonio.hpp"
#include "hessberg/verify.hpp"
#include "hessberg/volume.hpp"

namespace {

using namespace hessberg;

constexpr int kSchemaVersion = 1;

struct CommonFlags {
  std::string type;
  std::string hfun;
  std::string roots;  // inline JSON array or '-' for stdin
  std::string weight;
  std::string jset;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string cache_dir;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (...) {
      throw InputError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

RatVec parse_rat_list(const std::string& s) {
  RatVec out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(rat_parse(tok));
  return out;
}

Weight parse_weight(const RootSystem& rs, const std::string& s) {
  Weight w;
  w.fw = parse_rat_list(s);
  if (static_cast<int>(w.fw.size()) != rs.rank())
    throw InputError("--weight needs " + std::to_string(rs.rank()) + " coordinates for " +
                     rs.label());
  return w;
}

HessenbergSpace parse_hessenberg(const RootSystem& rs, const CommonFlags& f) {
  if (!f.hfun.empty() && !f.roots.empty())
    throw InputError("give exactly one of --hfun and --roots");
  if (!f.hfun.empty()) return from_hessenberg_function(rs, parse_int_list(f.hfun));
  if (!f.roots.empty()) {
    std::string payload = f.roots;
    if (payload == "-") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      payload = buf.str();
    }
    Json j;
    try {
      j = Json::parse(payload);
    } catch (const std::exception& e) {
      throw InputError(std::string("bad --roots JSON: ") + e.what());
    }
    std::vector<IntVec> roots;
    for (const auto& arr : j) roots.push_back(arr.get<IntVec>());
    return validate_hessenberg_roots(rs, roots);
  }
  throw InputError("a Hessenberg space is required: --hfun or --roots");
}

std::unique_ptr<RootSystem> make_system(const CommonFlags& f, bool want_weyl_cache) {
  if (f.type.empty()) throw InputError("--type is required");
  auto rs = std::make_unique<RootSystem>(f.type);
  if (want_weyl_cache) {
    std::filesystem::path dir =
        f.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(f.cache_dir);
    prime_weyl_tables(*rs, dir);
  }
  return rs;
}

void emit(const Json& j, const CommonFlags& f) {
  if (f.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (f.format != "table") throw InputError("--format must be json or table");
  std::function<void(const Json&, const std::string&)> walk = [&](const Json& v,
                                                                  const std::string& prefix) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it)
        walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else {
      std::cout << prefix << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(j, "");
}

Json header(const std::string& command, const CommonFlags& f) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["type"] = f.type;
  return j;
}

int run_roots(const CommonFlags& f, bool with_weyl, bool with_injection) {
  auto rs = make_system(f, with_weyl);
  Json j = header("roots", f);
  j["rank"] = rs->rank();
  j["num_positive_roots"] = rs->num_positive_roots();
  j["cartan"] = rs->cartan();
  j["symmetrizer"] = json_rat_vec(rs->symmetrizer());
  Json roots = Json::array();
  for (std::size_t k = 0; k < rs->num_positive_roots(); ++k) {
    Json r;
    r["coords"] = json_root(rs->root(k));
    r["height"] = rs->root(k).height;
    roots.push_back(r);
  }
  j["positive_roots"] = roots;
  j["rho"] = json_weight(rs->rho());
  Json fw = Json::array();
  for (const Weight& w : rs->fundamental_weights()) fw.push_back(json_rat_vec(rs->weight_to_root_coords(w)));
  j["fundamental_weights_root_coords"] = fw;
  if (with_weyl) {
    const WeylGroup& wg = rs->weyl();
    j["weyl_order"] = wg.size();
    j["length_histogram"] = wg.length_histogram;
    j["istar"] = wg.istar;
    j["longest_word"] = wg.longest().reduced_word;
  }
  if (with_injection) {
    HeightInjection inj = rs->find_height_injection();
    Json m = Json::array();
    for (const auto& [a, b] : inj.theta) {
      Json e;
      e["root"] = json_root(rs->root(a));
      e["image"] = json_root(rs->root(b));
      m.push_back(e);
    }
    j["height_injection"] = m;
  }
  emit(j, f);
  return 0;
}

int run_hess(const CommonFlags& f, bool enumerate, bool chain) {
  auto rs = make_system(f, false);
  Json j = header("hess", f);
  if (enumerate) {
    Json spaces = Json::array();
    for (const HessenbergSpace& h : enumerate_hessenberg_spaces(*rs))
      spaces.push_back(json_hessenberg(*rs, h));
    j["spaces"] = spaces;
    j["count"] = spaces.size();
    emit(j, f);
    return 0;
  }
  HessenbergSpace h = parse_hessenberg(*rs, f);
  j["space"] = json_hessenberg(*rs, h);
  if (chain) {
    Json steps = Json::array();
    for (const auto& [space, removed] : codim_one_chain(*rs, h)) {
      Json st;
      st["removed"] = json_root(rs->root(removed));
      st["space"] = json_hessenberg(*rs, space);
      steps.push_back(st);
    }
    j["codim_one_chain"] = steps;
  }
  emit(j, f);
  return 0;
}

int run_volume(const CommonFlags& f, const std::string& method) {
  auto rs = make_system(f, method != "deriv");
  HessenbergSpace h = parse_hessenberg(*rs, f);
  Weight lambda = parse_weight(*rs, f.weight);
  Json j = header("volume", f);
  j["weight"] = json_weight(lambda);
  j["method"] = method;
  j["seed"] = f.seed;
  std::optional<Rat> v_deriv, v_local;
  if (method == "deriv" || method == "both") {
    VolumePolynomial vp = volume_polynomial(*rs, h);
    v_deriv = volume(*rs, vp, lambda);
    j["p_h"] = json_polynomial(vp.p_h);
  }
  if (method == "local" || method == "both") {
    LocalizationResult lr = volume_localization(*rs, h, lambda, f.seed);
    v_local = lr.value;
    j["xi"] = lr.xi;
  }
  if (method == "both" && *v_deriv != *v_local)
    throw InternalError("volume methods disagree: " + rat_str(*v_deriv) + " vs " +
                        rat_str(*v_local));
  Rat vol = v_deriv ? *v_deriv : *v_local;
  j["volume"] = rat_str(vol);
  j["degree"] = rat_str(Rat(factorial(h.dimension())) * vol);
  emit(j, f);
  return 0;
}

int run_degree(const CommonFlags& f) {
  auto rs = make_system(f, true);
  HessenbergSpace h = parse_hessenberg(*rs, f);
  Weight lambda = parse_weight(*rs, f.weight);
  if (!weight_is_integral(lambda) || !weight_is_dominant(lambda, true))
    throw InputError("degree requires a regular dominant integral weight");
  Json j = header("degree", f);
  j["weight"] = json_weight(lambda);
  j["dimension"] = h.dimension();
  j["degree"] = integrate_degree(*rs, h, lambda).get_str();
  emit(j, f);
  return 0;
}

int run_class(const CommonFlags& f) {
  auto rs = make_system(f, true);
  HessenbergSpace h = parse_hessenberg(*rs, f);
  SchubertExpansion se = euler_class_expansion(*rs, h);
  Json j = header("class", f);
  j["codimension"] = se.degree;
  Json terms = Json::array();
  for (const auto& [word, coeff] : se.coefficients) {
    Json t;
    t["word"] = word;
    t["coeff"] = rat_str(coeff);
    terms.push_back(t);
  }
  j["schubert_terms"] = terms;
  emit(j, f);
  return 0;
}

int run_chi(const CommonFlags& f) {
  auto rs = make_system(f, true);
  HessenbergSpace h = parse_hessenberg(*rs, f);
  Weight lambda = parse_weight(*rs, f.weight);
  Json j = header("chi", f);
  j["weight"] = json_weight(lambda);
  j["seed"] = f.seed;
  j["chi"] = chi_line_bundle(*rs, h, lambda, f.seed).get_str();
  emit(j, f);
  return 0;
}

int run_hilbert(const CommonFlags& f) {
  auto rs = make_system(f, true);
  HessenbergSpace h = parse_hessenberg(*rs, f);
  Weight lambda = parse_weight(*rs, f.weight);
  RatVec coeffs = hilbert_polynomial(*rs, h, lambda, f.seed);
  Json j = header("hilbert", f);
  j["weight"] = json_weight(lambda);
  j["seed"] = f.seed;
  j["variable"] = "m";
  j["coefficients_ascending"] = json_rat_vec(coeffs);
  std::string pretty;
  for (long t = static_cast<long>(coeffs.size()) - 1; t >= 0; --t) {
    if (coeffs[t] == 0) continue;
    if (!pretty.empty()) pretty += " + ";
    if (t == 0)
      pretty += rat_str(coeffs[t]);
    else
      pretty += (coeffs[t] == 1 ? "" : rat_str(coeffs[t])) + "m" + (t > 1 ? "^" + std::to_string(t) : "");
  }
  j["polynomial"] = pretty;
  emit(j, f);
  return 0;
}

int run_bwb(const CommonFlags& f) {
  auto rs = make_system(f, false);
  Weight lambda = parse_weight(*rs, f.weight);
  BWBResult r = bwb_classify(*rs, lambda);
  Json j = header("bwb", f);
  j["weight"] = json_weight(lambda);
  j["case"] = r.singular ? "singular" : "regular";
  if (!r.singular) {
    j["w"] = r.w.reduced_word;
    j["cohomological_degree"] = r.cohomological_degree;
    j["dominant_weight"] = json_weight(r.dominant_weight);
    j["dimension"] = r.dimension.get_str();
  }
  emit(j, f);
  return 0;
}

int run_charts(const CommonFlags& f, const std::string& weyl_word, bool eliminate) {
  auto rs = make_system(f, true);
  HessenbergSpace h = parse_hessenberg(*rs, f);
  std::vector<int> word;
  if (weyl_word.empty() || weyl_word == "w0") {
    word = rs->weyl().longest().reduced_word;
  } else if (weyl_word == "e") {
    word = {};
  } else {
    std::stringstream ss(weyl_word);
    std::string tok;
    while (ss >> tok) {
      if (!tok.empty() && (tok[0] == 's' || tok[0] == 'S')) tok = tok.substr(1);
      try {
        word.push_back(std::stoi(tok));
      } catch (...) {
        throw InputError("bad --weyl token '" + tok + "' (use e.g. \"s1 s2 s1\")");
      }
    }
    if (!rs->word_is_reduced(word)) throw InputError("--weyl word is not reduced");
  }
  RegularElement x = make_regular_element(*rs, parse_int_list(f.jset), f.seed);
  ChartIdealGenerators gens = chart_polynomials(*rs, x, h, word);
  Json j = header("charts", f);
  j["J"] = x.j_set;
  j["seed"] = f.seed;
  j["semisimple_values"] = json_rat_vec(x.semisimple_values);
  j["regular_element"] = json_rat_mat(x.matrix);
  j["weyl_word"] = word;
  j["representative"] = json_rat_mat(gens.representative);
  Json gl = Json::array();
  for (const auto& [k, poly] : gens.generators) {
    Json g;
    g["root"] = json_root(rs->root(k));
    g["polynomial"] = json_polynomial(poly);
    g["pretty"] = poly.to_string("t");
    gl.push_back(g);
  }
  j["generators"] = gl;
  if (eliminate) {
    bool at_w0 = word == rs->weyl().longest().reduced_word;
    if (!at_w0) throw InputError("--eliminate applies to the w0 chart");
    EliminationReport rep = eliminate_w0(*rs, gens);
    Json e;
    e["success"] = rep.success;
    if (!rep.success) e["failure"] = rep.failure_reason;
    Json steps = Json::array();
    for (const auto& s : rep.steps) {
      Json st;
      st["root"] = json_root(rs->root(s.generator_root));
      st["pivot_variable"] = s.pivot_variable + 1;
      steps.push_back(st);
    }
    e["steps"] = steps;
    Json fv = Json::array();
    for (int v : rep.free_variables) fv.push_back(v + 1);
    e["free_variables"] = fv;
    j["elimination"] = e;
  }
  emit(j, f);
  return 0;
}

int run_conjugate(const CommonFlags& f, const std::string& t_str) {
  auto rs = make_system(f, false);
  Rat t = rat_parse(t_str);
  RegularElement x = make_regular_element(*rs, parse_int_list(f.jset), f.seed);
  LineConjugation lc = conjugate_line(*rs, x, t);
  Json j = header("conjugate", f);
  j["J"] = x.j_set;
  j["seed"] = f.seed;
  j["t"] = rat_str(t);
  j["x_J"] = json_rat_mat(x.matrix);
  j["x_t"] = json_rat_mat(lc.x_t);
  j["g"] = json_rat_mat(lc.g);
  j["verified"] = lc.verified;
  emit(j, f);
  return 0;
}

int run_betti(const CommonFlags& f) {
  auto rs = make_system(f, false);
  HessenbergSpace h = parse_hessenberg(*rs, f);
  GradedBetti b = betti_numbers(*rs, h);
  Json j = header("betti", f);
  j["betti"] = b.betti;
  j["palindromic"] = b.palindromic();
  j["total"] = b.total();
  j["monomial_order"] = "deglex-descending";
  emit(j, f);
  return 0;
}

int run_verify_cmd(const CommonFlags& f, int max_rank, bool sequential) {
  VerifyOptions opt;
  opt.max_rank = max_rank;
  opt.seed = f.seed;
  opt.parallel = !sequential;
  std::vector<CheckResult> results = run_verify_battery(opt);
  Json j = header("verify", f);
  j["max_rank"] = max_rank;
  j["seed"] = f.seed;
  Json checks = Json::array();
  int failures = 0;
  for (const CheckResult& r : results) {
    Json c;
    c["name"] = r.name;
    c["status"] = r.pass ? "pass" : "fail";
    c["detail"] = r.detail;
    checks.push_back(c);
    if (!r.pass) ++failures;
  }
  j["checks"] = checks;
  j["failures"] = failures;
  emit(j, f);
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of regular Hessenberg varieties"};
  app.require_subcommand(1);

  CommonFlags f;
  auto add_common = [&](CLI::App* cmd, bool needs_hess, bool needs_weight) {
    cmd->add_option("--type", f.type, "root system label, e.g. A3, B2, G2, A2xA1")->required();
    if (needs_hess) {
      cmd->add_option("--hfun", f.hfun, "type A Hessenberg function, e.g. 2,3,4,4");
      cmd->add_option("--roots", f.roots, "Hessenberg roots as JSON ('-' reads stdin)");
    }
    if (needs_weight)
      cmd->add_option("--weight", f.weight, "weight in fundamental-weight coordinates")->required();
    cmd->add_option("--seed", f.seed, "PRNG seed recorded in the output");
    cmd->add_option("--format", f.format, "json|table");
    cmd->add_option("--cache-dir", f.cache_dir, "Weyl table cache directory (or $HESSBERG_CACHE)");
  };

  // roots
  bool roots_weyl = false, roots_injection = false;
  CLI::App* c_roots = app.add_subcommand("roots", "print root system data");
  add_common(c_roots, false, false);
  c_roots->add_flag("--weyl", roots_weyl, "include the Weyl group tables");
  c_roots->add_flag("--injection", roots_injection, "include the height-lowering injection");

  bool hess_enum = false, hess_chain = false;
  CLI::App* c_hess = app.add_subcommand("hess", "validate or enumerate Hessenberg spaces");
  add_common(c_hess, true, false);
  c_hess->add_flag("--enumerate", hess_enum, "list all spaces (rank <= 4)");
  c_hess->add_flag("--chain", hess_chain, "include a codimension-one chain down to Delta");

  std::string method = "both";
  CLI::App* c_vol = app.add_subcommand("volume", "volume of the projective embedding");
  add_common(c_vol, true, true);
  c_vol->add_option("--method", method, "deriv|local|both");

  CLI::App* c_deg = app.add_subcommand("degree", "projective degree d! * volume");
  add_common(c_deg, true, true);

  CLI::App* c_class = app.add_subcommand("class", "Schubert expansion of the fundamental class");
  add_common(c_class, true, false);

  CLI::App* c_chi = app.add_subcommand("chi", "Euler characteristic of a line bundle");
  add_common(c_chi, true, true);

  CLI::App* c_hilb = app.add_subcommand("hilbert", "Hilbert polynomial of the embedding");
  add_common(c_hilb, true, true);

  CLI::App* c_bwb = app.add_subcommand("bwb", "Borel-Weil-Bott classification of a weight");
  add_common(c_bwb, false, true);

  std::string weyl_word, t_value = "1";
  bool eliminate = false;
  CLI::App* c_charts = app.add_subcommand("charts", "chart ideal generators (type A)");
  add_common(c_charts, true, false);
  c_charts->add_option("--J", f.jset, "simple indices of J, e.g. 1,3");
  c_charts->add_option("--weyl", weyl_word, "reduced word, e.g. \"s1 s2 s1\" (default w0)");
  c_charts->add_flag("--eliminate", eliminate, "run the w0-chart elimination");

  CLI::App* c_conj = app.add_subcommand("conjugate", "conjugate x(t) to t x_J (type A)");
  add_common(c_conj, false, false);
  c_conj->add_option("--J", f.jset, "simple indices of J");
  c_conj->add_option("--t", t_value, "nonzero rational line parameter");

  CLI::App* c_betti = app.add_subcommand("betti", "graded Betti numbers via apolarity");
  add_common(c_betti, true, false);

  int max_rank = 3;
  bool sequential = false;
  CLI::App* c_verify = app.add_subcommand("verify", "run the full cross-check battery");
  c_verify->add_option("--max-rank", max_rank, "rank bound for the battery");
  c_verify->add_option("--seed", f.seed, "PRNG seed");
  c_verify->add_option("--format", f.format, "json|table");
  c_verify->add_flag("--sequential", sequential, "disable the worker pool");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_roots->parsed()) return run_roots(f, roots_weyl, roots_injection);
    if (c_hess->parsed()) return run_hess(f, hess_enum, hess_chain);
    if (c_vol->parsed()) return run_volume(f, method);
    if (c_deg->parsed()) return run_degree(f);
    if (c_class->parsed()) return run_class(f);
    if (c_chi->parsed()) return run_chi(f);
    if (c_hilb->parsed()) return run_hilbert(f);
    if (c_bwb->parsed()) return run_bwb(f);
    if (c_charts->parsed()) return run_charts(f, weyl_word, eliminate);
    if (c_conj->parsed()) return run_conjugate(f, t_value);
    if (c_betti->parsed()) return run_betti(f);
    if (c_verify->parsed()) return run_verify_cmd(f, max_rank, sequential);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
