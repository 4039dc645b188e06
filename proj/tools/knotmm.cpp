#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "knotmm/asymptotics.hpp"
#include "knotmm/coloured.hpp"
#include "knotmm/flype.hpp"
#include "knotmm/loop_solver.hpp"
#include "knotmm/oracle.hpp"
#include "knotmm/planar.hpp"
#include "knotmm/virtual_genus.hpp"
#include "knotmm/weingarten.hpp"

using namespace knotmm;

namespace {

struct Config {
  int order = 9;
  int genus_max = 3;
  std::string tau = "generic";
  std::string tau_mode = "generic";
  int oracle_max_order = 4;
  std::string cache_dir;
  std::string format = "json";
  bool check_tau1 = false;
  int threads = 1;
  std::string output;
  std::string model = "hermitean";
  std::vector<std::string> patterns;
  int k = 2;
  int width = 40;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Q parse_tau(const std::string& s) {
  try {
    return q_from_json(json(s));
  } catch (const std::exception&) {
    throw UsageError("--tau expects an integer or p/q, got '" + s + "'");
  }
}

WMode tau_mode(const Config& c) {
  if (c.tau_mode == "generic") return WMode::Generic;
  if (c.tau_mode == "fixed") return WMode::Fixed;
  if (c.tau_mode == "zero") return WMode::Zero;
  throw UsageError("--tau-mode must be generic, fixed or zero");
}

Pattern parse_pattern(const std::string& s) {
  try {
    return pattern_from_string(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad pattern: ") + e.what());
  }
}

void need_range(const char* flag, int v, int lo, int hi) {
  if (v < lo || v > hi)
    throw UsageError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// series name -> scalar series, for CSV
using Rows = std::vector<std::pair<std::string, QSeries>>;

std::string csv(const Rows& rows) {
  std::ostringstream o;
  o << "series,order,coefficient\n";
  for (auto& [name, s] : rows)
    for (int n = 0; n <= s.order(); ++n) o << name << ',' << n << ',' << q_to_string(s[n]) << '\n';
  return o.str();
}

struct Output {
  json j;
  Rows rows;
  bool csv_ok = true;
};

Output cmd_planar(const Config& c) {
  need_range("--order", c.order, 0, 2000);
  auto st = renormalize_t(c.order);
  auto bare = free_energy_closed(QSeries::constant(1, c.order));
  auto F = renormalized_free_energy(c.order);
  auto G = renormalized_gamma(c.order);
  Output o;
  o.j = json{{"command", "planar"},
             {"order", c.order},
             {"t", series_to_json(st.t)},
             {"a2", series_to_json(st.a2)},
             {"bare_free_energy", series_to_json(bare)},
             {"free_energy", series_to_json(F)},
             {"gamma", series_to_json(G)}};
  o.rows = {{"t", st.t}, {"a2", st.a2}, {"bare_free_energy", bare}, {"free_energy", F}, {"gamma", G}};
  return o;
}

Output cmd_flype(const Config& c) {
  need_range("--order", c.order, 0, 2000);
  auto fs = flype_state(c.order);
  auto g6 = gamma_2l(3, fs.A), g8 = gamma_2l(4, fs.A);
  Output o;
  o.j = json{{"command", "flype"},
             {"order", c.order},
             {"A", series_to_json(fs.A)},
             {"g0", series_to_json(fs.g0)},
             {"gamma_tilde", series_to_json(fs.gamma_tilde)},
             {"H_tilde_prime", series_to_json(fs.H_tilde_prime)},
             {"gamma6", series_to_json(g6)},
             {"gamma8", series_to_json(g8)}};
  o.rows = {{"A", fs.A}, {"g0", fs.g0}, {"gamma_tilde", fs.gamma_tilde}, {"H_tilde_prime", fs.H_tilde_prime},
            {"gamma6", g6}, {"gamma8", g8}};
  return o;
}

Output cmd_virtual(const Config& c) {
  need_range("--order", c.order, 0, 5);
  need_range("--genus-max", c.genus_max, 0, 6);
  VirtualGenus v(c.order, c.genus_max, c.threads);
  Output o;
  o.j = v.to_json();
  o.j["command"] = "virtual";
  for (int h = 0; h <= c.genus_max; ++h) {
    o.rows.emplace_back("gamma_h" + std::to_string(h), v.gamma_h(h));
    o.rows.emplace_back("gamma_tilde_h" + std::to_string(h), v.flype_quotient_h(h));
  }
  return o;
}

Output cmd_coloured(const Config& c) {
  need_range("--order", c.order, 1, 12);
  Output o;
  auto mode = tau_mode(c);
  if (mode == WMode::Zero) throw UsageError("coloured: --tau-mode zero is not supported (use knots)");
  if (mode == WMode::Generic) {
    auto bare = bare_correlators(c.order);
    auto r = renormalize(bare, c.order);
    o.j = coloured_json(r, bare);
    o.csv_ok = false;
    if (c.check_tau1) {
      int n = std::min(c.order, 7);
      auto rep = tau_one_crosschecks(r, bare, n);
      o.j["tau1_check"] = json{{"order", n},
                               {"two_tangle", rep.two_tangle_ok ? "PASS" : "FAIL"},
                               {"six_point", rep.six_ok ? "PASS" : "FAIL"},
                               {"result", rep.two_tangle_ok && rep.six_ok ? "PASS" : "FAIL"}};
    }
  } else {
    if (c.check_tau1) throw UsageError("--check-tau1 needs --tau-mode generic");
    Q tau = parse_tau(c.tau);
    auto bare = bare_correlators_at(tau, c.order);
    auto r = renormalize_at(bare, tau, c.order);
    o.j = coloured_json_at(r, bare);
    o.rows = {{"g1", r.g1}, {"g2", r.g2}, {"t", r.t}};
    bool six = !weingarten(3, WMode::Fixed, tau).pseudo_inverse;
    for (auto& p : coloured_classes())
      if (p.size() == 4 || six) o.rows.emplace_back("Ic" + pattern_to_string(p), connected_series_at(r, bare, p));
  }
  o.j["command"] = "coloured";
  return o;
}

Output cmd_knots(const Config& c, const WeingartenCache* cache) {
  need_range("--order", c.order, 0, 24);
  Pattern p = c.patterns.empty() ? pattern_from_string("(12)") : parse_pattern(c.patterns.front());
  LoopSolver s({WMode::Zero, 0, false, 1, cache});
  auto e = s.solve(p, c.order);
  Output o;
  o.j = json{{"command", "knots"}, {"order", c.order}, {"pattern", pattern_to_one_based(p)}, {"series", series_to_json(e)}};
  o.rows = {{"E" + pattern_to_string(p), e}};
  return o;
}

Output cmd_correlators(const Config& c, const WeingartenCache* cache) {
  need_range("--order", c.order, 0, 30);
  std::vector<Pattern> ps;
  for (auto& s : c.patterns) ps.push_back(parse_pattern(s));
  if (ps.empty()) ps.push_back(pattern_from_string("(12)"));
  Output o;
  std::vector<CorrelatorEntry> entries;
  auto mode = tau_mode(c);
  std::string tau_label;
  if (mode == WMode::Generic) {
    auto es = solve_E_generic(ps, c.order);
    for (size_t i = 0; i < ps.size(); ++i) entries.push_back({ps[i], series_to_json(es[i])});
    tau_label = "generic";
    o.csv_ok = false;
  } else {
    Q tau = mode == WMode::Zero ? Q(0) : parse_tau(c.tau);
    LoopSolver s({mode, tau, false, 1, cache});
    for (auto& p : ps) {
      auto e = s.solve(p, c.order);
      entries.push_back({p, series_to_json(e)});
      o.rows.emplace_back("E" + pattern_to_string(p), e);
    }
    tau_label = mode == WMode::Zero ? "zero" : q_to_string(tau);
  }
  o.j = correlator_table_json("planar-loop", tau_label, c.order, entries);
  o.j["command"] = "correlators";
  return o;
}

Output cmd_oracle(const Config& c) {
  Output o;
  if (c.model == "hermitean" || c.model == "complex") {
    auto m = c.model == "hermitean" ? VacuumModel::Hermitean : VacuumModel::Complex;
    need_range("--oracle-max-order", c.oracle_max_order, 0, m == VacuumModel::Hermitean ? 5 : 6);
    auto f = vacuum_free_energy(m, c.oracle_max_order, c.threads);
    o.j = genus_series_json(m, f);
    o.csv_ok = false;
  } else if (c.model == "coloured" || c.model == "coloured-tangency") {
    need_range("--oracle-max-order", c.oracle_max_order, 0, 6);
    Pattern p = c.patterns.empty() ? pattern_from_string("(12)") : parse_pattern(c.patterns.front());
    int k = static_cast<int>(p.size()) / 2;
    need_range("pattern size k", k, 1, 4);
    auto d = enumerate_coloured(k, c.oracle_max_order, c.model == "coloured-tangency");
    o.j = coloured_json(d, p);
    o.csv_ok = false;
  } else {
    throw UsageError("--model must be hermitean, complex, coloured or coloured-tangency");
  }
  o.j["command"] = "oracle";
  return o;
}

Output cmd_asymptotics(const Config& c) {
  need_range("--order", c.order, 40, 1000);
  need_range("--width", c.width, 3, c.order - 3);
  int n = c.order;
  int nt = std::min(n, 150);  // the quintic root gets slow beyond this
  Rows series = {{"bare_free_energy", free_energy_closed(QSeries::constant(1, n))},
                 {"free_energy", renormalized_free_energy(n)},
                 {"gamma", renormalized_gamma(n)},
                 {"gamma_tilde", gamma_tilde(nt)}};
  json fits = json::array();
  for (auto& [name, s] : series) fits.push_back(fit_to_json(name, fit_tail(s, std::min(c.width, s.order() - 3))));
  json conj = json::array();
  std::vector<double> taus = {-1, 0, 1, 2};
  if (c.tau != "generic") taus = {parse_tau(c.tau).get_d()};
  for (double t : taus) conj.push_back(exponent_to_json(conjectured_exponent(t)));
  json refs = json::array();
  for (auto& r : reference_constants()) refs.push_back({{"name", r.name}, {"exact", r.exact}, {"value", r.value}});
  Output o;
  o.j = json{{"command", "asymptotics"},
             {"order", n},
             {"fits", fits},
             {"conjectured_exponents", conj},
             {"knot_exponent", knot_exponent()},
             {"reference_constants", refs},
             {"caveats", {"tau=2 has logarithmic corrections (log p)^-2; not fitted"}}};
  o.csv_ok = false;
  return o;
}

Output cmd_weingarten(const Config& c, const WeingartenCache& cache) {
  need_range("--k", c.k, 1, 6);
  auto mode = tau_mode(c);
  Q tau = mode == WMode::Fixed ? parse_tau(c.tau) : Q(0);
  auto t = cache.get(c.k, mode, tau);
  Output o;
  o.j = table_to_json(t);
  o.j["command"] = "weingarten";
  o.csv_ok = false;
  return o;
}

int fail(int code, const std::string& kind, const std::string& msg) {
  std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotmm: exact generating series for alternating tangles and links"};
  app.require_subcommand(1);
  Config c;
  auto common = [&c](CLI::App* s) {
    s->add_option("--order", c.order, "truncation order in g");
    s->add_option("--format", c.format, "json or csv (csv only for scalar series)")
        ->check(CLI::IsMember({"json", "csv"}));
    s->add_option("-o,--output", c.output, "output file (default stdout)");
    s->add_option("--cache-dir", c.cache_dir, "Weingarten table cache (default $KNOTMM_CACHE_DIR or .knotmm_cache)");
    s->add_option("--threads", c.threads, "worker threads for the oracle")->check(CLI::Range(1, 256));
  };
  auto tau_opts = [&c](CLI::App* s) {
    s->add_option("--tau", c.tau, "tau as an integer or p/q");
    s->add_option("--tau-mode", c.tau_mode, "generic, fixed or zero")
        ->check(CLI::IsMember({"generic", "fixed", "zero"}));
  };
  auto* planar = app.add_subcommand("planar", "planar quartic model: t(g), F, Gamma");
  auto* flype = app.add_subcommand("flype", "flype classes: A, g0, Gamma-tilde, Gamma_6, Gamma_8");
  auto* virt = app.add_subcommand("virtual", "virtual tangles by genus from the complex-model oracle");
  auto* col = app.add_subcommand("coloured", "O(tau) coloured tangles");
  auto* knots = app.add_subcommand("knots", "tau -> 0 two-point series (prime alternating knots)");
  auto* corr = app.add_subcommand("correlators", "bare correlators E_pi from the loop equations");
  auto* orc = app.add_subcommand("oracle", "brute-force diagram enumeration");
  auto* asy = app.add_subcommand("asymptotics", "growth constants and exponents");
  auto* wg = app.add_subcommand("weingarten", "Weingarten table for k pairs");
  for (auto* s : {planar, flype, virt, col, knots, corr, orc, asy, wg}) common(s);
  for (auto* s : {col, corr, wg, asy}) tau_opts(s);
  virt->add_option("--genus-max", c.genus_max, "largest genus h");
  col->add_flag("--check-tau1", c.check_tau1, "cross-check against the uncoloured series at tau = 1");
  orc->add_option("--model", c.model, "hermitean, complex, coloured or coloured-tangency");
  orc->add_option("--oracle-max-order", c.oracle_max_order, "number of vertices");
  for (auto* s : {knots, corr, orc}) s->add_option("--pattern", c.patterns, "link pattern such as (13)(24)");
  wg->add_option("--k", c.k, "number of pairs");
  asy->add_option("--width", c.width, "number of ratios in the fit window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }

  try {
    if (c.cache_dir.empty()) c.cache_dir = default_cache_dir();
    WeingartenCache cache(c.cache_dir);
    Output o;
    if (*planar) o = cmd_planar(c);
    else if (*flype) o = cmd_flype(c);
    else if (*virt) o = cmd_virtual(c);
    else if (*col) o = cmd_coloured(c);
    else if (*knots) o = cmd_knots(c, &cache);
    else if (*corr) o = cmd_correlators(c, &cache);
    else if (*orc) o = cmd_oracle(c);
    else if (*asy) o = cmd_asymptotics(c);
    else o = cmd_weingarten(c, cache);

    std::string text;
    if (c.format == "csv") {
      if (!o.csv_ok || o.rows.empty()) throw UsageError("csv output is only available for fixed-tau scalar series");
      text = csv(o.rows);
    } else {
      text = o.j.dump(2) + "\n";
    }
    if (c.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.output, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + c.output);
      f << text;
    }
    return 0;
  } catch (const UsageError& e) {
    return fail(2, "usage", e.what());
  } catch (const CacheCorruption& e) {
    return fail(3, "cache_corruption", e.what());
  } catch (const std::domain_error& e) {
    return fail(4, "infeasible", e.what());
  } catch (const std::exception& e) {
    return fail(1, "internal", e.what());
  }
}
