#include "tangle/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tangle/appendix.hpp"
#include "tangle/bipartite.hpp"
#include "tangle/curves.hpp"
#include "tangle/errors.hpp"
#include "tangle/multipartite.hpp"
#include "tangle/named_states.hpp"
#include "tangle/roof.hpp"

namespace tangle::cli {

using nlohmann::json;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

namespace {

// JSON numbers carry the same 12 significant digits as the CSV output.
json jnum(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return std::strtod(format_number(x).c_str(), nullptr);
}

// Raised for bad flag values and unknown names; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

double TableReport::max_deviation() const {
  double m = 0.0;
  for (const auto& c : cells) m = std::max(m, c.deviation);
  return m;
}

double parse_exponent(const std::string& text, const std::string& measure) {
  if (text == "inf" || text == "infinity") return kInfinitePower;
  if (text == "star") {
    if (measure == "n1") return nu_star().nu1_star;
    if (measure == "n2") return nu_star().nu2_star;
    throw UsageError("'star' exponent is defined only for n1 and n2");
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad exponent: " + text);
  }
  if (used != text.size() || !(v > 0.0)) throw UsageError("bad exponent: " + text);
  return v;
}

// ------------------------------------------------------------------ tables

namespace {

double table_tolerance_or_env(double pinned) {
  if (std::getenv("TANGLE_LAB_TOL") != nullptr) return Tolerances::from_environment().equality;
  return pinned;
}

void add_cell(TableReport& r, std::string row, std::string col, double computed, double expected) {
  r.cells.push_back({std::move(row), std::move(col), computed, expected, std::abs(computed - expected)});
}

TableReport table_one() {
  TableReport r{"I", table_tolerance_or_env(1e-9), {}};
  const struct {
    const char* name;
    PureState state;
    FInvariants expected;
  } rows[] = {{"GHZ4", ghz4(), {1.0, 1.0, 0.5}},
              {"Phi2", phi2(), {8.0 / 9.0, 0.0, 0.0}},
              {"Phi3", phi3(), {0.0, 0.0, 1.0}},
              {"Wtilde4", wtilde4(), {0.0, 0.0, 0.0}}};
  for (const auto& row : rows) {
    const FInvariants f = f_invariants(row.state);
    add_cell(r, row.name, "F1", f.f1, row.expected.f1);
    add_cell(r, row.name, "F2", f.f2, row.expected.f2);
    add_cell(r, row.name, "F3", f.f3, row.expected.f3);
  }
  return r;
}

TableReport table_two() {
  TableReport r{"II", table_tolerance_or_env(1e-9), {}};
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const NuStar star = nu_star();

  struct Row {
    const char* name;
    PureState state;
    double t1;
    double t2;
    std::function<double(double)> n1;
    std::function<double(double)> n2;
  };
  auto power_term = [](double base, double nu) { return weighted_power(base, nu); };
  const Row rows[] = {
      {"GHZ4", ghz4(), 1.0, 1.0, [](double) { return 1.0; }, [](double) { return 1.0; }},
      {"Phi2", phi2(), 1.0, 1.0, [&](double nu) { return 1.0 - 3.0 * power_term(2.0 / 3.0, nu); },
       [&](double nu) { return 1.0 - 3.0 * power_term(4.0 / 9.0, nu); }},
      {"Phi3", phi3(), 1.0, 1.0, [](double) { return -1.0; }, [](double) { return -1.0; }},
      {"W4", w4(), 0.0, 0.0,
       [&](double nu) { return (3.0 + s3 - 3.0 * s2) / 2.0 - 3.0 * power_term((3.0 - 2.0 * s2) / 2.0, nu); },
       [&](double nu) { return 1.5 * (s2 - 1.0) - 3.0 * power_term((4.0 * s2 - 5.0) / 4.0, nu); }},
  };
  const struct {
    const char* label;
    double nu1;
    double nu2;
  } exponents[] = {{"nu*", star.nu1_star, star.nu2_star}, {"2", 2.0, 2.0}, {"inf", kInfinitePower, kInfinitePower}};

  for (const auto& row : rows) {
    add_cell(r, row.name, "t1", t1(row.state), row.t1);
    const auto v2 = t2(row.state);
    add_cell(r, row.name, "t2", v2 ? *v2 : std::numeric_limits<double>::quiet_NaN(), row.t2);
    if (!v2) r.cells.back().deviation = std::numeric_limits<double>::infinity();
    for (const auto& e : exponents) {
      add_cell(r, row.name, std::string("n1(") + e.label + ")", n1(row.state, e.nu1), row.n1(e.nu1));
      add_cell(r, row.name, std::string("n2(") + e.label + ")", n2(row.state, e.nu2), row.n2(e.nu2));
    }
  }
  return r;
}

TableReport table_three() {
  TableReport r{"III", 1e-4, {}};
  const double pi = std::numbers::pi, phi0 = 1.27672;
  const struct {
    double p;
    double phi;
  } expected[] = {{0.0163588, pi}, {0.5, 0.0}, {0.74182, pi - phi0}, {0.74182, pi + phi0}};
  const auto zeros = appendix_zeros();
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    const std::string row = "phi=" + zeros[k].label;
    add_cell(r, row, "p", zeros[k].p, expected[k].p);
    add_cell(r, row, "phi", zeros[k].phi, expected[k].phi);
  }
  add_cell(r, "phi0", "phi0", appendix_phi0(), phi0);
  return r;
}

}  // namespace

TableReport compute_table(const std::string& which) {
  if (which == "I") return table_one();
  if (which == "II") return table_two();
  if (which == "III") return table_three();
  throw UsageError("unknown table: " + which + " (expected I, II or III)");
}

// ------------------------------------------------------------------ commands

namespace {

std::string ket_label(std::size_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if (index & qubit_bit(q, n)) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

PureState resolve_state(const RunConfig& cfg) {
  if (cfg.state_name.empty()) throw UsageError("--state is required");
  bool known = false;
  for (auto n : named_state_names()) known = known || n == cfg.state_name;
  if (!known) throw UsageError("unknown state: " + cfg.state_name);
  if (is_family(cfg.state_name)) {
    if (!cfg.p) throw UsageError("family " + cfg.state_name + " needs --p");
    return named_state(cfg.state_name, FamilyParams{*cfg.p, cfg.phi.value_or(0.0)});
  }
  if (cfg.p || cfg.phi) throw UsageError("state " + cfg.state_name + " takes no --p/--phi");
  return named_state(cfg.state_name);
}

void cmd_state(const RunConfig& cfg, std::ostream& out) {
  const PureState psi = resolve_state(cfg);
  if (cfg.format == Format::json) {
    json amps = json::array();
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      amps.push_back({{"ket", ket_label(i, psi.n_qubits())}, {"re", jnum(psi[i].real())}, {"im", jnum(psi[i].imag())}});
    }
    out << json{{"state", cfg.state_name}, {"n_qubits", psi.n_qubits()}, {"amplitudes", amps}}.dump(2) << "\n";
    return;
  }
  out << "# state=" << cfg.state_name << "\n" << "ket,re,im\n";
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    out << ket_label(i, psi.n_qubits()) << "," << format_number(psi[i].real()) << ","
        << format_number(psi[i].imag()) << "\n";
  }
}

// Pure-state measures by name, including the four-qubit invariants.
std::vector<std::pair<std::string, double>> evaluate_measure(const RunConfig& cfg, const PureState& psi) {
  const std::string& m = cfg.measure_name;
  if (m.empty()) throw UsageError("--measure is required");
  if (m == "F" || m == "G") {
    if (m == "F") {
      const FInvariants f = f_invariants(psi);
      return {{"F1", f.f1}, {"F2", f.f2}, {"F3", f.f3}};
    }
    const GMonotones g = g_monotones(psi);
    return {{"G1", g.g1}, {"G2", g.g2}, {"G3", g.g3}};
  }
  bool known = false;
  for (auto n : measure_names()) known = known || n == m;
  if (!known) throw UsageError("unknown measure: " + m);
  if (m == "t2") {
    const auto v = t2(psi, cfg.factors);
    if (!v) return {{"t2", std::numeric_limits<double>::quiet_NaN()}};
    return {{"t2", *v}};
  }
  return {{m, measure_by_name(m, cfg.factors)(psi)}};
}

void cmd_measure(const RunConfig& cfg, std::ostream& out) {
  const PureState psi = resolve_state(cfg);
  const auto values = evaluate_measure(cfg, psi);
  if (cfg.format == Format::json) {
    json j{{"state", cfg.state_name}};
    if (cfg.p) j["p"] = jnum(*cfg.p);
    if (cfg.phi) j["phi"] = jnum(*cfg.phi);
    json vals = json::object();
    for (const auto& [k, v] : values) vals[k] = std::isnan(v) ? json("unsupported") : jnum(v);
    j["values"] = vals;
    out << j.dump(2) << "\n";
    return;
  }
  out << "measure,value\n";
  for (const auto& [k, v] : values) out << k << "," << (std::isnan(v) ? "unsupported" : format_number(v)) << "\n";
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const TableReport r = compute_table(cfg.target);
  if (cfg.format == Format::json) {
    json cells = json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"row", c.row}, {"column", c.column}, {"computed", jnum(c.computed)},
                       {"expected", jnum(c.expected)}, {"deviation", jnum(c.deviation)}});
    }
    out << json{{"table", r.name}, {"tolerance", jnum(r.tolerance)}, {"max_deviation", jnum(r.max_deviation())},
                {"pass", r.pass()}, {"cells", cells}}
               .dump(2)
        << "\n";
  } else {
    out << "# table=" << r.name << "\n# tolerance=" << format_number(r.tolerance) << "\n"
        << "row,column,computed,expected,deviation\n";
    for (const auto& c : r.cells) {
      out << c.row << "," << c.column << "," << format_number(c.computed) << "," << format_number(c.expected) << ","
          << format_number(c.deviation) << "\n";
    }
    out << "# max_deviation=" << format_number(r.max_deviation()) << "\n# pass=" << (r.pass() ? "true" : "false")
        << "\n";
  }
  return r.pass() ? 0 : 1;
}

std::string family_alias(const std::string& name) {
  if (name == "Z_app") return "Zapp";
  return name;
}

void cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const std::string fam = family_alias(cfg.state_name);
  if (std::find(family_names().begin(), family_names().end(), fam) == family_names().end()) {
    throw UsageError("unknown family: " + cfg.state_name + " (expected Z3, Z4 or Zapp)");
  }
  if (cfg.measure_name.empty()) throw UsageError("--measure is required");
  if (std::find(measure_names().begin(), measure_names().end(), cfg.measure_name) == measure_names().end()) {
    throw UsageError("unknown measure: " + cfg.measure_name);
  }
  if (cfg.grid_p < 2 || cfg.grid_phi < 1) throw UsageError("--grid-p must be >= 2 and --grid-phi >= 1");

  const Rank2Family family = family_by_name(fam);
  const auto set = characteristic_curves(family, measure_by_name(cfg.measure_name, cfg.factors),
                                         linspace(0.0, 1.0, cfg.grid_p), phase_grid(cfg.grid_phi));
  if (cfg.format == Format::json) {
    json rows = json::array();
    for (std::size_t i = 0; i < set.p_grid.size(); ++i)
      for (std::size_t j = 0; j < set.phi_grid.size(); ++j)
        rows.push_back({jnum(set.p_grid[i]), jnum(set.phi_grid[j]), jnum(set.at(i, j))});
    json mins = json::array();
    for (double v : set.min_curve) mins.push_back(jnum(v));
    out << json{{"family", fam},         {"measure", cfg.measure_name}, {"grid_p", cfg.grid_p},
                {"grid_phi", cfg.grid_phi}, {"columns", {"p", "phi", "value"}}, {"rows", rows},
                {"min_curve", mins}}
               .dump()
        << "\n";
    return;
  }
  out << "# family=" << fam << "\n# measure=" << cfg.measure_name << "\n# grid_p=" << cfg.grid_p
      << "\n# grid_phi=" << cfg.grid_phi << "\n# mu3=" << format_number(cfg.factors.mu3)
      << "\n# nu1=" << format_number(cfg.factors.nu1) << "\n# nu2=" << format_number(cfg.factors.nu2) << "\n"
      << "p,phi,value\n";
  for (std::size_t i = 0; i < set.p_grid.size(); ++i)
    for (std::size_t j = 0; j < set.phi_grid.size(); ++j)
      out << format_number(set.p_grid[i]) << "," << format_number(set.phi_grid[j]) << "," << format_number(set.at(i, j))
          << "\n";
}

ConvexRoofResult solve_scenario(const RunConfig& cfg) {
  if (cfg.target == "t1") return solve_t1_roof();
  if (cfg.target != "n1" && cfg.target != "n2") {
    throw UsageError("unknown roof scenario: " + cfg.target + " (expected t1, n1 or n2)");
  }
  const double nu = cfg.nu ? *cfg.nu : (cfg.target == "n1" ? cfg.factors.nu1 : cfg.factors.nu2);
  try {
    return cfg.target == "n1" ? solve_n1_roof(nu) : solve_n2_roof(nu);
  } catch (const UnsupportedError& e) {
    throw UsageError(e.what());
  }
}

json decomposition_json(const ConvexRoofResult& roof, double p) {
  const RoofPoint pt = roof.at(p);
  const auto labels = roof.member_labels(p);
  json members = json::array();
  for (std::size_t k = 0; k < pt.decomposition.size(); ++k) {
    members.push_back({{"weight", jnum(pt.decomposition.members()[k].weight)}, {"state", labels[k]}});
  }
  const DecompositionCheck chk = verify_decomposition(pt.decomposition, rho4(p));
  return {{"p", jnum(p)},
          {"value", jnum(pt.value)},
          {"ensemble_average", jnum(pt.ensemble_average)},
          {"segment", pt.segment},
          {"members", members},
          {"verify", {{"ok", chk.ok}, {"max_deviation", jnum(chk.max_deviation)}}}};
}

int cmd_roof(const RunConfig& cfg, std::ostream& out) {
  if (cfg.grid_p < 2) throw UsageError("--grid-p must be >= 2");
  const ConvexRoofResult roof = solve_scenario(cfg);
  json segs = json::array();
  for (const auto& s : roof.segments()) {
    json js{{"p_lo", jnum(s.p_lo)}, {"p_hi", jnum(s.p_hi)}, {"kind", std::string(to_string(s.kind))},
            {"formula", s.formula}};
    if (s.kind == SegmentKind::w4_chord || s.kind == SegmentKind::ghz_chord) js["anchor"] = jnum(s.anchor);
    segs.push_back(js);
  }
  json bps = json::array();
  for (double b : roof.breakpoints()) bps.push_back(jnum(b));

  const double p_req = cfg.p.value_or(0.5);
  check_probability(p_req);
  const json decomposition = decomposition_json(roof, p_req);

  if (cfg.format == Format::csv) {
    out << "# scenario=" << to_string(roof.scenario()) << "\n";
    if (roof.scenario() != RoofScenario::t1) out << "# nu=" << format_number(roof.nu()) << "\n";
    for (double b : roof.breakpoints()) out << "# breakpoint=" << format_number(b) << "\n";
    out << "p,value\n";
    for (double p : linspace(0.0, 1.0, cfg.grid_p)) out << format_number(p) << "," << format_number(roof.value(p)) << "\n";
    return decomposition["verify"]["ok"].get<bool>() ? 0 : 1;
  }

  json samples = json::array();
  for (double p : linspace(0.0, 1.0, cfg.grid_p)) samples.push_back({jnum(p), jnum(roof.value(p))});
  json j{{"scenario", std::string(to_string(roof.scenario()))},
         {"conjectured", roof.conjectured()},
         {"breakpoints", bps},
         {"segments", segs},
         {"samples", samples},
         {"decomposition", decomposition}};
  if (roof.scenario() != RoofScenario::t1) j["nu"] = jnum(roof.nu());
  if (roof.scenario() == RoofScenario::t1) j["summary"] = "value = p, spectral decomposition";
  out << j.dump(2) << "\n";
  return decomposition["verify"]["ok"].get<bool>() ? 0 : 1;
}

// verify <t1|n1|n2|appendix> --p P
int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.p) throw UsageError("verify needs --p");
  const double p = *cfg.p;
  check_probability(p);
  json j{{"scenario", cfg.target}, {"p", jnum(p)}};
  DecompositionCheck chk{};
  if (cfg.target == "appendix") {
    // Equal mixture of the two complex-zero superpositions at p, against Pi(p).
    const double pi = std::numbers::pi, phi0 = appendix_phi0();
    const Ensemble e({{0.5, z_app(p, pi - phi0)}, {0.5, z_app(p, pi + phi0)}});
    chk = verify_decomposition(e, pi_app(p));
    j["ensemble"] = "(Zapp(p,pi-phi0) + Zapp(p,pi+phi0)) / 2";
    j["target"] = "Pi(p)";
  } else {
    const ConvexRoofResult roof = solve_scenario(cfg);
    chk = verify_decomposition(roof.decomposition(p), rho4(p));
    j["target"] = "rho4(p)";
  }
  j["ok"] = chk.ok;
  j["max_deviation"] = jnum(chk.max_deviation);
  if (cfg.format == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    out << "scenario,p,ok,max_deviation\n"
        << cfg.target << "," << format_number(p) << "," << (chk.ok ? "true" : "false") << ","
        << format_number(chk.max_deviation) << "\n";
  }
  return chk.ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement measures and rank-2 convex roofs for small qubit systems", "tangle_lab"};
  app.require_subcommand(1);

  RunConfig cfg;
  double p = 0.0, phi = 0.0, mu3 = 1.5;
  std::string nu1_text = "inf", nu2_text = "inf", nu_text, format_text = "csv";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state_name, "Named state or family (Z3, Z4, Zapp)");
    sub->add_option("--p", p, "Family weight p in [0,1]");
    sub->add_option("--phi", phi, "Family phase in radians");
    sub->add_option("--measure", cfg.measure_name, "Measure name");
    sub->add_option("--nu1", nu1_text, "n1 exponent: number, star or inf");
    sub->add_option("--nu2", nu2_text, "n2 exponent: number, star or inf");
    sub->add_option("--mu3", mu3, "t2 exponent");
    sub->add_option("--grid-p", cfg.grid_p, "Number of p grid points");
    sub->add_option("--grid-phi", cfg.grid_phi, "Number of phase grid points");
    sub->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
  };

  CLI::App* state = app.add_subcommand("state", "Print the amplitudes of a named state");
  CLI::App* measure = app.add_subcommand("measure", "Evaluate a measure on a named state");
  CLI::App* table = app.add_subcommand("table", "Reproduce a reference table (I, II or III)");
  CLI::App* scan = app.add_subcommand("scan", "Sample a measure over the (p, phi) grid of a family");
  CLI::App* roof = app.add_subcommand("roof", "Solve the convex roof of rho4 (t1, n1 or n2)");
  CLI::App* verify = app.add_subcommand("verify", "Check a roof decomposition against its target state");
  for (CLI::App* sub : {state, measure, table, scan, roof, verify}) add_common(sub);
  table->add_option("which", cfg.target, "I, II or III")->required();
  roof->add_option("scenario", cfg.target, "t1, n1 or n2")->required();
  roof->add_option("--nu", nu_text, "Exponent of the scenario: star or inf");
  verify->add_option("scenario", cfg.target, "t1, n1, n2 or appendix")->required();
  verify->add_option("--nu", nu_text, "Exponent of the scenario: star or inf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string name = active->get_name();
  try {
    cfg.command = name == "state"     ? Command::state
                  : name == "measure" ? Command::measure
                  : name == "table"   ? Command::table
                  : name == "scan"    ? Command::scan
                  : name == "roof"    ? Command::roof
                                      : Command::verify;
    if (active->count("--p") > 0) cfg.p = p;
    if (active->count("--phi") > 0) cfg.phi = phi;
    if (!(mu3 > 0.0)) throw UsageError("--mu3 must be positive");
    cfg.factors.mu3 = mu3;
    cfg.factors.nu1 = parse_exponent(nu1_text, "n1");
    cfg.factors.nu2 = parse_exponent(nu2_text, "n2");
    if (!nu_text.empty()) cfg.nu = parse_exponent(nu_text, cfg.target);
    cfg.format = format_text == "json" ? Format::json : Format::csv;

    std::ostringstream buffer;
    int code = 0;
    switch (cfg.command) {
      case Command::state: cmd_state(cfg, buffer); break;
      case Command::measure: cmd_measure(cfg, buffer); break;
      case Command::table: code = cmd_table(cfg, buffer); break;
      case Command::scan: cmd_scan(cfg, buffer); break;
      case Command::roof: code = cmd_roof(cfg, buffer); break;
      case Command::verify: code = cmd_verify(cfg, buffer); break;
    }
    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) throw UsageError("cannot open output file: " + cfg.out_path);
      f << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tangle::cli
