// Command-line front-end for Fekete sets, Lebesgue constants, endpoints of
// normalized concatenated Fekete segments, rho sweeps, interpolation and verification.

#include "histo/arcmap.hpp"
#include "histo/families.hpp"
#include "histo/fekete.hpp"
#include "histo/interpolation.hpp"
#include "histo/io.hpp"
#include "histo/lebesgue.hpp"
#include "histo/quadrature.hpp"
#include "histo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerifyFailed = 1;

// Invalid user input, mapped to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string basis = "chebu";
  std::string mode = "normalized";
  std::uint64_t seed = 0;
  std::string out;
  std::string format;  // empty: command default
  std::string r = "5";
  std::string family;
  double lambda = 0.5;
  std::size_t starts = 16;
  bool unpinned = false;
  std::string function = "runge";
  std::size_t points = 0;
  std::string suite = "all";
};

histo::BasisKind basis_of(const Config& c) {
  const auto b = histo::parse_basis(c.basis);
  if (!b) throw ConfigError("unknown basis '" + c.basis + "'");
  return *b;
}

histo::Mode mode_of(const Config& c) {
  const auto m = histo::parse_mode(c.mode);
  if (!m) throw ConfigError("unknown mode '" + c.mode + "'");
  return *m;
}

histo::Family family_of(const Config& c, histo::Family fallback) {
  if (c.family.empty()) return fallback;
  const auto f = histo::parse_family(c.family);
  if (!f) throw ConfigError("unknown family '" + c.family + "'");
  return *f;
}

std::string format_of(const Config& c, const std::string& fallback, std::initializer_list<std::string_view> allowed = {"csv", "json"}) {
  const std::string f = c.format.empty() ? fallback : c.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw ConfigError("format '" + f + "' is not available for this command");
  }
  return f;
}

std::vector<std::size_t> r_values(const Config& c) {
  try {
    return histo::parse_range(c.r);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

histo::FamilyOptions family_options(const Config& c, histo::Family family) {
  if (family == histo::Family::C2Fekete && !(c.lambda > 0.0 && c.lambda < 1.0)) {
    throw ConfigError("--lambda must lie in (0, 1)");
  }
  histo::FamilyOptions opts;
  opts.lambda = c.lambda;
  opts.normalized.seed = c.seed;
  opts.normalized.starts = c.starts;
  opts.normalized.pin_endpoints = !c.unpinned;
  return opts;
}

// Checks the size preconditions that would otherwise surface as library errors.
void check_family_r(histo::Family family, std::size_t r) {
  const std::size_t min_r =
      (family == histo::Family::Lgl || family == histo::Family::UniformNodes || family == histo::Family::C2Fekete) ? 2 : 1;
  if (r < min_r) throw ConfigError("--r must be at least " + std::to_string(min_r) + " for this family");
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + c.out + "'");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_sets(const Config& c, bool nodes) {
  const histo::Family family = family_of(c, nodes ? histo::Family::Lgl : histo::Family::C1FeketeNormalized);
  const bool node_family = family == histo::Family::Lgl || family == histo::Family::UniformNodes;
  if (nodes != node_family) {
    throw ConfigError(std::string("family '") + std::string(histo::to_string(family)) + "' is not a " +
                      (nodes ? "node" : "segment") + " family");
  }
  const std::string format = format_of(c, "json");
  const histo::FamilyOptions opts = family_options(c, family);
  std::vector<histo::FeketeResult> results;
  for (std::size_t r : r_values(c)) {
    check_family_r(family, r);
    results.push_back(histo::make_family(family, r, opts));
  }
  if (format == "json") {
    if (results.size() == 1) {
      json j = histo::to_json(results.front());
      j["family"] = histo::to_string(family);
      emit(c, dump(j));
    } else {
      json arr = json::array();
      for (const auto& res : results) {
        json j = histo::to_json(res);
        j["family"] = histo::to_string(family);
        arr.push_back(std::move(j));
      }
      emit(c, dump(arr));
    }
    return 0;
  }
  std::string csv = "r,index,alpha,beta\n";
  for (const auto& res : results) {
    for (std::size_t i = 0; i < res.set.size(); ++i) {
      csv += std::to_string(res.set.size()) + "," + std::to_string(i + 1) + "," + histo::format_double(res.set[i].alpha) +
             "," + histo::format_double(res.set[i].beta) + "\n";
    }
  }
  emit(c, csv);
  return 0;
}

int cmd_lebesgue(const Config& c) {
  const histo::Family family = family_of(c, histo::Family::Lgl);
  const histo::BasisKind basis = basis_of(c);
  const histo::Mode mode = mode_of(c);
  const std::string format = format_of(c, "csv");
  const histo::FamilyOptions opts = family_options(c, family);
  const std::vector<std::size_t> rs = r_values(c);
  for (std::size_t r : rs) check_family_r(family, r);
  const bool node_family = family == histo::Family::Lgl || family == histo::Family::UniformNodes;
  if (!node_family && mode == histo::Mode::Nodal) throw ConfigError("nodal mode needs a node family");
  if (node_family && mode == histo::Mode::Segmental) throw ConfigError("segmental mode needs a segment family");
  if (basis == histo::BasisKind::Monomial) {
    for (std::size_t r : rs) {
      if (r > histo::kMaxMonomialOrder) throw ConfigError("the monomial basis is limited to r <= 30");
    }
  }

  const histo::FamilyGenerator generator = [&](std::size_t r) { return histo::make_family(family, r, opts).set; };
  const std::vector<histo::GrowthRow> rows = histo::growth_profile(generator, rs, basis, mode);
  bool failed = false;
  for (const auto& row : rows) {
    if (!row.estimate) {
      std::cerr << "r = " << row.r << ": " << row.error << "\n";
      failed = true;
    }
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json j{{"r", row.r}};
      if (row.estimate) {
        j["lebesgue"] = row.estimate->value;
        j["argmax_x"] = row.estimate->argmax_x;
        j["grid_size"] = row.estimate->grid_size;
        j["regular"] = row.estimate->regular;
      } else {
        j["error"] = row.error;
      }
      arr.push_back(std::move(j));
    }
    emit(c, dump(json{{"family", histo::to_string(family)}, {"basis", histo::to_string(basis)},
                      {"mode", histo::to_string(mode)}, {"rows", arr}}));
  } else {
    emit(c, histo::lebesgue_csv(rows));
  }
  return failed ? kExitNumerical : 0;
}

struct Table1Row {
  std::size_t r;
  std::vector<double> analytic;  // NaN marks a free breakpoint
};

std::vector<Table1Row> table1_reference() {
  const double a6 = (1.0 + 2.0 * std::numbers::sqrt2) / 7.0;
  return {
      {1, {-1.0, 1.0}},
      {2, {-1.0, std::nan(""), 1.0}},
      {3, {-1.0, -1.0, 1.0, 1.0}},
      {4, {-1.0, -1.0, 0.0, 1.0, 1.0}},
      {5, {-1.0, -1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0, 1.0}},
      {6, {-1.0, -1.0, -a6, 0.0, a6, 1.0, 1.0}},
  };
}

int cmd_table1(const Config& c) {
  const std::string format = format_of(c, "text", {"csv", "json", "text"});
  histo::NormalizedOptions opts;
  opts.seed = c.seed;
  opts.starts = c.starts;
  double max_dev = 0.0;
  json rows = json::array();
  std::ostringstream text;
  std::string csv = "r,index,computed,analytic,deviation,non_unique\n";
  text << "normalized concatenated Fekete segments: endpoints\n";
  for (const Table1Row& ref : table1_reference()) {
    const histo::FeketeResult res = histo::fekete_concat_normalized(ref.r, opts);
    double dev = 0.0;
    json jr{{"r", ref.r}, {"computed", res.points}, {"non_unique", res.diagnostics.non_unique}};
    json analytic = json::array();
    text << "r = " << ref.r << (res.diagnostics.non_unique ? "  (non-unique)" : "") << "\n";
    for (std::size_t k = 0; k < ref.analytic.size(); ++k) {
      const double a = ref.analytic[k];
      const bool free = std::isnan(a);
      const double d = free ? 0.0 : std::abs(res.points[k] - a);
      dev = std::max(dev, d);
      analytic.push_back(free ? json(nullptr) : json(a));
      char analytic_text[32];
      if (free) {
        std::snprintf(analytic_text, sizeof analytic_text, "%15s", "free");
      } else {
        std::snprintf(analytic_text, sizeof analytic_text, "% .12f", a);
      }
      char line[160];
      std::snprintf(line, sizeof line, "  xi_%zu  computed % .12f  analytic %s  deviation %.3g\n", k + 1, res.points[k],
                    analytic_text, d);
      text << line;
      csv += std::to_string(ref.r) + "," + std::to_string(k + 1) + "," + histo::format_double(res.points[k]) + "," +
             (free ? std::string() : histo::format_double(a)) + "," + histo::format_double(d) + "," +
             (res.diagnostics.non_unique ? "1" : "0") + "\n";
    }
    jr["analytic"] = analytic;
    jr["deviation"] = dev;
    rows.push_back(std::move(jr));
    max_dev = std::max(max_dev, dev);
  }
  const bool pass = max_dev <= 1e-6;
  char summary[96];
  std::snprintf(summary, sizeof summary, "max deviation %.3g (tolerance 1e-6): %s\n", max_dev, pass ? "PASS" : "FAIL");
  text << summary;
  if (format == "json") {
    emit(c, dump(json{{"rows", rows}, {"max_deviation", max_dev}, {"pass", pass}}));
  } else if (format == "csv") {
    emit(c, csv);
  } else {
    emit(c, text.str());
  }
  return pass ? 0 : kExitNumerical;
}

int cmd_rho_sweep(const Config& c) {
  const std::string format = format_of(c, "csv");
  const std::size_t n = c.points == 0 ? 20 : c.points;
  std::string csv = "r,lambda,rho,log_abs_det\n";
  json arr = json::array();
  for (std::size_t r : r_values(c)) {
    if (r < 2) throw ConfigError("--r must be at least 2");
    const double top = std::numbers::pi / static_cast<double>(r);
    std::vector<double> lambdas, grid;
    for (std::size_t k = 0; k < n; ++k) {
      const double lam = k == 0 ? 1e-6 : static_cast<double>(k) / static_cast<double>(n);
      lambdas.push_back(lam);
      grid.push_back(lam * top);
    }
    const std::vector<histo::RhoSweepRow> rows = histo::det_rho_sweep(r, grid);
    json jrows = json::array();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      csv += std::to_string(r) + "," + histo::format_double(lambdas[k]) + "," + histo::format_double(rows[k].rho) + "," +
             histo::format_double(rows[k].log_abs_det) + "\n";
      jrows.push_back({{"lambda", lambdas[k]}, {"rho", rows[k].rho}, {"log_abs_det", rows[k].log_abs_det}});
    }
    arr.push_back({{"r", r}, {"rows", jrows}});
  }
  emit(c, format == "json" ? dump(arr) : csv);
  return 0;
}

int cmd_interp(const Config& c) {
  const histo::Family family = family_of(c, histo::Family::Lgl);
  const histo::BasisKind basis = basis_of(c);
  const histo::Mode mode = mode_of(c);
  const std::string format = format_of(c, "csv");
  const std::vector<std::size_t> rs = r_values(c);
  if (rs.size() != 1) throw ConfigError("interp takes a single --r");
  const std::size_t r = rs.front();
  check_family_r(family, r);
  if (basis == histo::BasisKind::Monomial && r > histo::kMaxMonomialOrder) {
    throw ConfigError("the monomial basis is limited to r <= 30");
  }
  histo::RealFunction f;
  try {
    f = histo::test_function(c.function);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const histo::FeketeResult res = histo::make_family(family, r, family_options(c, family));
  histo::Interpolator op = [&] {
    try {
      return histo::Interpolator(res.set, basis, mode);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  const histo::Polynomial p = op(f);
  const std::vector<double> xs = histo::uniform_grid(c.points == 0 ? 201 : c.points);
  double max_err = 0.0;
  std::string csv = "x,f,interpolant\n";
  json samples = json::array();
  for (double x : xs) {
    const double fx = f(x), px = p(x);
    max_err = std::max(max_err, std::abs(fx - px));
    csv += histo::format_double(x) + "," + histo::format_double(fx) + "," + histo::format_double(px) + "\n";
    samples.push_back({x, fx, px});
  }
  if (format == "json") {
    emit(c, dump(json{{"r", r},
                      {"family", histo::to_string(family)},
                      {"function", c.function},
                      {"basis", histo::to_string(basis)},
                      {"mode", histo::to_string(mode)},
                      {"coefficients", p.coeffs},
                      {"max_error", max_err},
                      {"samples", samples},
                      {"set", histo::to_json(res.set)}}));
  } else {
    emit(c, csv);
  }
  return 0;
}

int cmd_verify(const Config& c) {
  (void)format_of(c, "json", {"json"});
  histo::VerifyReport report;
  try {
    report = histo::run_verify(c.suite, c.seed);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  emit(c, dump(histo::to_json(report)));
  for (const auto& check : report.checks) {
    if (!check.pass) std::cerr << "FAILED " << check.name << (check.detail.empty() ? "" : ": " + check.detail) << "\n";
  }
  return report.pass() ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fekete supports for polynomial interpolation and histopolation"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--basis", c.basis, "Polynomial basis: monomial, chebu, legendre")
      ->check(CLI::IsMember({"monomial", "chebu", "legendre"}));
  app.add_option("--mode", c.mode, "Data functionals: nodal, segmental, normalized")
      ->check(CLI::IsMember({"nodal", "segmental", "normalized"}));
  app.add_option("--seed", c.seed, "Seed for multi-start jitter and random checks");
  app.add_option("--out", c.out, "Output file (default: standard output)");
  app.add_option("--format", c.format, "Output format: csv or json (table1 also accepts text)")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  const auto add_family = [&](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--r", c.r, "Order r, or a range a:b:s");
    sub->add_option("--family", c.family, "Family (default " + fallback + ")")
        ->check(CLI::IsMember({"lgl", "c1-fekete", "c1-fekete-normalized", "c2-fekete", "uniform-nodes", "uniform-c1"}));
    sub->add_option("--lambda", c.lambda, "Arc parameter, rho = lambda pi / r, in (0, 1)");
    sub->add_option("--starts", c.starts, "Multi-start count of the normalized optimizer")->check(CLI::PositiveNumber);
    sub->add_flag("--unpinned", c.unpinned, "Let the outer breakpoints move freely (diagnostic)");
  };

  CLI::App* nodes = app.add_subcommand("nodes", "Fekete or reference node sets");
  add_family(nodes, "lgl");
  CLI::App* segments = app.add_subcommand("segments", "Fekete or reference segment sets");
  add_family(segments, "c1-fekete-normalized");
  CLI::App* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants along a range of orders");
  add_family(lebesgue, "lgl");
  CLI::App* table1 = app.add_subcommand("table1", "Endpoints of normalized concatenated Fekete segments, r = 1..6");
  table1->add_option("--starts", c.starts, "Multi-start count")->check(CLI::PositiveNumber);
  CLI::App* rho = app.add_subcommand("rho-sweep", "log|det| of arc Fekete segments against the arc radius");
  rho->add_option("--r", c.r, "Order r, or a range a:b:s");
  rho->add_option("--points", c.points, "Grid points rho_k = (k/n) pi / r (default 20)")->check(CLI::PositiveNumber);
  CLI::App* interp = app.add_subcommand("interp", "Interpolate a registry function on a family");
  add_family(interp, "lgl");
  interp->add_option("--function", c.function, "runge, abs, step, exp, or poly:c0,c1,...");
  interp->add_option("--points", c.points, "Evaluation grid size (default 201)")->check(CLI::PositiveNumber);
  CLI::App* verify = app.add_subcommand("verify", "Invariant suites with a JSON report");
  verify->add_option("suite", c.suite, "all, det, lagrange, fejer, rho, lebesgue")
      ->check(CLI::IsMember({"all", "det", "lagrange", "fejer", "rho", "lebesgue"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*nodes) return cmd_sets(c, true);
    if (*segments) return cmd_sets(c, false);
    if (*lebesgue) return cmd_lebesgue(c);
    if (*table1) return cmd_table1(c);
    if (*rho) return cmd_rho_sweep(c);
    if (*interp) return cmd_interp(c);
    if (*verify) return cmd_verify(c);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInvalid;
}
