#include "histo/verify.hpp"

#include "histo/arcmap.hpp"
#include "histo/families.hpp"
#include "histo/fekete.hpp"
#include "histo/interpolation.hpp"
#include "histo/lebesgue.hpp"
#include "histo/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace histo {

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

void add_check(VerifyReport& report, std::string name, double value, double tol, std::string detail = {}) {
  report.checks.push_back({std::move(name), value, tol, std::isfinite(value) && value <= tol, std::move(detail)});
}

void run_guarded(VerifyReport& report, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.checks.push_back({name, std::nan(""), 0.0, false, e.what()});
  }
}

std::vector<double> random_sorted(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> xs(n);
  for (double& x : xs) x = u(rng);
  std::sort(xs.begin(), xs.end());
  return xs;
}

void suite_det(VerifyReport& report, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  struct Case {
    const char* name;
    ProductKind kind;
    Mode mode;
    bool concat;
  };
  const Case cases[] = {{"det/nodal-product", ProductKind::NodalProduct, Mode::Nodal, false},
                        {"det/concat-hat-product", ProductKind::ConcatHat, Mode::Segmental, true},
                        {"det/concat-normalized-product", ProductKind::ConcatNormalized, Mode::Normalized, true}};
  for (const Case& c : cases) {
    run_guarded(report, c.name, [&] {
      double worst = 0.0;
      for (std::size_t r = 2; r <= 12; ++r) {
        for (int trial = 0; trial < 20; ++trial) {
          const std::vector<double> xs = random_sorted(rng, c.concat ? r + 1 : r);
          const SupportSet set = c.concat ? concat_from_nodes(xs) : node_set(xs);
          const SignLogDet m = extended_sign_log_det(BasisKind::Monomial, set, c.mode);
          const SignLogDet p = product_formula_det(xs, c.kind);
          const double rel = m.sign == p.sign ? std::abs(std::expm1(m.log_abs_det - p.log_abs_det)) : 1.0;
          worst = std::max(worst, rel);
        }
      }
      add_check(report, c.name, worst, 1e-9, "max relative deviation, r = 2..12");
    });
  }
}

std::vector<std::pair<std::string, FeketeResult>> lagrange_sets() {
  std::vector<std::pair<std::string, FeketeResult>> sets;
  sets.emplace_back("lgl-8", make_family(Family::Lgl, 8));
  sets.emplace_back("c1-fekete-8", make_family(Family::C1Fekete, 8));
  sets.emplace_back("c1-fekete-normalized-8", make_family(Family::C1FeketeNormalized, 8));
  sets.emplace_back("c2-fekete-8", make_family(Family::C2Fekete, 8));
  return sets;
}

void suite_lagrange(VerifyReport& report) {
  for (const auto& [label, res] : lagrange_sets()) {
    const Mode mode = res.set.all_nodes() ? Mode::Nodal : Mode::Normalized;
    run_guarded(report, "lagrange/duality/" + label, [&] {
      const LagrangeBasis lb = lagrange_basis(build_vandermonde(BasisKind::ChebyshevU, res.set, mode));
      double worst = 0.0;
      for (std::size_t i = 0; i < lb.order(); ++i) {
        const std::vector<double> values = sample_polynomial(lb.function(i), res.set, mode);
        for (std::size_t j = 0; j < values.size(); ++j) worst = std::max(worst, std::abs(values[j] - (i == j ? 1.0 : 0.0)));
      }
      add_check(report, "lagrange/duality/" + label, worst, 1e-9, "max |functional_j(l_i) - delta_ij|");
    });
    run_guarded(report, "lagrange/partition-of-unity/" + label, [&] {
      const LagrangeBasis lb = lagrange_basis(build_vandermonde(BasisKind::ChebyshevU, res.set, mode));
      const std::vector<double> xs = uniform_grid(1001);
      const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
      const double worst = (l.colwise().sum().array() - 1.0).abs().maxCoeff();
      add_check(report, "lagrange/partition-of-unity/" + label, worst, 1e-10, "max |sum_i l_i(x) - 1|");
    });
    for (const char* fname : {"runge", "abs", "step", "exp"}) {
      const std::string name = "lagrange/idempotence/" + label + "/" + fname;
      run_guarded(report, name, [&] {
        add_check(report, name, idempotence_check(res.set, BasisKind::ChebyshevU, mode, test_function(fname)), 1e-9);
      });
    }
  }
}

void suite_fejer(VerifyReport& report) {
  for (std::size_t r : {4, 8, 16}) {
    const std::string name = "fejer/c2-fekete-" + std::to_string(r);
    run_guarded(report, name, [&] {
      const FeketeResult res = fekete_arc(r, 0.5 * std::numbers::pi / static_cast<double>(r));
      const GridMaximum m = fejer_functional(*res.set.arc());
      add_check(report, name, std::abs(m.value - 1.0), 1e-6, "|max sum (K l)^2 - 1|, lambda = 0.5");
    });
  }
}

void suite_rho(VerifyReport& report) {
  for (std::size_t r : {4, 8}) {
    const double top = std::numbers::pi / static_cast<double>(r);
    std::vector<double> grid;
    for (int k = 0; k < 20; ++k) grid.push_back((k == 0 ? 1e-6 : k / 20.0) * top);
    const std::string mono = "rho/monotone-" + std::to_string(r);
    const std::string limit = "rho/limit-" + std::to_string(r);
    run_guarded(report, mono, [&] {
      const std::vector<RhoSweepRow> rows = det_rho_sweep(r, grid);
      double worst_increase = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 1; k < rows.size(); ++k) {
        worst_increase = std::max(worst_increase, rows[k].log_abs_det - rows[k - 1].log_abs_det);
      }
      report.checks.push_back({mono, worst_increase, 0.0, worst_increase < 0.0, "max successive change of log|det|"});
      const double nodal =
          sign_log_det(build_vandermonde(BasisKind::ChebyshevU, node_set(lgl_nodes(r)), Mode::Nodal)).log_abs_det;
      add_check(report, limit, std::abs(std::expm1(rows.front().log_abs_det - nodal)), 1e-4,
                "relative gap to the nodal LGL determinant at rho = 1e-6 pi/r");
    });
  }
}

void suite_lebesgue(VerifyReport& report) {
  run_guarded(report, "lebesgue/lgl-conjectured-bound", [&] {
    double worst = -std::numeric_limits<double>::infinity();
    double below = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 10; r <= 150; r += 10) {
      const LebesgueEstimate e = lebesgue_constant(node_set(lgl_nodes(r)), BasisKind::ChebyshevU, Mode::Nodal);
      const double bound = 2.0 / std::numbers::pi * std::log(static_cast<double>(r)) + 0.8;
      worst = std::max(worst, e.value - bound);
      below = std::max(below, lebesgue_lower_bound(r) - e.value);
    }
    report.checks.push_back({"lebesgue/lgl-conjectured-bound", worst, 0.0, worst <= 0.0,
                             "max of Lambda_r - (2/pi) ln r - 0.8, r = 10..150"});
    report.checks.push_back({"lebesgue/lower-bound", below, 0.0, below <= 0.0,
                             "max of (2/pi^2) ln(r - 1) - 1/2 - Lambda_r"});
  });
  for (std::size_t r : {4, 8, 16, 32}) {
    const std::string name = "lebesgue/nodal-sup-norm-law-" + std::to_string(r);
    run_guarded(report, name, [&] {
      const FeketeResult res = fekete_nodes(r);
      const GridMaximum card = max_cardinal_norm(res.set, BasisKind::ChebyshevU, Mode::Nodal);
      add_check(report, name, std::abs(card.value - 1.0), 1e-6, "|max_i sup |l_i| - 1|");
      const LebesgueEstimate e = lebesgue_constant(res.set, BasisKind::ChebyshevU, Mode::Nodal);
      const std::string sq = "lebesgue/nodal-sqrt-bound-" + std::to_string(r);
      const double excess = e.value - std::sqrt(static_cast<double>(r));
      report.checks.push_back({sq, excess, 0.0, excess <= 0.0, "Lambda_r - sqrt(r)"});
    });
  }
}

}  // namespace

VerifyReport run_verify(std::string_view suite, std::uint64_t seed) {
  const bool all = suite == "all";
  if (!all && suite != "det" && suite != "lagrange" && suite != "fejer" && suite != "rho" && suite != "lebesgue") {
    throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  report.suite = std::string(suite);
  if (all || suite == "det") suite_det(report, seed);
  if (all || suite == "lagrange") suite_lagrange(report);
  if (all || suite == "fejer") suite_fejer(report);
  if (all || suite == "rho") suite_rho(report);
  if (all || suite == "lebesgue") suite_lebesgue(report);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::json j{{"name", c.name}, {"tolerance", c.tolerance}, {"pass", c.pass}, {"detail", c.detail}};
    j["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
    checks.push_back(std::move(j));
  }
  return {{"suite", report.suite}, {"pass", report.pass()}, {"checks", checks}};
}

}  // namespace histo
