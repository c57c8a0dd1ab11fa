#include "histo/lebesgue.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>

namespace histo {

std::size_t grid_scale_from_env() {
  const char* raw = std::getenv("FEKETE_GRID_SCALE");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return 1;
  return static_cast<std::size_t>(value);
}

std::vector<double> chebyshev_grid(std::size_t n, double a, double b) {
  std::vector<double> xs(n);
  if (n == 1) {
    xs[0] = 0.5 * (a + b);
    return xs;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double t = -std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1));
    xs[k] = 0.5 * (a + b) + 0.5 * (b - a) * t;
  }
  xs.front() = a;
  xs.back() = b;
  return xs;
}

namespace {

double golden_section_max(const std::function<double(double)>& g, double lo, double hi, double tol,
                          double& best_x) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c), gd = g(d);
  while (hi - lo > tol) {
    if (gc > gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  best_x = gc > gd ? c : d;
  return std::max(gc, gd);
}

}  // namespace

GridMaximum maximize_on_grid(const BatchFunction& eval, double a, double b, std::size_t points,
                             const GridOptions& opts) {
  const std::vector<double> xs = chebyshev_grid(points, a, b);
  std::vector<double> values(points);
  eval(xs, values);

  GridMaximum out;
  out.grid_size = points;
  std::size_t best = 0;
  for (std::size_t k = 1; k < points; ++k) {
    if (values[k] > values[best]) best = k;
  }
  const double grid_max = values[best];
  out.value = grid_max;
  out.argmax = xs[best];

  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < points; ++k) {
    const bool left_ok = k == 0 || values[k] >= values[k - 1];
    const bool right_ok = k + 1 == points || values[k] >= values[k + 1];
    if (left_ok && right_ok) peaks.push_back(k);
  }
  const std::size_t keep = std::min(opts.refine_candidates, peaks.size());
  std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(keep), peaks.end(),
                    [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });

  const auto single = [&](double x) {
    const double in[1] = {x};
    double res[1] = {0.0};
    eval(in, res);
    return res[0];
  };
  for (std::size_t p = 0; p < keep; ++p) {
    const std::size_t k = peaks[p];
    const double lo = xs[k == 0 ? 0 : k - 1];
    const double hi = xs[k + 1 == points ? k : k + 1];
    double x = xs[k];
    const double v = golden_section_max(single, lo, hi, opts.x_tol, x);
    if (v > out.value) {
      out.value = v;
      out.argmax = x;
    }
  }
  out.refined = std::abs(out.value - grid_max) < 1e-6 * std::abs(grid_max);
  return out;
}

Eigen::MatrixXd evaluate_lagrange(const LagrangeBasis& basis, std::span<const double> xs) {
  const Eigen::Index r = basis.coeffs.rows();
  Eigen::MatrixXd b(r, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    eval_basis_all(basis.basis, xs[k], std::span<double>(b.col(static_cast<Eigen::Index>(k)).data(), static_cast<std::size_t>(r)));
  }
  return basis.coeffs * b;
}

namespace {

// Cardinal functions scaled so every mode reports l_i = |a_i| * lhat_i.
LagrangeBasis normalized_cardinals(const SupportSet& set, BasisKind basis, Mode mode) {
  LagrangeBasis lb = lagrange_basis(build_vandermonde(basis, set, mode));
  if (mode == Mode::Segmental) {
    for (std::size_t i = 0; i < set.size(); ++i) lb.coeffs.row(static_cast<Eigen::Index>(i)) *= set[i].length();
  }
  return lb;
}

}  // namespace

LebesgueEstimate lebesgue_constant(const SupportSet& set, BasisKind basis, Mode mode, const GridOptions& opts) {
  const LagrangeBasis lb = normalized_cardinals(set, basis, mode);
  const BatchFunction lebesgue_function = [&](std::span<const double> xs, std::span<double> values) {
    const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
    for (std::size_t k = 0; k < xs.size(); ++k) values[k] = l.col(static_cast<Eigen::Index>(k)).cwiseAbs().sum();
  };
  const GridMaximum m = maximize_on_grid(lebesgue_function, -1.0, 1.0, opts.points_for(set.size()), opts);
  return LebesgueEstimate{m.value, m.argmax, m.grid_size, m.refined, check_regular(set).is_regular};
}

double lebesgue_lower_bound(std::size_t r) {
  if (r < 2) return 1.0;
  return 2.0 / (std::numbers::pi * std::numbers::pi) * std::log(static_cast<double>(r - 1)) - 0.5;
}

std::vector<GrowthRow> growth_profile(const FamilyGenerator& family, std::span<const std::size_t> r_values,
                                      BasisKind basis, Mode mode, const GridOptions& opts) {
  std::vector<GrowthRow> rows;
  rows.reserve(r_values.size());
  for (std::size_t r : r_values) {
    GrowthRow row{r, std::nullopt, {}};
    try {
      row.estimate = lebesgue_constant(family(r), basis, mode, opts);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GridMaximum fejer_sum_sq(const SupportSet& nodes, BasisKind basis, const GridOptions& opts) {
  if (!nodes.all_nodes()) throw std::invalid_argument("the Fejer sum is defined for node sets");
  const LagrangeBasis lb = lagrange_basis(build_vandermonde(basis, nodes, Mode::Nodal));
  const BatchFunction squares = [&](std::span<const double> xs, std::span<double> values) {
    const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
    for (std::size_t k = 0; k < xs.size(); ++k) values[k] = l.col(static_cast<Eigen::Index>(k)).squaredNorm();
  };
  return maximize_on_grid(squares, -1.0, 1.0, opts.points_for(nodes.size()), opts);
}

GridMaximum max_cardinal_norm(const SupportSet& set, BasisKind basis, Mode mode, const GridOptions& opts) {
  const LagrangeBasis lb = normalized_cardinals(set, basis, mode);
  const BatchFunction largest = [&](std::span<const double> xs, std::span<double> values) {
    const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
    for (std::size_t k = 0; k < xs.size(); ++k) values[k] = l.col(static_cast<Eigen::Index>(k)).cwiseAbs().maxCoeff();
  };
  return maximize_on_grid(largest, -1.0, 1.0, opts.points_for(set.size()), opts);
}

}  // namespace histo
