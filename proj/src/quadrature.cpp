#include "histo/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <vector>

namespace histo {

namespace {

constexpr double kNonFiniteError = 1e300;

struct Panel {
  double a, b, value, error;
  int level;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b, int level) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& xk = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  // Gauss nodes are the even-indexed Kronrod abscissae, starting with the centre.
  const double fc = f(mid);
  double k_sum = wk[0] * fc;
  double g_sum = wg[0] * fc;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = half * xk[i];
    const double pair = f(mid - dx) + f(mid + dx);
    k_sum += wk[i] * pair;
    if (i % 2 == 0) g_sum += wg[i / 2] * pair;
  }
  const double value = k_sum * half;
  double error = std::abs((k_sum - g_sum) * half);
  // Non-finite samples get a huge finite error so the panel is refined first
  // and the running totals stay finite.
  if (!std::isfinite(value) || !std::isfinite(error)) error = kNonFiniteError;
  return {a, b, value, error, level};
}

}  // namespace

QuadratureResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                              const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> open;
  std::vector<Panel> frozen;  // panels at the level cap
  Panel first = gk15(f, a, b, 0);
  open.push(first);
  double total_value = first.value;
  double total_error = first.error;
  int intervals = 1;
  while (total_error > opts.abs_tol && !open.empty() && intervals < opts.max_intervals) {
    Panel worst = open.top();
    open.pop();
    if (worst.level >= opts.max_level) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gk15(f, worst.a, mid, worst.level + 1);
    const Panel right = gk15(f, mid, worst.b, worst.level + 1);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    out.max_level = std::max(out.max_level, worst.level + 1);
    open.push(left);
    open.push(right);
    ++intervals;
  }
  // Re-sum to shed the drift of incremental updates.
  double value = 0.0, error = 0.0;
  for (const auto& p : frozen) {
    value += p.value;
    error += p.error;
  }
  while (!open.empty()) {
    value += open.top().value;
    error += open.top().error;
    open.pop();
  }
  out.value = value;
  out.error = error;
  out.intervals = intervals;
  out.converged = std::isfinite(value) && error <= opts.abs_tol;
  return out;
}

}  // namespace histo
