#pragma once

// Reference computations used by the tests. They share no code with the library:
// special functions and quadrature come from Boost, products are accumulated in
// 50-digit arithmetic, and nodal cardinal functions use the explicit product form.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/chebyshev.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

inline double legendre(unsigned n, double x) { return boost::math::legendre_p(static_cast<int>(n), x); }
inline double legendre_prime(unsigned n, double x) { return boost::math::legendre_p_prime(static_cast<int>(n), x); }
inline double chebyshev_u(unsigned n, double x) { return boost::math::chebyshev_u(n, x); }
inline double chebyshev_t(unsigned n, double x) { return boost::math::chebyshev_t(n, x); }

/// 30-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 59.
inline double gauss30(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

/// Composite 30-point Gauss-Legendre with n equal panels.
inline double gauss_composite(const std::function<double(double)>& f, double a, double b, int n) {
  double sum = 0.0;
  const double h = (b - a) / n;
  for (int k = 0; k < n; ++k) sum += gauss30(f, a + k * h, a + (k + 1) * h);
  return sum;
}

/// Root of g in [a, b] by bisection; g(a) and g(b) must differ in sign.
inline double bisect(const std::function<double(double)>& g, double a, double b) {
  double ga = g(a);
  for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if ((gm < 0) == (ga < 0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

/// log |prod_{i<j, j - i >= gap} (x_j - x_i)| - log(divisor) in 50-digit arithmetic.
inline double log_product(const std::vector<double>& xs, std::size_t min_gap, unsigned factorial_of) {
  Big prod = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + min_gap; j < xs.size(); ++j) prod *= Big(xs[j]) - Big(xs[i]);
  }
  for (unsigned k = 2; k <= factorial_of; ++k) prod /= k;
  return static_cast<double>(log(abs(prod)));
}

/// Nodal cardinal function l_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j).
inline double nodal_cardinal(const std::vector<double>& nodes, std::size_t i, double x) {
  double v = 1.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j != i) v *= (x - nodes[j]) / (nodes[i] - nodes[j]);
  }
  return v;
}

/// Derivative of the nodal cardinal function in the division-free form
/// sum_{m != i} 1 / (x_i - x_m) prod_{j != i, m} (x - x_j) / (x_i - x_j), valid at nodes too.
inline double nodal_cardinal_derivative(const std::vector<double>& nodes, std::size_t i, double x) {
  double sum = 0.0;
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    if (m == i) continue;
    double term = 1.0 / (nodes[i] - nodes[m]);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != i && j != m) term *= (x - nodes[j]) / (nodes[i] - nodes[j]);
    }
    sum += term;
  }
  return sum;
}

/// Segmental cardinal function of the concatenated set on `breaks`: the derivative of
/// the nodal interpolant of its antiderivative, sum_{k > i} L_k'(x) over the breakpoints.
inline double concat_cardinal(const std::vector<double>& breaks, std::size_t i, double x) {
  double v = 0.0;
  for (std::size_t k = i + 1; k < breaks.size(); ++k) v += nodal_cardinal_derivative(breaks, k, x);
  return v;
}

/// Maximum of g on a uniform grid of n points over [a, b].
inline double grid_max(const std::function<double(double)>& g, double a, double b, std::size_t n) {
  double best = -INFINITY;
  for (std::size_t k = 0; k < n; ++k) best = std::max(best, g(a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1)));
  return best;
}

/// Sorted uniform draws on [-1, 1] with pairwise gaps at least min_gap.
inline std::vector<double> sorted_uniform(std::mt19937_64& rng, std::size_t n, double min_gap = 0.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    std::vector<double> xs(n);
    for (double& x : xs) x = u(rng);
    std::sort(xs.begin(), xs.end());
    bool ok = true;
    for (std::size_t k = 1; k < n; ++k) ok = ok && xs[k] - xs[k - 1] >= min_gap;
    if (ok) return xs;
  }
}

}  // namespace oracle
