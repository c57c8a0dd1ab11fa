#include "histo/quadrature.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace histo;

TEST_CASE("smooth integrands") {
  const QuadratureResult e = integrate_gk([](double x) { return std::exp(x); }, -1.0, 1.0);
  CHECK(e.converged);
  CHECK(e.value == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
  const QuadratureResult runge = integrate_gk([](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0);
  CHECK(runge.converged);
  CHECK(runge.value == doctest::Approx(0.4 * std::atan(5.0)).epsilon(1e-13));
  const QuadratureResult cubic = integrate_gk([](double x) { return x * x * x - x; }, 0.0, 2.0);
  CHECK(cubic.intervals == 1);
  CHECK(cubic.value == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("kinks and jumps are resolved by refinement") {
  const QuadratureResult a = integrate_gk([](double x) { return std::abs(x - 0.3); }, -1.0, 1.0);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 0.7 * 0.7).epsilon(1e-12));
  const QuadratureResult step = integrate_gk([](double x) { return x < 0.1 ? -1.0 : 1.0; }, -1.0, 1.0);
  CHECK(step.converged);
  CHECK(step.value == doctest::Approx(-0.2).epsilon(1e-10));
  CHECK(step.intervals > 1);
}

TEST_CASE("agreement with composite Gauss-Legendre") {
  const auto f = [](double x) { return std::sin(7.0 * x) * std::exp(-x * x); };
  const QuadratureResult q = integrate_gk(f, -0.7, 0.9);
  CHECK(q.converged);
  CHECK(q.value == doctest::Approx(oracle::gauss_composite(f, -0.7, 0.9, 8)).epsilon(1e-13));
}

TEST_CASE("non-convergence is reported, not thrown") {
  QuadratureOptions opts;
  opts.max_intervals = 20;
  const QuadratureResult q = integrate_gk([](double x) { return 1.0 / std::sqrt(std::abs(x)); }, -1.0, 1.0, opts);
  CHECK_FALSE(q.converged);
  CHECK(q.error > opts.abs_tol);
  CHECK(q.intervals <= opts.max_intervals + 1);
}
