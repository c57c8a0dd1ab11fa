#include "histo/polybasis.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace histo;

TEST_CASE("basis names round-trip") {
  for (BasisKind k : {BasisKind::Monomial, BasisKind::ChebyshevU, BasisKind::Legendre}) {
    CHECK(parse_basis(to_string(k)) == k);
  }
  CHECK(to_string(BasisKind::ChebyshevU) == "chebu");
  CHECK_FALSE(parse_basis("hermite").has_value());
}

TEST_CASE("eval_basis on simple values") {
  CHECK(eval_basis(BasisKind::Monomial, 3, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eval_basis(BasisKind::ChebyshevU, 2, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_basis(BasisKind::Legendre, 3, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eval_basis(BasisKind::ChebyshevU, 5, 1.0) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(eval_basis(BasisKind::ChebyshevU, 5, -1.0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("recurrences agree with trigonometric and library definitions") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.999, 0.999);
  double worst_trig = 0.0, worst_u = 0.0, worst_p = 0.0, worst_t = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double x = u(rng);
    const double th = std::acos(x);
    for (unsigned j = 1; j <= 20; ++j) {
      const double val = eval_basis(BasisKind::ChebyshevU, j, x);
      worst_trig = std::max(worst_trig, std::abs(val - std::sin(j * th) / std::sin(th)));
      worst_u = std::max(worst_u, std::abs(val - oracle::chebyshev_u(j - 1, x)));
      worst_p = std::max(worst_p, std::abs(eval_basis(BasisKind::Legendre, j, x) - oracle::legendre(j - 1, x)));
      worst_t = std::max(worst_t, std::abs(chebyshev_t(j - 1, x) - oracle::chebyshev_t(j - 1, x)));
    }
  }
  CHECK(worst_trig <= 1e-10);
  CHECK(worst_u <= 1e-12);
  CHECK(worst_p <= 1e-13);
  CHECK(worst_t <= 1e-13);
}

TEST_CASE("eval_basis_all matches single evaluations") {
  std::vector<double> out(12);
  for (BasisKind k : {BasisKind::Monomial, BasisKind::ChebyshevU, BasisKind::Legendre}) {
    eval_basis_all(k, 0.37, out);
    for (std::size_t j = 1; j <= out.size(); ++j) CHECK(out[j - 1] == doctest::Approx(eval_basis(k, j, 0.37)).epsilon(1e-14));
  }
}

TEST_CASE("integrate_basis simple values") {
  CHECK(integrate_basis(BasisKind::Monomial, 1, -1, 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(integrate_basis(BasisKind::ChebyshevU, 2, -1, 1)) <= 1e-15);
  CHECK(integrate_basis(BasisKind::Legendre, 1, -0.5, 0.25) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("integrate_basis matches 30-point Gauss quadrature") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (BasisKind k : {BasisKind::Monomial, BasisKind::ChebyshevU, BasisKind::Legendre}) {
    for (int trial = 0; trial < 100; ++trial) {
      double a = u(rng), b = u(rng);
      if (a > b) std::swap(a, b);
      for (std::size_t j = 1; j <= 20; ++j) {
        const double ref = oracle::gauss30([&](double x) { return eval_basis(k, j, x); }, a, b);
        worst = std::max(worst, std::abs(integrate_basis(k, j, a, b) - ref));
      }
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("integrate_basis is additive") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (BasisKind k : {BasisKind::Monomial, BasisKind::ChebyshevU, BasisKind::Legendre}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> p{u(rng), u(rng), u(rng)};
      std::sort(p.begin(), p.end());
      for (std::size_t j = 1; j <= 20; ++j) {
        const double whole = integrate_basis(k, j, p[0], p[2]);
        const double parts = integrate_basis(k, j, p[0], p[1]) + integrate_basis(k, j, p[1], p[2]);
        worst = std::max(worst, std::abs(whole - parts));
      }
    }
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("Chebyshev-U integrals over arc segments") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ur(0.01, 0.5), ut(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double rho = ur(rng);
    const double tau = rho + (std::numbers::pi - 2 * rho) * ut(rng);
    for (std::size_t j = 1; j <= 15; ++j) {
      const double expect = 2.0 / static_cast<double>(j) * std::sin(j * tau) * std::sin(j * rho);
      CHECK(integrate_basis(BasisKind::ChebyshevU, j, std::cos(tau + rho), std::cos(tau - rho)) ==
            doctest::Approx(expect).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("legendre_deriv values and roots") {
  CHECK(legendre_deriv(2, 0.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(legendre_deriv(2, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
  const double root = oracle::bisect([](double x) { return oracle::legendre_prime(4, x); }, 0.1, 0.99);
  CHECK(root == doctest::Approx(std::sqrt(3.0 / 7.0)).epsilon(1e-12));
  CHECK(std::abs(legendre_deriv(4, 0.6546536707079772)) <= 1e-9);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double x = u(rng);
    for (unsigned n = 0; n <= 25; ++n) {
      CHECK(legendre_deriv(n, x) == doctest::Approx(oracle::legendre_prime(n, x)).epsilon(1e-11).scale(1.0));
    }
  }
}

TEST_CASE("polynomial evaluation is linear in the coefficients") {
  const Polynomial p{BasisKind::Legendre, {0.5, -1.0, 2.0, 0.25}};
  const Polynomial q{BasisKind::Legendre, {1.0, 3.0, -0.5, 0.0}};
  Polynomial s{BasisKind::Legendre, {}};
  for (std::size_t k = 0; k < 4; ++k) s.coeffs.push_back(2.0 * p.coeffs[k] - 3.0 * q.coeffs[k]);
  for (double x : {-1.0, -0.3, 0.0, 0.8, 1.0}) CHECK(s(x) == doctest::Approx(2.0 * p(x) - 3.0 * q(x)).epsilon(1e-14));
}

TEST_CASE("basis conversion round-trips") {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> n01;
  const auto max_diff = [](const Polynomial& a, const Polynomial& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.order(); ++k) worst = std::max(worst, std::abs(a.coeffs[k] - b.coeffs[k]));
    return worst;
  };
  const auto max_abs = [](const Polynomial& a) {
    double m = 0.0;
    for (double c : a.coeffs) m = std::max(m, std::abs(c));
    return m;
  };
  for (std::size_t r : {1u, 2u, 5u, 12u, 20u, 30u}) {
    INFO("r = " << r);
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial u{BasisKind::ChebyshevU, std::vector<double>(r)};
      Polynomial m{BasisKind::Monomial, std::vector<double>(r)};
      for (double& c : u.coeffs) c = n01(rng);
      for (double& c : m.coeffs) c = n01(rng);
      CHECK(max_diff(u.convert_to(BasisKind::Legendre).convert_to(BasisKind::ChebyshevU), u) <= 1e-12);
      CHECK(max_diff(m.convert_to(BasisKind::ChebyshevU).convert_to(BasisKind::Monomial), m) <= 1e-12);
      CHECK(max_diff(m.convert_to(BasisKind::Legendre).convert_to(BasisKind::Monomial), m) <= 1e-12);
      // The monomial image of a Chebyshev-U polynomial has coefficients of size
      // up to 2^(r-2); the round trip is accurate relative to that size.
      const Polynomial via = u.convert_to(BasisKind::Monomial);
      CHECK(max_diff(via.convert_to(BasisKind::ChebyshevU), u) <= 1e-12 * std::max(1.0, max_abs(via)));
    }
  }
  for (std::size_t r : {60u, 200u}) {
    Polynomial u{BasisKind::ChebyshevU, std::vector<double>(r)};
    for (double& c : u.coeffs) c = n01(rng);
    CHECK(max_diff(u.convert_to(BasisKind::Legendre).convert_to(BasisKind::ChebyshevU), u) <= 1e-12);
  }
  const Polynomial p{BasisKind::Legendre, {0.3, -1.2, 0.7, 2.0, -0.4}};
  for (BasisKind k : {BasisKind::Monomial, BasisKind::ChebyshevU}) {
    const Polynomial q = p.convert_to(k);
    for (double x : {-1.0, -0.4, 0.1, 0.9, 1.0}) CHECK(q(x) == doctest::Approx(p(x)).epsilon(1e-14));
  }
  const Polynomial x2{BasisKind::Monomial, {0.0, 0.0, 1.0}};
  const Polynomial u = x2.convert_to(BasisKind::ChebyshevU);  // x^2 = (U_0 + U_2) / 4
  CHECK(u.coeffs[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(u.coeffs[1]) <= 1e-14);
  CHECK(u.coeffs[2] == doctest::Approx(0.25).epsilon(1e-14));
}
