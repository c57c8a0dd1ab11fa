#include "histo/fekete.hpp"
#include "histo/interpolation.hpp"
#include "histo/lebesgue.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

using namespace histo;

TEST_CASE("Chebyshev grid") {
  const std::vector<double> xs = chebyshev_grid(9, -2.0, 3.0);
  CHECK(xs.front() == -2.0);
  CHECK(xs.back() == 3.0);
  CHECK(xs[4] == doctest::Approx(0.5));
  for (std::size_t k = 1; k < xs.size(); ++k) CHECK(xs[k] > xs[k - 1]);
  CHECK(chebyshev_grid(1, 0.0, 1.0)[0] == 0.5);
}

TEST_CASE("grid maximization refines interior peaks") {
  const double centre = 0.123456789;
  const BatchFunction peak = [&](std::span<const double> xs, std::span<double> values) {
    for (std::size_t k = 0; k < xs.size(); ++k) values[k] = std::exp(-1e4 * (xs[k] - centre) * (xs[k] - centre));
  };
  const GridMaximum m = maximize_on_grid(peak, -1.0, 1.0, 2000, GridOptions{});
  CHECK(m.argmax == doctest::Approx(centre).epsilon(1e-8));
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.grid_size == 2000);

  const BatchFunction edge = [](std::span<const double> xs, std::span<double> values) {
    for (std::size_t k = 0; k < xs.size(); ++k) values[k] = xs[k];
  };
  const GridMaximum e = maximize_on_grid(edge, -1.0, 1.0, 50, GridOptions{});
  CHECK(e.value == 1.0);
  CHECK(e.argmax == 1.0);
}

TEST_CASE("grid scale environment variable") {
  ::setenv("FEKETE_GRID_SCALE", "3", 1);
  CHECK(grid_scale_from_env() == 3);
  ::setenv("FEKETE_GRID_SCALE", "zero", 1);
  CHECK(grid_scale_from_env() == 1);
  ::setenv("FEKETE_GRID_SCALE", "-2", 1);
  CHECK(grid_scale_from_env() == 1);
  ::unsetenv("FEKETE_GRID_SCALE");
  CHECK(grid_scale_from_env() == 1);
  GridOptions opts;
  opts.scale = 2;
  CHECK(opts.points_for(10) == 4000);
  CHECK(opts.points_for(100) == 10000);
}

TEST_CASE("small Lebesgue constants in closed form") {
  const std::vector<double> two{-1.0, 1.0};
  CHECK(lebesgue_constant(node_set(two), BasisKind::ChebyshevU, Mode::Nodal).value == doctest::Approx(1.0));
  const std::vector<double> three{-1.0, 0.0, 1.0};
  const LebesgueEstimate l3 = lebesgue_constant(node_set(three), BasisKind::Monomial, Mode::Nodal);
  CHECK(l3.value == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(std::abs(std::abs(l3.argmax_x) - 0.5) <= 1e-6);
  CHECK(l3.regular);
  // A single segment reproduces constants only.
  const std::vector<double> one_segment{-1.0, 1.0};
  CHECK(lebesgue_constant(concat_from_nodes(one_segment), BasisKind::Legendre, Mode::Segmental).value ==
        doctest::Approx(1.0));
}

TEST_CASE("nodal Lebesgue constants against the explicit Lagrange form") {
  for (std::size_t r : {5u, 9u, 16u}) {
    const std::vector<double> nodes = lgl_nodes(r);
    const double value = lebesgue_constant(node_set(nodes), BasisKind::ChebyshevU, Mode::Nodal).value;
    const double ref = oracle::grid_max(
        [&](double x) {
          double s = 0.0;
          for (std::size_t i = 0; i < r; ++i) s += std::abs(oracle::nodal_cardinal(nodes, i, x));
          return s;
        },
        -1.0, 1.0, 200001);
    CHECK(value >= ref - 1e-12);
    CHECK(value <= ref + 1e-6);
  }
}

TEST_CASE("concatenated Lebesgue constants against the antiderivative construction") {
  for (std::size_t r : {4u, 7u, 12u}) {
    const std::vector<double> breaks = lgl_nodes(r + 1);
    const SupportSet set = concat_from_nodes(breaks);
    const double ref = oracle::grid_max(
        [&](double x) {
          double s = 0.0;
          for (std::size_t i = 0; i < r; ++i) s += std::abs((breaks[i + 1] - breaks[i]) * oracle::concat_cardinal(breaks, i, x));
          return s;
        },
        -1.0, 1.0, 100001);
    for (Mode mode : {Mode::Segmental, Mode::Normalized}) {
      const double value = lebesgue_constant(set, BasisKind::ChebyshevU, mode).value;
      INFO("r = " << r << " mode " << to_string(mode));
      CHECK(value >= ref - 1e-9);
      CHECK(value <= ref + 1e-5);
    }
    // Cardinal functions themselves agree pointwise.
    const LagrangeBasis lb = lagrange_basis(build_vandermonde(BasisKind::Legendre, set, Mode::Segmental));
    const std::vector<double> xs = uniform_grid(101);
    const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      for (std::size_t i = 0; i < r; ++i) {
        CHECK(l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) ==
              doctest::Approx(oracle::concat_cardinal(breaks, i, xs[k])).epsilon(1e-9).scale(1.0));
      }
    }
  }
}

TEST_CASE("Lebesgue constant does not depend on the basis") {
  const SupportSet set = fekete_arc(10, 0.4 * std::numbers::pi / 10.0).set;
  const double u = lebesgue_constant(set, BasisKind::ChebyshevU, Mode::Normalized).value;
  const double p = lebesgue_constant(set, BasisKind::Legendre, Mode::Normalized).value;
  const double m = lebesgue_constant(set, BasisKind::Monomial, Mode::Segmental).value;
  CHECK(u == doctest::Approx(p).epsilon(1e-10));
  CHECK(u == doctest::Approx(m).epsilon(1e-8));
}

TEST_CASE("LGL growth and the lower bound") {
  for (std::size_t r = 3; r <= 40; r += 3) {
    const double value = lebesgue_constant(node_set(lgl_nodes(r)), BasisKind::ChebyshevU, Mode::Nodal).value;
    CHECK(value <= 2.0 / std::numbers::pi * std::log(static_cast<double>(r)) + 0.8);
    CHECK(value >= lebesgue_lower_bound(r));
  }
  CHECK(lebesgue_lower_bound(1) == 1.0);
  CHECK(lebesgue_lower_bound(11) == doctest::Approx(2.0 / (std::numbers::pi * std::numbers::pi) * std::log(10.0) - 0.5));
}

TEST_CASE("Fejer sum of squares") {
  for (std::size_t r : {4u, 9u, 20u}) {
    const GridMaximum lgl = fejer_sum_sq(node_set(lgl_nodes(r)));
    CHECK(lgl.value == doctest::Approx(1.0).epsilon(1e-10));
    const GridMaximum eq = fejer_sum_sq(node_set(uniform_grid(r)));
    CHECK(eq.value > 1.0 + 1e-4);
  }
  CHECK_THROWS_AS((void)fejer_sum_sq(concat_from_nodes(lgl_nodes(4))), std::invalid_argument);
}

TEST_CASE("largest cardinal function") {
  CHECK(max_cardinal_norm(node_set(lgl_nodes(12)), BasisKind::ChebyshevU, Mode::Nodal).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(max_cardinal_norm(node_set(uniform_grid(12)), BasisKind::ChebyshevU, Mode::Nodal).value > 1.5);
}

TEST_CASE("growth profile keeps failed rows") {
  const std::vector<std::size_t> rs{4, 5, 6};
  const FamilyGenerator gen = [](std::size_t r) {
    if (r == 5) throw std::runtime_error("no set for r = 5");
    return node_set(lgl_nodes(r));
  };
  const std::vector<GrowthRow> rows = growth_profile(gen, rs, BasisKind::ChebyshevU, Mode::Nodal);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].estimate.has_value());
  CHECK_FALSE(rows[1].estimate.has_value());
  CHECK(rows[1].error == "no set for r = 5");
  CHECK(rows[2].r == 6);
  CHECK(rows[2].estimate->grid_size == GridOptions{}.points_for(6));
}

TEST_CASE("irregular sets are flagged") {
  const SupportSet set({Support{-1.0, 0.2}, Support::node(0.0), Support{0.5, 1.0}});
  const LebesgueEstimate e = lebesgue_constant(set, BasisKind::ChebyshevU, Mode::Normalized);
  CHECK_FALSE(e.regular);
}

TEST_CASE("doubling the grid changes the estimate by less than 1e-6") {
  const SupportSet set = concat_from_nodes(lgl_nodes(30));
  GridOptions coarse, fine;
  coarse.scale = 1;
  fine.scale = 2;
  const double a = lebesgue_constant(set, BasisKind::ChebyshevU, Mode::Normalized, coarse).value;
  const double b = lebesgue_constant(set, BasisKind::ChebyshevU, Mode::Normalized, fine).value;
  CHECK(std::abs(a - b) <= 1e-6 * b);
}
