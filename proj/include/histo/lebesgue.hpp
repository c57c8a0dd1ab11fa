#pragma once

#include "histo/polybasis.hpp"
#include "histo/supports.hpp"
#include "histo/vandermonde.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace histo {

/// Multiplier for every evaluation grid, read from FEKETE_GRID_SCALE (default 1).
[[nodiscard]] std::size_t grid_scale_from_env();

struct GridOptions {
  std::size_t min_points = 2000;
  std::size_t points_per_order = 50;
  std::size_t scale = grid_scale_from_env();
  std::size_t refine_candidates = 10;
  double x_tol = 1e-10;

  [[nodiscard]] std::size_t points_for(std::size_t r) const {
    return std::max(min_points, points_per_order * r) * scale;
  }
};

struct GridMaximum {
  double value = 0.0;
  double argmax = 0.0;
  std::size_t grid_size = 0;
  bool refined = false;  // refinement changed the grid maximum by < 1e-6 relative
};

/// Maximizes a batch-evaluable function over [a, b]: Chebyshev-distributed grid,
/// then golden-section search around the best local maxima.
/// `eval` fills values[k] = g(xs[k]).
using BatchFunction = std::function<void(std::span<const double> xs, std::span<double> values)>;
[[nodiscard]] GridMaximum maximize_on_grid(const BatchFunction& eval, double a, double b, std::size_t points,
                                           const GridOptions& opts);

/// Chebyshev-Lobatto distributed points -cos(pi k / (n - 1)) mapped to [a, b].
[[nodiscard]] std::vector<double> chebyshev_grid(std::size_t n, double a = -1.0, double b = 1.0);

/// Evaluates every cardinal function on a batch of points: result(i, k) = l_i(xs[k]).
[[nodiscard]] Eigen::MatrixXd evaluate_lagrange(const LagrangeBasis& basis, std::span<const double> xs);

struct LebesgueEstimate {
  double value = 0.0;
  double argmax_x = 0.0;
  std::size_t grid_size = 0;
  bool refined = false;
  bool regular = true;  // false: the value is only an upper bound for the operator norm
};

/// sup_x sum_i |l_i(x)| with the data normalized by mode; in Segmental mode the
/// cardinal functions are weighted by |s_i| so all modes evaluate one functional.
[[nodiscard]] LebesgueEstimate lebesgue_constant(const SupportSet& set, BasisKind basis, Mode mode,
                                                 const GridOptions& opts = {});

/// (2/pi^2) ln(r - 1) - 1/2, the lower bound for any projector onto P_{r-1}.
[[nodiscard]] double lebesgue_lower_bound(std::size_t r);

using FamilyGenerator = std::function<SupportSet(std::size_t r)>;

struct GrowthRow {
  std::size_t r = 0;
  std::optional<LebesgueEstimate> estimate;
  std::string error;  // set when the row failed
};

/// One row per requested r, in the order given; failed rows keep their error.
[[nodiscard]] std::vector<GrowthRow> growth_profile(const FamilyGenerator& family, std::span<const std::size_t> r_values,
                                                    BasisKind basis, Mode mode, const GridOptions& opts = {});

/// max_x sum_i l_i(x)^2 for a node set.
[[nodiscard]] GridMaximum fejer_sum_sq(const SupportSet& nodes, BasisKind basis = BasisKind::ChebyshevU,
                                       const GridOptions& opts = {});

/// max_i sup_x |l_i(x)|.
[[nodiscard]] GridMaximum max_cardinal_norm(const SupportSet& set, BasisKind basis, Mode mode,
                                            const GridOptions& opts = {});

}  // namespace histo
