#pragma once

#include "histo/polybasis.hpp"
#include "histo/supports.hpp"
#include "histo/vandermonde.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace histo {

class FeketeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FeketeMethod { ClosedForm, Optimized };

struct OptimizerDiagnostics {
  std::size_t starts = 0;
  std::size_t iterations = 0;    // summed over starts, including the Newton polish
  double best_gap = 0.0;         // best objective minus the worst converged start
  double stationarity = 0.0;     // max |d log|det| / d xi_k| over free breakpoints
  bool converged = true;
  bool non_unique = false;       // r <= 2 of the normalized C1 problem
};

struct FeketeResult {
  SupportSet set;
  std::vector<double> points;  // nodes, C1 breakpoints, or C2 arc-midpoints
  double log_abs_det = 0.0;
  BasisKind det_basis = BasisKind::Monomial;
  Mode mode = Mode::Nodal;
  FeketeMethod method = FeketeMethod::ClosedForm;
  OptimizerDiagnostics diagnostics;
  bool symmetric = true;
  bool verified = true;  // closed-form determinant identity reproduced by a matrix determinant
};

/// Legendre-Gauss-Lobatto nodes: +-1 and the roots of P'_{r-1}, by Newton
/// iteration from Chebyshev-Gauss-Lobatto guesses. Symmetric by construction.
/// Throws FeketeError if Newton fails to converge.
[[nodiscard]] std::vector<double> lgl_nodes(std::size_t r);

/// Nodal Fekete problem: the LGL nodes, with log of prod (xi_j - xi_i).
[[nodiscard]] FeketeResult fekete_nodes(std::size_t r);

/// Concatenated segments maximizing the non-normalized determinant: LGL(r + 1) breakpoints.
[[nodiscard]] FeketeResult fekete_concat_nonnormalized(std::size_t r);

struct NormalizedOptions {
  std::size_t starts = 16;
  std::uint64_t seed = 0;
  double tol = 1e-10;            // gradient tolerance of the quasi-Newton stage
  bool pin_endpoints = true;     // xi_1 = xi_2 = -1, xi_r = xi_{r+1} = 1 for r >= 3
  double stationarity_tol = 1e-7;
};

/// Concatenated segments maximizing the normalized determinant
/// (1/r!) prod_{i+1<j} (xi_j - xi_i). Multi-start BFGS over log-gaps followed by a
/// Newton polish on the breakpoints. Throws FeketeError when no start converges
/// after escalating the number of starts four-fold.
[[nodiscard]] FeketeResult fekete_concat_normalized(std::size_t r, const NormalizedOptions& opts = {});

/// Log of the normalized concatenated objective and its gradient with respect to the breakpoints.
[[nodiscard]] double concat_normalized_objective(std::span<const double> xs, std::span<double> gradient = {});

/// Uniform arc-length Fekete segments: arc-midpoints cos(tau_i) = xi_i^LL cos(rho).
/// Requires r >= 2 and 0 < rho < pi / r.
[[nodiscard]] FeketeResult fekete_arc(std::size_t r, double rho);

struct RhoSweepRow {
  double rho = 0.0;
  double log_abs_det = 0.0;
};

/// log |det V^U(S^Fek(rho))| along an increasing rho grid inside (0, pi/r).
[[nodiscard]] std::vector<RhoSweepRow> det_rho_sweep(std::size_t r, std::span<const double> rho_grid);

/// prod_{j=1..r} sin(j rho) / (j sin rho), in log form.
[[nodiscard]] double log_arc_diagonal(std::size_t r, double rho);

/// Exhaustive symmetric grid search for nodes maximizing prod |xi_j - xi_i|
/// (endpoints fixed at +-1), then coordinate-wise golden-section polish. r <= 6.
[[nodiscard]] std::vector<double> fekete_nodes_bruteforce(std::size_t r, double grid_step = 1e-3);

/// True when the set maps onto itself under x -> -x within tol.
[[nodiscard]] bool is_symmetric(const SupportSet& set, double tol = 1e-8);

}  // namespace histo
