#pragma once

#include "histo/polybasis.hpp"
#include "histo/supports.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

namespace histo {

/// How the data functionals are normalized.
///   Nodal:      V_ij = B_j(xi_i)
///   Segmental:  V_ij = integral of B_j over s_i
///   Normalized: V_ij = average of B_j over a_i (point value when a_i is a node)
enum class Mode { Nodal, Segmental, Normalized };

[[nodiscard]] std::string_view to_string(Mode mode);
[[nodiscard]] std::optional<Mode> parse_mode(std::string_view name);

/// A singular system or a support set that does not fit the requested mode.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VandermondeSystem {
  Eigen::MatrixXd matrix;
  BasisKind basis = BasisKind::ChebyshevU;
  SupportSet supports;
  Mode mode = Mode::Normalized;

  [[nodiscard]] std::size_t order() const { return static_cast<std::size_t>(matrix.rows()); }
};

/// Row i holds the data functional of support i applied to B_1..B_r. C2 sets in
/// the Chebyshev-U basis use the closed form (1/j) sin(j tau)/sin(tau) sin(j rho)/sin(rho)
/// in Normalized mode. Throws std::invalid_argument on mode/support mismatch.
[[nodiscard]] VandermondeSystem build_vandermonde(BasisKind basis, const SupportSet& set, Mode mode);

/// Applies the data functionals of (set, mode) to B_1..B_r without closed forms.
[[nodiscard]] Eigen::MatrixXd functional_matrix(BasisKind basis, const SupportSet& set, Mode mode);

struct SignLogDet {
  int sign = 0;  // -1, 0 (numerically singular) or +1
  double log_abs_det = 0.0;
};

/// Row-equilibrated, fully pivoted LU; sign 0 on rank deficiency or a pivot below 1e-300.
[[nodiscard]] SignLogDet sign_log_det(const Eigen::MatrixXd& matrix);
[[nodiscard]] inline SignLogDet sign_log_det(const VandermondeSystem& sys) { return sign_log_det(sys.matrix); }

/// Determinant of functional_matrix(basis, set, mode) with entries formed from the
/// double breakpoints in 50-digit arithmetic and a partially pivoted LU in the same
/// precision. Its accuracy is independent of the conditioning of the matrix, which
/// matters for near-coincident supports. Same preconditions as build_vandermonde.
[[nodiscard]] SignLogDet extended_sign_log_det(BasisKind basis, const SupportSet& set, Mode mode);

/// Cardinal functions dual to the data functionals: row i of `coeffs` holds the
/// coefficients of l_i in `basis`, so that functional_j(l_i) = delta_ij.
struct LagrangeBasis {
  Eigen::MatrixXd coeffs;
  BasisKind basis = BasisKind::ChebyshevU;
  Mode mode = Mode::Normalized;

  [[nodiscard]] std::size_t order() const { return static_cast<std::size_t>(coeffs.rows()); }
  [[nodiscard]] Polynomial function(std::size_t i) const;

  /// out[i] = l_i(x).
  void evaluate(double x, std::span<double> out) const;
};

/// Throws SingularSystemError when sign_log_det(sys).sign == 0.
[[nodiscard]] LagrangeBasis lagrange_basis(const VandermondeSystem& sys);

enum class ProductKind {
  NodalProduct,      // prod_{i<j} (x_j - x_i)
  ConcatHat,         // (1/r!) prod_{i<j} (x_j - x_i) over r + 1 breakpoints
  ConcatNormalized,  // (1/r!) prod_{i+1<j} (x_j - x_i) over r + 1 breakpoints
};

/// Monomial-basis determinants in closed form, log scale with sign.
[[nodiscard]] SignLogDet product_formula_det(std::span<const double> xs, ProductKind kind);

}  // namespace histo
