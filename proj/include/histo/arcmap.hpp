#pragma once

#include "histo/interpolation.hpp"
#include "histo/lebesgue.hpp"
#include "histo/polybasis.hpp"
#include "histo/quadrature.hpp"
#include "histo/supports.hpp"
#include "histo/vandermonde.hpp"

#include <cstddef>
#include <vector>

namespace histo {

/// The sliding-average operator K_rho restricted to polynomials of order r, which
/// is diagonal in the Chebyshev-U basis: K U_{j-1} = mu_j U_{j-1}.
struct SpectralK {
  double rho = 0.0;
  std::size_t r = 0;
  std::vector<double> eigenvalues;  // mu_j = sin(j rho) / (j sin rho), j = 1..r

  /// Requires 0 < rho < pi/2.
  [[nodiscard]] static SpectralK make(std::size_t r, double rho);
  [[nodiscard]] bool invertible() const;  // every mu_j > 0
};

/// Average of f over [cos(t + rho), cos(t - rho)] for t in [0, pi]. At t = 0 and
/// t = pi the window shrinks to a point and the continuous limit f(+-cos rho) is
/// returned. Throws QuadratureError when the average cannot be computed.
[[nodiscard]] double apply_K_pointwise(const RealFunction& f, double rho, double t, const QuadratureOptions& opts = {});

/// Coefficientwise multiplication by mu_j after conversion to the Chebyshev-U basis.
[[nodiscard]] Polynomial apply_K_poly(const Polynomial& p, double rho);

/// Coefficientwise division by mu_j. Throws std::domain_error when rho >= pi/r
/// and std::invalid_argument when p has more than r coefficients.
[[nodiscard]] Polynomial apply_K_inverse(const Polynomial& p, double rho, std::size_t r);

/// Applies K_rho to every cardinal function; the result is in the Chebyshev-U basis.
[[nodiscard]] LagrangeBasis apply_K_cardinals(const LagrangeBasis& basis, double rho);

/// max over [-cos rho, cos rho] of sum_i (K_rho l_{s_i}(x))^2, where l_{s_i} are the
/// normalized cardinal functions of the arc family. Throws SingularSystemError.
[[nodiscard]] GridMaximum fejer_functional(const ArcFamily& fam, BasisKind basis = BasisKind::ChebyshevU,
                                           const GridOptions& opts = {});

struct InverseNormEstimate {
  double coefficient_norm = 0.0;  // max_j 1 / mu_j
  double sup_norm_bound = 0.0;    // sup_x sum_i |K^{-1} l_i(x)| over LGL cardinals l_i
};

/// Size of K_{rho,r}^{-1}, for diagnostics. Same preconditions as apply_K_inverse.
[[nodiscard]] InverseNormEstimate inverse_norm_estimate(double rho, std::size_t r, const GridOptions& opts = {});

}  // namespace histo
