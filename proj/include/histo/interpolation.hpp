#pragma once

#include "histo/polybasis.hpp"
#include "histo/quadrature.hpp"
#include "histo/supports.hpp"
#include "histo/vandermonde.hpp"

#include <Eigen/LU>

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace histo {

using RealFunction = std::function<double(double)>;

/// One sample: f(xi) for nodes, the integral in Segmental mode, the average otherwise.
struct DataFunctional {
  Support support;
  double value = 0.0;
};

/// f(xi) on nodes, otherwise (1/|s|) * integral of f over s. Throws
/// QuadratureError when the adaptive rule does not reach its tolerance.
[[nodiscard]] double average(const RealFunction& f, const Support& support, const QuadratureOptions& opts = {});

/// Integral of f over a segment (zero on nodes).
[[nodiscard]] double integral(const RealFunction& f, const Support& support, const QuadratureOptions& opts = {});

/// Samples f with the data functionals of `mode`.
[[nodiscard]] std::vector<DataFunctional> sample(const RealFunction& f, const SupportSet& set, Mode mode,
                                                 const QuadratureOptions& opts = {});

/// Applies the data functionals to a polynomial exactly, via antiderivatives.
[[nodiscard]] std::vector<double> sample_polynomial(const Polynomial& p, const SupportSet& set, Mode mode);

/// Interpolation operator for a fixed (supports, basis, mode); factorizes once.
class Interpolator {
 public:
  Interpolator(const SupportSet& set, BasisKind basis, Mode mode);

  [[nodiscard]] const VandermondeSystem& system() const { return system_; }

  /// Coefficients of the interpolant for the given data values.
  [[nodiscard]] Polynomial solve(std::span<const double> data) const;
  [[nodiscard]] Polynomial solve(std::span<const DataFunctional> data) const;

  [[nodiscard]] Polynomial operator()(const RealFunction& f, const QuadratureOptions& opts = {}) const;
  [[nodiscard]] Polynomial operator()(const Polynomial& p) const;

 private:
  VandermondeSystem system_;
  Eigen::FullPivLU<Eigen::MatrixXd> lu_;
};

[[nodiscard]] Polynomial interpolate(const SupportSet& set, BasisKind basis, Mode mode, const RealFunction& f);

/// max(|coefficients of P(Pf) - Pf| in Chebyshev-U, sup over a 1000-point grid of |P(Pf) - Pf|).
[[nodiscard]] double idempotence_check(const SupportSet& set, BasisKind basis, Mode mode, const RealFunction& f);

/// Named test functions: "runge", "abs", "step" (-1 left of 0, +1 from 0 on),
/// "exp", and "poly:c0,c1,..." with monomial coefficients.
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] RealFunction test_function(std::string_view name);

/// Uniformly spaced evaluation grid of n points on [a, b].
[[nodiscard]] std::vector<double> uniform_grid(std::size_t n, double a = -1.0, double b = 1.0);

}  // namespace histo
