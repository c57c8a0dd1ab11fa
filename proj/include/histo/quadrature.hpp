#pragma once

#include <functional>
#include <stdexcept>

namespace histo {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  int max_level = 0;
  bool converged = false;
};

struct QuadratureOptions {
  double abs_tol = 1e-11;
  int max_level = 50;
  int max_intervals = 5000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature with an absolute
/// tolerance. The interval with the largest error estimate is bisected until
/// the summed estimate meets abs_tol or no interval may be refined further.
/// The result reports convergence; it never throws.
[[nodiscard]] QuadratureResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                                            const QuadratureOptions& opts = {});

}  // namespace histo
