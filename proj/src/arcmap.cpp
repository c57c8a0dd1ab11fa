#include "histo/arcmap.hpp"

#include "histo/fekete.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace histo {

SpectralK SpectralK::make(std::size_t r, double rho) {
  if (!(rho > 0.0 && rho < std::numbers::pi / 2.0)) throw std::invalid_argument("arc radius must lie in (0, pi/2)");
  SpectralK k;
  k.rho = rho;
  k.r = r;
  k.eigenvalues.resize(r);
  const double sr = std::sin(rho);
  for (std::size_t j = 1; j <= r; ++j) {
    const auto jd = static_cast<double>(j);
    k.eigenvalues[j - 1] = std::sin(jd * rho) / (jd * sr);
  }
  return k;
}

bool SpectralK::invertible() const {
  return std::all_of(eigenvalues.begin(), eigenvalues.end(), [](double mu) { return mu > 0.0; });
}

double apply_K_pointwise(const RealFunction& f, double rho, double t, const QuadratureOptions& opts) {
  if (!(t >= 0.0 && t <= std::numbers::pi)) throw std::invalid_argument("t must lie in [0, pi]");
  const Support window{std::cos(t + rho), std::cos(t - rho)};
  if (window.is_node()) return f(window.midpoint());
  // Tolerance relative to the window so the average keeps its accuracy on short windows.
  QuadratureOptions scaled = opts;
  scaled.abs_tol = opts.abs_tol * window.length();
  return average(f, window, scaled);
}

Polynomial apply_K_poly(const Polynomial& p, double rho) {
  Polynomial u = p.convert_to(BasisKind::ChebyshevU);
  const SpectralK k = SpectralK::make(u.order(), rho);
  for (std::size_t j = 0; j < u.order(); ++j) u.coeffs[j] *= k.eigenvalues[j];
  return u;
}

Polynomial apply_K_inverse(const Polynomial& p, double rho, std::size_t r) {
  if (p.order() > r) throw std::invalid_argument("polynomial order exceeds r");
  if (!(rho < std::numbers::pi / static_cast<double>(r))) throw std::domain_error("K_rho is not invertible for rho >= pi/r");
  Polynomial u = p.convert_to(BasisKind::ChebyshevU);
  const SpectralK k = SpectralK::make(r, rho);
  for (std::size_t j = 0; j < u.order(); ++j) u.coeffs[j] /= k.eigenvalues[j];
  return u;
}

LagrangeBasis apply_K_cardinals(const LagrangeBasis& basis, double rho) {
  const std::size_t r = basis.order();
  const SpectralK k = SpectralK::make(r, rho);
  LagrangeBasis out;
  out.basis = BasisKind::ChebyshevU;
  out.mode = basis.mode;
  out.coeffs.resize(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Polynomial u = basis.function(i).convert_to(BasisKind::ChebyshevU);
    for (std::size_t j = 0; j < r; ++j) {
      out.coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = u.coeffs[j] * k.eigenvalues[j];
    }
  }
  return out;
}

GridMaximum fejer_functional(const ArcFamily& fam, BasisKind basis, const GridOptions& opts) {
  const SupportSet set = arc_to_supports(fam);
  const LagrangeBasis lb = apply_K_cardinals(lagrange_basis(build_vandermonde(basis, set, Mode::Normalized)), fam.rho);
  const BatchFunction squares = [&](std::span<const double> xs, std::span<double> values) {
    const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
    for (std::size_t k = 0; k < xs.size(); ++k) values[k] = l.col(static_cast<Eigen::Index>(k)).squaredNorm();
  };
  const double c = std::cos(fam.rho);
  return maximize_on_grid(squares, -c, c, opts.points_for(set.size()), opts);
}

InverseNormEstimate inverse_norm_estimate(double rho, std::size_t r, const GridOptions& opts) {
  if (!(rho < std::numbers::pi / static_cast<double>(r))) throw std::domain_error("K_rho is not invertible for rho >= pi/r");
  const SpectralK k = SpectralK::make(r, rho);
  InverseNormEstimate est;
  for (double mu : k.eigenvalues) est.coefficient_norm = std::max(est.coefficient_norm, 1.0 / mu);

  const SupportSet nodes = node_set(r >= 2 ? lgl_nodes(r) : std::vector<double>{0.0});
  LagrangeBasis lb = lagrange_basis(build_vandermonde(BasisKind::ChebyshevU, nodes, Mode::Nodal));
  for (Eigen::Index j = 0; j < lb.coeffs.cols(); ++j) lb.coeffs.col(j) /= k.eigenvalues[static_cast<std::size_t>(j)];
  const BatchFunction total = [&](std::span<const double> xs, std::span<double> values) {
    const Eigen::MatrixXd l = evaluate_lagrange(lb, xs);
    for (std::size_t c = 0; c < xs.size(); ++c) values[c] = l.col(static_cast<Eigen::Index>(c)).cwiseAbs().sum();
  };
  est.sup_norm_bound = maximize_on_grid(total, -1.0, 1.0, opts.points_for(r), opts).value;
  return est;
}

}  // namespace histo
