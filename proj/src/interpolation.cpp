#include "histo/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace histo {

double integral(const RealFunction& f, const Support& support, const QuadratureOptions& opts) {
  if (support.is_node()) return 0.0;
  const QuadratureResult q = integrate_gk(f, support.alpha, support.beta, opts);
  if (!q.converged) {
    throw QuadratureError("quadrature did not converge on [" + std::to_string(support.alpha) + ", " +
                          std::to_string(support.beta) + "] (error estimate " + std::to_string(q.error) +
                          ", " + std::to_string(q.intervals) + " panels)");
  }
  return q.value;
}

double average(const RealFunction& f, const Support& support, const QuadratureOptions& opts) {
  if (support.is_node()) return f(support.midpoint());
  return integral(f, support, opts) / support.length();
}

std::vector<DataFunctional> sample(const RealFunction& f, const SupportSet& set, Mode mode,
                                   const QuadratureOptions& opts) {
  std::vector<DataFunctional> out;
  out.reserve(set.size());
  for (const Support& s : set.supports()) {
    double value = 0.0;
    switch (mode) {
      case Mode::Nodal: value = f(s.midpoint()); break;
      case Mode::Segmental: value = integral(f, s, opts); break;
      case Mode::Normalized: value = average(f, s, opts); break;
    }
    out.push_back({s, value});
  }
  return out;
}

std::vector<double> sample_polynomial(const Polynomial& p, const SupportSet& set, Mode mode) {
  std::vector<double> out(set.size(), 0.0);
  std::vector<double> row(p.coeffs.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Support& s = set[i];
    if (mode == Mode::Nodal || (mode == Mode::Normalized && s.is_node())) {
      eval_basis_all(p.basis, s.midpoint(), row);
    } else {
      if (mode == Mode::Normalized) {
        average_basis_all(p.basis, s.alpha, s.beta, row);
      } else {
        integrate_basis_all(p.basis, s.alpha, s.beta, row);
      }
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) sum += row[k] * p.coeffs[k];
    out[i] = sum;
  }
  return out;
}

Interpolator::Interpolator(const SupportSet& set, BasisKind basis, Mode mode)
    : system_(build_vandermonde(basis, set, mode)) {
  if (sign_log_det(system_).sign == 0) throw SingularSystemError("singular Vandermonde system");
  lu_.compute(system_.matrix);
}

Polynomial Interpolator::solve(std::span<const double> data) const {
  if (data.size() != system_.order()) throw std::invalid_argument("data size does not match the support count");
  const Eigen::Map<const Eigen::VectorXd> rhs(data.data(), static_cast<Eigen::Index>(data.size()));
  const Eigen::VectorXd c = lu_.solve(rhs);
  return Polynomial{system_.basis, std::vector<double>(c.data(), c.data() + c.size())};
}

Polynomial Interpolator::solve(std::span<const DataFunctional> data) const {
  std::vector<double> values;
  values.reserve(data.size());
  for (const auto& d : data) values.push_back(d.value);
  return solve(values);
}

Polynomial Interpolator::operator()(const RealFunction& f, const QuadratureOptions& opts) const {
  return solve(sample(f, system_.supports, system_.mode, opts));
}

Polynomial Interpolator::operator()(const Polynomial& p) const {
  return solve(sample_polynomial(p, system_.supports, system_.mode));
}

Polynomial interpolate(const SupportSet& set, BasisKind basis, Mode mode, const RealFunction& f) {
  return Interpolator(set, basis, mode)(f);
}

double idempotence_check(const SupportSet& set, BasisKind basis, Mode mode, const RealFunction& f) {
  const Interpolator op(set, basis, mode);
  const Polynomial once = op(f);
  const Polynomial twice = op(once);
  const Polynomial u1 = once.convert_to(BasisKind::ChebyshevU);
  const Polynomial u2 = twice.convert_to(BasisKind::ChebyshevU);
  double dev = 0.0;
  for (std::size_t k = 0; k < u1.coeffs.size(); ++k) dev = std::max(dev, std::abs(u1.coeffs[k] - u2.coeffs[k]));
  for (double x : uniform_grid(1000)) dev = std::max(dev, std::abs(once(x) - twice(x)));
  return dev;
}

RealFunction test_function(std::string_view name) {
  if (name == "runge") return [](double x) { return 1.0 / (1.0 + 25.0 * x * x); };
  if (name == "abs") return [](double x) { return std::abs(x); };
  if (name == "step") return [](double x) { return x < 0.0 ? -1.0 : 1.0; };
  if (name == "exp") return [](double x) { return std::exp(x); };
  if (name.starts_with("poly:")) {
    std::vector<double> coeffs;
    std::string_view rest = name.substr(5);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string token(rest.substr(0, comma));
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != token.size()) throw std::invalid_argument("bad polynomial coefficient '" + token + "'");
      coeffs.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (coeffs.empty()) throw std::invalid_argument("poly: needs at least one coefficient");
    return [coeffs](double x) {
      double acc = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
  }
  throw std::invalid_argument("unknown test function '" + std::string(name) + "'");
}

std::vector<double> uniform_grid(std::size_t n, double a, double b) {
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = 0.5 * (a + b);
    return grid;
  }
  for (std::size_t k = 0; k < n; ++k) {
    grid[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  return grid;
}

}  // namespace histo
