#include "histo/vandermonde.hpp"

#include "histo/detail/recurrences.hpp"

#include <Eigen/LU>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <vector>

namespace histo {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Nodal: return "nodal";
    case Mode::Segmental: return "segmental";
    case Mode::Normalized: return "normalized";
  }
  return "normalized";
}

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "nodal") return Mode::Nodal;
  if (name == "segmental") return Mode::Segmental;
  if (name == "normalized") return Mode::Normalized;
  return std::nullopt;
}

namespace {

void check_mode(const SupportSet& set, Mode mode) {
  if (mode == Mode::Nodal && !set.all_nodes()) {
    throw std::invalid_argument("nodal mode requires every support to be a node");
  }
  if (mode == Mode::Segmental && !set.all_segments()) {
    throw std::invalid_argument("segmental mode requires every support to have positive length");
  }
}

void check_class(const SupportSet& set) {
  if (set.support_class() == SupportClass::C1) {
    for (std::size_t i = 0; i + 1 < set.size(); ++i) {
      if (std::abs(set[i].beta - set[i + 1].alpha) > kNodeLength) {
        throw std::invalid_argument("support set tagged C1 is not concatenated");
      }
    }
  }
}

}  // namespace

Eigen::MatrixXd functional_matrix(BasisKind basis, const SupportSet& set, Mode mode) {
  const std::size_t r = set.size();
  Eigen::MatrixXd m(r, r);
  std::vector<double> row(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Support& s = set[i];
    if (mode == Mode::Nodal || (mode == Mode::Normalized && s.is_node())) {
      eval_basis_all(basis, s.midpoint(), row);
    } else {
      if (mode == Mode::Normalized) {
        average_basis_all(basis, s.alpha, s.beta, row);
      } else {
        integrate_basis_all(basis, s.alpha, s.beta, row);
      }
    }
    for (std::size_t j = 0; j < r; ++j) m(i, j) = row[j];
  }
  return m;
}

VandermondeSystem build_vandermonde(BasisKind basis, const SupportSet& set, Mode mode) {
  check_mode(set, mode);
  check_class(set);
  const std::size_t r = set.size();
  if (basis == BasisKind::Monomial && r > kMaxMonomialOrder) {
    throw std::invalid_argument("monomial Vandermonde matrices are limited to r <= 30");
  }
  VandermondeSystem sys{Eigen::MatrixXd(), basis, set, mode};
  if (set.support_class() == SupportClass::C2 && basis == BasisKind::ChebyshevU && mode == Mode::Normalized) {
    const ArcFamily fam = recover_arc(set);
    if (fam.taus.size() != r) throw std::invalid_argument("arc metadata does not match the support count");
    sys.matrix.resize(r, r);
    const double sr = std::sin(fam.rho);
    for (std::size_t i = 0; i < r; ++i) {
      const double tau = fam.taus[r - 1 - i];
      const double st = std::sin(tau);
      for (std::size_t j = 1; j <= r; ++j) {
        const auto jd = static_cast<double>(j);
        sys.matrix(i, j - 1) = std::sin(jd * tau) / st * std::sin(jd * fam.rho) / sr / jd;
      }
    }
  } else {
    sys.matrix = functional_matrix(basis, set, mode);
  }
  return sys;
}

SignLogDet sign_log_det(const Eigen::MatrixXd& matrix) {
  const Eigen::Index r = matrix.rows();
  if (r == 0) return {1, 0.0};
  Eigen::MatrixXd scaled = matrix;
  double log_scale = 0.0;
  for (Eigen::Index i = 0; i < r; ++i) {
    const double s = scaled.row(i).cwiseAbs().maxCoeff();
    if (!(s > 0.0) || !std::isfinite(s)) return {0, -std::numeric_limits<double>::infinity()};
    scaled.row(i) /= s;
    log_scale += std::log(s);
  }
  const Eigen::FullPivLU<Eigen::MatrixXd> lu(scaled);
  if (lu.rank() < r) return {0, -std::numeric_limits<double>::infinity()};
  int sign = static_cast<int>(lu.permutationP().determinant() * lu.permutationQ().determinant());
  double log_abs = log_scale;
  for (Eigen::Index i = 0; i < r; ++i) {
    const double u = lu.matrixLU()(i, i);
    if (std::abs(u) < 1e-300) return {0, -std::numeric_limits<double>::infinity()};
    if (u < 0) sign = -sign;
    log_abs += std::log(std::abs(u));
  }
  return {sign, log_abs};
}

SignLogDet extended_sign_log_det(BasisKind basis, const SupportSet& set, Mode mode) {
  using Real = boost::multiprecision::cpp_bin_float_50;
  check_mode(set, mode);
  check_class(set);
  const std::size_t r = set.size();
  std::vector<std::vector<Real>> m(r, std::vector<Real>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Support& s = set[i];
    const Real a(s.alpha), b(s.beta);
    if (mode == Mode::Nodal || (mode == Mode::Normalized && s.is_node())) {
      detail::eval_basis_all<Real>(basis, (a + b) / 2, m[i]);
    } else {
      detail::average_basis_all<Real>(basis, a, b, m[i]);
      if (mode == Mode::Segmental) {
        for (Real& v : m[i]) v *= b - a;
      }
    }
  }
  SignLogDet out{1, 0.0};
  Real log_abs(0);
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < r; ++i) {
      if (abs(m[i][k]) > abs(m[p][k])) p = i;
    }
    if (m[p][k] == 0) return {0, -std::numeric_limits<double>::infinity()};
    if (p != k) {
      std::swap(m[p], m[k]);
      out.sign = -out.sign;
    }
    if (m[k][k] < 0) out.sign = -out.sign;
    log_abs += log(abs(m[k][k]));
    for (std::size_t i = k + 1; i < r; ++i) {
      const Real f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < r; ++j) m[i][j] -= f * m[k][j];
    }
  }
  out.log_abs_det = static_cast<double>(log_abs);
  return out;
}

Polynomial LagrangeBasis::function(std::size_t i) const {
  Polynomial p{basis, std::vector<double>(order())};
  for (std::size_t k = 0; k < order(); ++k) p.coeffs[k] = coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
  return p;
}

void LagrangeBasis::evaluate(double x, std::span<double> out) const {
  const Eigen::Index r = coeffs.rows();
  Eigen::VectorXd b(r);
  eval_basis_all(basis, x, std::span<double>(b.data(), static_cast<std::size_t>(r)));
  const Eigen::VectorXd values = coeffs * b;
  for (Eigen::Index i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] = values(i);
}

LagrangeBasis lagrange_basis(const VandermondeSystem& sys) {
  if (sign_log_det(sys).sign == 0) throw SingularSystemError("singular Vandermonde system");
  const Eigen::Index r = sys.matrix.rows();
  // V X = I; column i of X is l_i.
  const Eigen::MatrixXd inverse =
      sys.matrix.fullPivLu().solve(Eigen::MatrixXd::Identity(r, r));
  return LagrangeBasis{inverse.transpose(), sys.basis, sys.mode};
}

SignLogDet product_formula_det(std::span<const double> xs, ProductKind kind) {
  const std::size_t n = xs.size();
  SignLogDet out{1, 0.0};
  const bool skip_adjacent = kind == ProductKind::ConcatNormalized;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (skip_adjacent && j == i + 1) continue;
      const double d = xs[j] - xs[i];
      if (d == 0.0) return {0, -std::numeric_limits<double>::infinity()};
      if (d < 0.0) out.sign = -out.sign;
      out.log_abs_det += std::log(std::abs(d));
    }
  }
  if (kind != ProductKind::NodalProduct && n >= 1) {
    out.log_abs_det -= std::lgamma(static_cast<double>(n));  // r! with r = n - 1
  }
  return out;
}

}  // namespace histo
