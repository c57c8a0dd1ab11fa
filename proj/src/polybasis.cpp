#include "histo/polybasis.hpp"

#include "histo/detail/recurrences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace histo {

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::ChebyshevU: return "chebu";
    case BasisKind::Legendre: return "legendre";
  }
  return "unknown";
}

std::optional<BasisKind> parse_basis(std::string_view name) {
  if (name == "monomial") return BasisKind::Monomial;
  if (name == "chebu") return BasisKind::ChebyshevU;
  if (name == "legendre") return BasisKind::Legendre;
  return std::nullopt;
}

void eval_basis_all(BasisKind kind, double x, std::span<double> out) { detail::eval_basis_all<double>(kind, x, out); }

double eval_basis(BasisKind kind, std::size_t j, double x) {
  if (j == 0) throw std::invalid_argument("eval_basis: basis index is 1-based");
  if (kind == BasisKind::Monomial) return std::pow(x, static_cast<double>(j - 1));
  if (kind == BasisKind::ChebyshevU) return chebyshev_u(j - 1, x);
  return legendre(j - 1, x);
}

double legendre(std::size_t degree, double x) {
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = x;
  for (std::size_t k = 1; k < degree; ++k) {
    const auto kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0) * x * cur - kd * prev) / (kd + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_t(std::size_t degree, double x) {
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = x;
  for (std::size_t k = 1; k < degree; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_u(std::size_t degree, double x) {
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = 2.0 * x;
  for (std::size_t k = 1; k < degree; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double legendre_deriv(std::size_t degree, double x) {
  if (degree == 0) return 0.0;
  // Walk P_k and P'_k together.
  double p_prev = 1.0, p_cur = x;     // P_0, P_1
  double d_prev = 0.0, d_cur = 1.0;   // P'_0, P'_1
  for (std::size_t k = 1; k < degree; ++k) {
    const auto kd = static_cast<double>(k);
    const double p_next = ((2.0 * kd + 1.0) * x * p_cur - kd * p_prev) / (kd + 1.0);
    const double d_next = d_prev + (2.0 * kd + 1.0) * p_cur;
    p_prev = p_cur;
    p_cur = p_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return d_cur;
}

void average_basis_all(BasisKind kind, double a, double b, std::span<double> out) {
  detail::average_basis_all<double>(kind, a, b, out);
}

void integrate_basis_all(BasisKind kind, double a, double b, std::span<double> out) {
  average_basis_all(kind, a, b, out);
  const double len = b - a;
  for (double& v : out) v *= len;
}

double integrate_basis(BasisKind kind, std::size_t j, double a, double b) {
  if (j == 0) throw std::invalid_argument("integrate_basis: basis index is 1-based");
  std::vector<double> values(j);
  integrate_basis_all(kind, a, b, values);
  return values.back();
}

double Polynomial::operator()(double x) const {
  std::vector<double> b(coeffs.size());
  eval_basis_all(basis, x, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) sum += coeffs[k] * b[k];
  return sum;
}

namespace {

// Coefficients of x * q in the same basis; q has degree < out.size() - 1.
void multiply_by_x(BasisKind kind, std::span<const double> q, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t n = 0; n < q.size(); ++n) {
    const double c = q[n];
    if (c == 0.0) continue;
    const auto nd = static_cast<double>(n);
    switch (kind) {
      case BasisKind::Monomial: out[n + 1] += c; break;
      case BasisKind::ChebyshevU:  // x U_n = (U_{n+1} + U_{n-1}) / 2
        out[n + 1] += 0.5 * c;
        if (n > 0) out[n - 1] += 0.5 * c;
        break;
      case BasisKind::Legendre:  // x P_n = ((n+1) P_{n+1} + n P_{n-1}) / (2n+1)
        out[n + 1] += c * (nd + 1.0) / (2.0 * nd + 1.0);
        if (n > 0) out[n - 1] += c * nd / (2.0 * nd + 1.0);
        break;
    }
  }
}

// Source recurrence A_{n+1} = a_n x A_n - g_n A_{n-1} with A_0 = 1.
double rec_a(BasisKind kind, std::size_t n) {
  const auto nd = static_cast<double>(n);
  switch (kind) {
    case BasisKind::Monomial: return 1.0;
    case BasisKind::ChebyshevU: return 2.0;
    case BasisKind::Legendre: return (2.0 * nd + 1.0) / (nd + 1.0);
  }
  return 0.0;
}

double rec_g(BasisKind kind, std::size_t n) {
  const auto nd = static_cast<double>(n);
  switch (kind) {
    case BasisKind::Monomial: return 0.0;
    case BasisKind::ChebyshevU: return n == 0 ? 0.0 : 1.0;
    case BasisKind::Legendre: return nd / (nd + 1.0);
  }
  return 0.0;
}

}  // namespace

Polynomial Polynomial::convert_to(BasisKind target) const {
  if (target == basis || coeffs.empty()) return Polynomial{target, coeffs};
  // Clenshaw summation of sum_k c_k A_k carried out on coefficient vectors of the target basis.
  const std::size_t r = coeffs.size();
  std::vector<double> b1(r + 1, 0.0), b2(r + 1, 0.0), xb(r + 1, 0.0), b0(r + 1, 0.0);
  for (std::size_t k = r; k-- > 0;) {
    multiply_by_x(target, std::span<const double>(b1.data(), r), xb);
    const double a = rec_a(basis, k);
    const double g = rec_g(basis, k + 1);
    for (std::size_t n = 0; n <= r; ++n) b0[n] = a * xb[n] - g * b2[n];
    b0[0] += coeffs[k];
    b2.swap(b1);
    b1.swap(b0);
  }
  return Polynomial{target, std::vector<double>(b1.begin(), b1.begin() + static_cast<std::ptrdiff_t>(r))};
}

}  // namespace histo
