#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace histo {

/// Polynomial bases of P_{r-1}. Element B_j (j = 1..r) has exact degree j-1:
/// x^{j-1}, U_{j-1} (Chebyshev, second kind) or P_{j-1} (Legendre).
enum class BasisKind { Monomial, ChebyshevU, Legendre };

/// Largest order r for which monomial Vandermonde matrices are built.
inline constexpr std::size_t kMaxMonomialOrder = 30;

[[nodiscard]] std::string_view to_string(BasisKind kind);
[[nodiscard]] std::optional<BasisKind> parse_basis(std::string_view name);

/// B_j(x), 1-based j. Chebyshev-U and Legendre use their three-term
/// recurrences, which stay finite at x = +-1.
[[nodiscard]] double eval_basis(BasisKind kind, std::size_t j, double x);

/// Fills out[k] = B_{k+1}(x) for k < out.size().
void eval_basis_all(BasisKind kind, double x, std::span<double> out);

/// Exact integral of B_j over [a, b] from closed-form antiderivatives, evaluated
/// as (b - a) times a divided difference of the antiderivative.
[[nodiscard]] double integrate_basis(BasisKind kind, std::size_t j, double a, double b);

/// Fills out[k] = integral of B_{k+1} over [a, b].
void integrate_basis_all(BasisKind kind, double a, double b, std::span<double> out);

/// Fills out[k] = average of B_{k+1} over [a, b], i.e. the antiderivative difference
/// divided by b - a, evaluated without cancellation. For a == b it returns B_{k+1}(a).
void average_basis_all(BasisKind kind, double a, double b, std::span<double> out);

[[nodiscard]] double legendre(std::size_t degree, double x);
[[nodiscard]] double chebyshev_t(std::size_t degree, double x);
[[nodiscard]] double chebyshev_u(std::size_t degree, double x);

/// P'_n(x) through P'_{k+1} = P'_{k-1} + (2k+1) P_k.
[[nodiscard]] double legendre_deriv(std::size_t degree, double x);

/// Coefficient vector in a declared basis: p(x) = sum_j coeffs[j-1] B_j(x).
struct Polynomial {
  BasisKind basis = BasisKind::ChebyshevU;
  std::vector<double> coeffs;

  [[nodiscard]] std::size_t order() const { return coeffs.size(); }
  [[nodiscard]] double operator()(double x) const;

  /// Re-expresses the polynomial in `target` exactly (up to rounding) by Clenshaw
  /// summation over the source recurrence on target coefficient vectors.
  [[nodiscard]] Polynomial convert_to(BasisKind target) const;
};

}  // namespace histo
