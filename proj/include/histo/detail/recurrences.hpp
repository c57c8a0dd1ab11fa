#pragma once

// Three-term recurrences shared by the double-precision basis routines and the
// extended-precision determinant. T is any field type with the usual arithmetic.

#include "histo/polybasis.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace histo::detail {

template <class T>
void eval_basis_all(BasisKind kind, const T& x, std::span<T> out) {
  const std::size_t n = out.size();
  if (n == 0) return;
  out[0] = T(1);
  if (n == 1) return;
  switch (kind) {
    case BasisKind::Monomial:
      for (std::size_t k = 1; k < n; ++k) out[k] = out[k - 1] * x;
      break;
    case BasisKind::ChebyshevU:
      out[1] = 2 * x;
      for (std::size_t k = 2; k < n; ++k) out[k] = 2 * x * out[k - 1] - out[k - 2];
      break;
    case BasisKind::Legendre:
      out[1] = x;
      // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}, here with k+1 = m.
      for (std::size_t m = 2; m < n; ++m) {
        const T md(static_cast<double>(m));
        out[m] = ((2 * md - 1) * x * out[m - 1] - (md - 1) * out[m - 2]) / md;
      }
      break;
  }
}

// Divided differences (F(b) - F(a)) / (b - a) of the antiderivatives, run through
// recurrences so that short supports lose no accuracy and a == b gives B(a).
template <class T>
void average_basis_all(BasisKind kind, const T& a, const T& b, std::span<T> out) {
  const std::size_t n = out.size();
  if (n == 0) return;
  switch (kind) {
    case BasisKind::Monomial: {
      // d_k = (b^k - a^k) / (b - a), d_{k+1} = b d_k + a^k; the antiderivative is x^j / j.
      T d(1), a_pow = a;
      for (std::size_t k = 0; k < n; ++k) {
        out[k] = d / T(static_cast<double>(k + 1));
        d = b * d + a_pow;
        a_pow *= a;
      }
      break;
    }
    case BasisKind::ChebyshevU: {
      // d_k = (T_k(b) - T_k(a)) / (b - a), d_{k+1} = 2 b d_k + 2 T_k(a) - d_{k-1};
      // the antiderivative of U_{j-1} is T_j / j.
      T d_prev(0), d_cur(1);
      T t_cur = a;  // T_1(a)
      T t_prev(1);
      for (std::size_t k = 0; k < n; ++k) {
        out[k] = d_cur / T(static_cast<double>(k + 1));
        T d_next = 2 * b * d_cur + 2 * t_cur - d_prev;
        T t_next = 2 * a * t_cur - t_prev;
        d_prev = d_cur;
        d_cur = d_next;
        t_prev = t_cur;
        t_cur = t_next;
      }
      break;
    }
    case BasisKind::Legendre: {
      // d_k = (P_k(b) - P_k(a)) / (b - a) with
      // d_{k+1} = ((2k+1)(b d_k + P_k(a)) - k d_{k-1}) / (k+1);
      // the antiderivative of P_m is (P_{m+1} - P_{m-1}) / (2m+1) for m >= 1.
      std::vector<T> d(n + 1);
      d[0] = T(0);
      d[1] = T(1);
      T p_prev(1), p_cur = a;  // P_0(a), P_1(a)
      for (std::size_t k = 1; k < n; ++k) {
        const T kd(static_cast<double>(k));
        d[k + 1] = ((2 * kd + 1) * (b * d[k] + p_cur) - kd * d[k - 1]) / (kd + 1);
        T p_next = ((2 * kd + 1) * a * p_cur - kd * p_prev) / (kd + 1);
        p_prev = p_cur;
        p_cur = p_next;
      }
      out[0] = T(1);
      for (std::size_t m = 1; m < n; ++m) out[m] = (d[m + 1] - d[m - 1]) / T(2.0 * static_cast<double>(m) + 1.0);
      break;
    }
  }
}

}  // namespace histo::detail
