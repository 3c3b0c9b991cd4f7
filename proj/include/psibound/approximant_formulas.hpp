#pragma once

// Closed forms of the approximant that need only field operations, written
// once for any scalar type: double, Real, BigRational, QuadraticSurd<205>,
// dual numbers in tests.
//
//   L(x, a) = w1 ln(x^2 + x + c1) + w2 ln(x^2 + x + c2)
//   w1 = 1/(90a^2 + 2), w2 = 45a^2/(90a^2 + 2), c1 = (3a + 1)/3, c2 = (15a - 1)/(45a)
//
// and the a -> infinity limit (1/2) ln(x^2 + x + 1/3).

#include <stdexcept>

namespace psibound::formulas {

template <class T>
struct Shape {
  T w1, w2, c1, c2;
};

template <class T>
Shape<T> shape(const T& a) {
  const T den = T(90) * a * a + T(2);
  return {T(1) / den, T(45) * a * a / den, (T(3) * a + T(1)) / T(3), (T(15) * a - T(1)) / (T(45) * a)};
}

/// d^k/dx^k ln(x^2 + x + c) for k = 1, 2, 3.
template <class T>
T log_quadratic_partial(int k, const T& x, const T& c) {
  const T g = x * x + x + c;
  const T dg = T(2) * x + T(1);
  switch (k) {
    case 1:
      return dg / g;
    case 2:
      return T(2) / g - dg * dg / (g * g);
    case 3:
      return T(0) - T(6) * dg / (g * g) + T(2) * dg * dg * dg / (g * g * g);
    default:
      throw std::invalid_argument("partial order must be 1, 2 or 3");
  }
}

/// d^k L / dx^k for finite a.
template <class T>
T partial_x(int k, const T& x, const T& a) {
  const Shape<T> s = shape(a);
  return s.w1 * log_quadratic_partial(k, x, s.c1) + s.w2 * log_quadratic_partial(k, x, s.c2);
}

/// d^k/dx^k of (1/2) ln(x^2 + x + 1/3).
template <class T>
T partial_x_limit(int k, const T& x) {
  return log_quadratic_partial(k, x, T(1) / T(3)) / T(2);
}

/// The part of dL/da that is free of logarithms:
/// dL/da = 45a/(45a^2 + 1)^2 ln(g2/g1) + (1/g1 + 1/g2)/(90a^2 + 2).
template <class T>
T partial_a_rational_part(const T& x, const T& a) {
  const Shape<T> s = shape(a);
  const T g1 = x * x + x + s.c1;
  const T g2 = x * x + x + s.c2;
  return s.w1 * (T(1) / g1 + T(1) / g2);
}

template <class T>
T partial_a_log_weight(const T& a) {
  const T d = T(45) * a * a + T(1);
  return T(45) * a / (d * d);
}

/// q(x, a) with F'_a(x + 1) - F'_a(x) = q(x, a)/p(x, a), F_a = psi(. + 1) - L(., a).
template <class T>
T q(const T& x, const T& a) {
  const T y = x + T(1);
  const T lead = (T(-315) * a * a + T(240) * a + T(7)) / (T(2025) * a);
  const T m = (a + T(1) / T(3)) * (a - T(1) / T(15));
  return lead * y * y - m * m / (T(9) * a * a);
}

/// p(x, a), positive on (-1, inf) for a > 4/15.
template <class T>
T p(const T& x, const T& a) {
  const T y = x + T(1);
  const T inv = T(1) / (T(45) * a);
  return y * y * (x * x + T(3) * x + a + T(7) / T(3)) * (x * x + x + a + T(1) / T(3)) *
         (x * x + x + T(1) / T(3) - inv) * (x * x + T(3) * x + T(7) / T(3) - inv);
}

/// Limit of n^6 (l_n(a) - gamma): -(315a^2 - 240a - 7)/(85050a) = -(a - a1)(a - a2)/(270a).
template <class T>
T limit_constant(const T& a) {
  return (T(0) - (T(315) * a * a - T(240) * a - T(7))) / (T(85050) * a);
}

/// Rational lower bound on psi'(x + 1/2).
template <class T>
T halfshift1(const T& x) {
  const T x2 = x * x;
  return T(20) * x * (T(84) * x2 + T(71)) / (T(1680) * x2 * x2 + T(1560) * x2 + T(81));
}

/// Rational upper bound on psi''(x + 1/2).
template <class T>
T halfshift2(const T& x) {
  const T x2 = x * x;
  const T d = T(560) * x2 * x2 + T(520) * x2 + T(27);
  const T n = T(47040) * x2 * x2 * x2 + T(75600) * x2 * x2 + T(30116) * x2 - T(1917);
  return T(-20) * n / (T(3) * d * d);
}

/// Rational lower bound on psi'''(x + 1/2).
template <class T>
T halfshift3(const T& x) {
  const T x2 = x * x;
  const T x4 = x2 * x2;
  const T d = T(560) * x4 + T(520) * x2 + T(27);
  const T n = T(6585600) * x4 * x4 + T(15052800) * x4 * x2 + T(11696160) * x4 + T(1820960) * x2 - T(701703);
  return T(160) * x * n / (T(3) * d * d * d);
}

}  // namespace psibound::formulas
