#pragma once

namespace psibound {

template <class F>
RootInfo solve_bracketed(F&& f, const BigRational& lo, const BigRational& hi, const Real& tol) {
  Real a = to_real(lo);
  Real b = to_real(hi);
  Real fa = f(a);
  Real fb = f(b);
  if (fa == 0) return {a, tol, lo, hi, 0};
  if (fb == 0) return {b, tol, lo, hi, 0};
  if ((fa > 0) == (fb > 0)) throw RootBracketError("root bracketing failed");

  int side = 0;  // which end moved last: -1 left, +1 right
  int iterations = 0;
  const int max_iterations = 100000;
  while (b - a >= tol && iterations < max_iterations) {
    ++iterations;
    Real c = (a * fb - b * fa) / (fb - fa);
    // Fall back to bisection when the secant point is useless.
    if (!(c > a && c < b) || iterations % 4 == 0) c = (a + b) / 2;
    const Real fc = f(c);
    if (fc == 0) {
      a = c;
      b = c;
      break;
    }
    if ((fc > 0) == (fa > 0)) {
      a = c;
      fa = fc;
      if (side == -1) fb /= 2;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa /= 2;
      side = 1;
    }
  }
  if (b - a >= tol) throw RootBracketError("root bracketing failed");
  // f can round to exactly zero short of the root, so never claim better
  // than the requested tolerance.
  const Real width = b - a;
  return {(a + b) / 2, width > tol ? width : tol, lo, hi, iterations};
}

}  // namespace psibound
