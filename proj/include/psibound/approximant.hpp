#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "psibound/rational.hpp"
#include "psibound/real.hpp"

namespace psibound {

/// The distinguished parameter values.
enum class Threshold { A1, A0, A0Prime, A0DoublePrime };

/// Regimes of a, split at the thresholds a0'' < a0' < a0 < a1.
enum class Regime {
  BelowA0pp,     // (1/15, a0'')
  A0ppToA0p,     // [a0'', a0']
  A0pToA0,       // (a0', a0]
  A0ToA1,        // (a0, a1)
  AtLeastA1,     // [a1, inf], the sentinel included
};

std::string_view to_string(Regime r);

/// Approximant parameter: an exact rational, a named threshold resolved at
/// the caller's precision, a plain real, or the sentinel a = infinity.
class ParamA {
 public:
  /// Throws DomainError unless a > 1/15.
  static ParamA rational(BigRational a);
  static ParamA threshold(Threshold t);
  static ParamA real(Real a, std::string label);
  static ParamA infinity();

  /// Decimal, "p/q", or one of the tokens a1, a0, a0p, a0pp, inf.
  static ParamA parse(std::string_view text);

  bool is_infinite() const { return kind_ == Kind::Infinity; }
  bool is_exact() const { return kind_ == Kind::Rational; }
  const BigRational& exact() const;
  std::optional<Threshold> threshold_id() const;

  /// Value at the context precision; DomainError for the sentinel.
  Real value(const PrecisionContext& ctx) const;

  /// Textual form, e.g. "1/2", "a1", "inf".
  const std::string& label() const { return label_; }

  Regime regime(const PrecisionContext& ctx) const;

 private:
  enum class Kind { Rational, Threshold, Real, Infinity };
  ParamA(Kind k, std::string label) : kind_(k), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
  BigRational q_{0};
  Threshold t_ = Threshold::A1;
  std::optional<Real> r_;
};

/// L(x, a). Domain: x >= 0 with a > 1/15, or x in (-1, 0) with a > 4/15.
/// The sentinel gives (1/2) ln(x^2 + x + 1/3).
/// Errors: DomainError("outside (x,a) domain"), DomainError naming a
/// non-positive logarithm argument.
Real approximant(const Real& x, const ParamA& a, const PrecisionContext& ctx);

/// d^k L / dx^k for k = 1, 2, 3; same domain.
Real approximant_partial_x(int k, const Real& x, const ParamA& a, const PrecisionContext& ctx);

/// dL/da for finite a; same domain.
Real approximant_partial_a(const Real& x, const ParamA& a, const PrecisionContext& ctx);

struct RootInfo {
  Real value;
  /// Final bracket width, or the solver tolerance if that is larger.
  Real tolerance;
  BigRational bracket_lo, bracket_hi;
  int iterations = 0;
};

struct ThresholdSet {
  Real a1;            // (40 + 3 sqrt 205)/105
  Real a2;            // (40 - 3 sqrt 205)/105
  Real a0_prime;      // closed form from psi'(1) = L_x(0, a)
  RootInfo a0;        // psi(1) = L(0, a) on (1/2, 3/5)
  RootInfo a0_double_prime;  // psi''(1) = L_xx(0, a) on (1/3, 1/2)
};

/// Solved once per precision context and cached. Throws
/// RootBracketError("root bracketing failed") if a bracket has no sign change.
const ThresholdSet& thresholds(const PrecisionContext& ctx);

Real threshold_value(Threshold t, const PrecisionContext& ctx);

/// c0(a) = L(0, a) + gamma; a > 1/15 or the sentinel (gamma - ln(3)/2).
Real c0(const ParamA& a, const PrecisionContext& ctx);

/// c1(a) = 1 - L(1, a).
Real c1(const ParamA& a, const PrecisionContext& ctx);

struct X0Solution {
  RootInfo x0;        // psi'(x + 1) = L_x(x, a0) on (0, 1/5)
  Real F_at_x0;       // psi(x0 + 1) - L(x0, a0)
};

/// Cached per context like thresholds().
const X0Solution& solve_x0(const PrecisionContext& ctx);

/// Bisection kept honest by secant steps (Illinois variant). f(lo) and f(hi)
/// must differ in sign; stops when the bracket is narrower than tol.
template <class F>
RootInfo solve_bracketed(F&& f, const BigRational& lo, const BigRational& hi, const Real& tol);

}  // namespace psibound

#include "psibound/detail/root_solver.hpp"
