#pragma once

#include <optional>
#include <string_view>

#include "psibound/approximant.hpp"

namespace psibound {

enum class Target { Psi, Psi1, Psi2, Harmonic };

enum class Justification {
  MT_PSI_LT_L,     // psi(x+1) < L(x,a) on (-1, inf) iff a >= a1
  MT_PSI_GT_L,     // psi(x+1) > L(x,a) on (0, inf) iff a <= a0
  INEQ_P3,         // psi(x+1) <= L(x,a0) + F_a0(x0)
  PB_LR1,          // L - c0(a) < psi(x+1) < L, a >= a1
  PB_LR2,          // L < psi(x+1) < L - c0(a), a <= a0'
  COR_PSI1,        // L_x(x,a1) < psi'(x+1) < L_x(x,a0')
  COR_PSI2,        // L_xx(x,a0'') < psi''(x+1) < L_xx(x,a1)
  H_NA1,           // L(n,a) + c1(a) < H_n < L(n,a) + gamma, a >= a1
  H_NA0,           // L(n,a) + gamma < H_n < L(n,a) + c1(a), a < a0
  BASELINE_1_1A,   // ln(x+1/2) < psi(x+1) <= ln(x+e^-gamma)
  BASELINE_1_2A,   // (1/2)ln(x^2+x+e^-2gamma) <= psi(x+1) < (1/2)ln(x^2+x+1/3)
};

std::string_view to_string(Target t);
std::string_view to_string(Justification j);

/// Two-sided enclosure [lo, hi] of a target value. One side may be missing
/// (lo = -inf or hi = +inf) when only a one-sided theorem applies.
///
/// An attained endpoint is one the target can actually reach (a non-strict
/// inequality, or a touching case such as n = 1 in the harmonic bounds).
struct Enclosure {
  Real lo;
  Real hi;
  Target target = Target::Psi;
  /// Theorem behind hi (or lo when hi is missing).
  Justification justification = Justification::MT_PSI_LT_L;
  /// Theorem behind lo when it differs.
  std::optional<Justification> lower_justification;
  bool lo_attained = false;
  bool hi_attained = false;

  bool has_lo() const;
  bool has_hi() const;
  Real width() const;
};

/// Containment of `value` (itself known to within eps) in the enclosure:
/// FAIL if it is more than 2 eps outside, PASS if more than 2 eps inside.
/// Within 2 eps of an endpoint the verdict is PASS when that endpoint is
/// attained and INDETERMINATE otherwise.
Verdict containment(const Enclosure& e, const Real& value, const Real& eps);

/// psi^(k)(x+1) - d^k L/dx^k (x, a), k = 0..3.
Real residual(int k, const Real& x, const ParamA& a, const PrecisionContext& ctx);

/// [L(x,a0), min(L(x,a1), L(x,a0) + F_a0(x0))] for x > 0.
Enclosure psi_enclosure(const Real& x, const PrecisionContext& ctx);

/// Offset form for a fixed a:
///   a >= a1: [L - c0(a), L] for x > 0; for x in (-1, 0] only hi = L.
///   a <= a0': [L, L - c0(a)] for x > 0.
///   a in (a0', a0]: only lo = L for x > 0.
/// DomainError("no theorem covers this regime") for a in (a0, a1).
Enclosure psi_enclosure_offset(const Real& x, const ParamA& a, const PrecisionContext& ctx);

/// Bounds on H_n for a >= a1 or a in (1/15, a0).
Enclosure harmonic_enclosure(long n, const ParamA& a, const PrecisionContext& ctx);

/// k = 1: [L_x(x,a1), L_x(x,a0')]; k = 2: [L_xx(x,a0''), L_xx(x,a1)]; x >= 0.
/// At x = 0 the a0' (a0'') endpoint equals the target and is marked attained.
Enclosure polygamma_bounds(int k, const Real& x, const PrecisionContext& ctx);

enum class Direction { Lower, Upper };

struct OneSidedBound {
  Real value;
  Direction direction;
  int order;  // bounds psi^(order)(x + 1/2)
};

/// Rational bounds on psi^(k)(x + 1/2) for x > -1/2: lower for k = 1, 3,
/// upper for k = 2.
OneSidedBound halfshift_bound(int k, const Real& x, const PrecisionContext& ctx);

enum class Baseline { BATIR_1_1A, HE_1_2A };

Enclosure baseline_bounds(const Real& x, Baseline which, const PrecisionContext& ctx);

}  // namespace psibound
