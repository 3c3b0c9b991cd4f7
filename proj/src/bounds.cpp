#include "psibound/bounds.hpp"

#include <limits>

#include "psibound/approximant_formulas.hpp"
#include "psibound/oracle.hpp"

namespace psibound {

namespace {

Real infinity() { return std::numeric_limits<Real>::infinity(); }

void require_positive_x(const Real& x) {
  if (!(x > 0)) throw DomainError("x must be positive");
}

[[noreturn]] void uncovered() { throw DomainError("no theorem covers this regime"); }

}  // namespace

std::string_view to_string(Target t) {
  switch (t) {
    case Target::Psi:
      return "psi";
    case Target::Psi1:
      return "psi1";
    case Target::Psi2:
      return "psi2";
    case Target::Harmonic:
      return "harmonic";
  }
  return "?";
}

std::string_view to_string(Justification j) {
  switch (j) {
    case Justification::MT_PSI_LT_L:
      return "MT_PSI_LT_L";
    case Justification::MT_PSI_GT_L:
      return "MT_PSI_GT_L";
    case Justification::INEQ_P3:
      return "INEQ_P3";
    case Justification::PB_LR1:
      return "PB_LR1";
    case Justification::PB_LR2:
      return "PB_LR2";
    case Justification::COR_PSI1:
      return "COR_PSI1";
    case Justification::COR_PSI2:
      return "COR_PSI2";
    case Justification::H_NA1:
      return "H_NA1";
    case Justification::H_NA0:
      return "H_NA0";
    case Justification::BASELINE_1_1A:
      return "BASELINE_1_1A";
    case Justification::BASELINE_1_2A:
      return "BASELINE_1_2A";
  }
  return "?";
}

bool Enclosure::has_lo() const { return !boost::multiprecision::isinf(lo); }
bool Enclosure::has_hi() const { return !boost::multiprecision::isinf(hi); }

Real Enclosure::width() const {
  if (!has_lo() || !has_hi()) return infinity();
  return hi - lo;
}

Verdict containment(const Enclosure& e, const Real& value, const Real& eps) {
  const Real margin = 2 * eps;
  if (e.has_lo() && value < e.lo - margin) return Verdict::Fail;
  if (e.has_hi() && value > e.hi + margin) return Verdict::Fail;
  const bool near_lo = e.has_lo() && value < e.lo + margin;
  const bool near_hi = e.has_hi() && value > e.hi - margin;
  if ((near_lo && !e.lo_attained) || (near_hi && !e.hi_attained)) return Verdict::Indeterminate;
  return Verdict::Pass;
}

Real residual(int k, const Real& x_in, const ParamA& a, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  if (k < 0 || k > 3) throw DomainError("residual order must be 0, 1, 2 or 3");
  const Real approx = k == 0 ? approximant(x, a, ctx) : approximant_partial_x(k, x, a, ctx);
  ScopedPrecision guard(ctx);
  return polygamma(k, x + 1, ctx) - approx;
}

Enclosure psi_enclosure(const Real& x_in, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  require_positive_x(x);
  const ParamA a0 = ParamA::threshold(Threshold::A0);
  const ParamA a1 = ParamA::threshold(Threshold::A1);
  const Real lower = approximant(x, a0, ctx);
  const Real upper_a1 = approximant(x, a1, ctx);
  const X0Solution& x0 = solve_x0(ctx);
  ScopedPrecision guard(ctx);
  const Real upper_p3 = lower + x0.F_at_x0;

  Enclosure e;
  e.target = Target::Psi;
  e.lo = lower;
  e.lower_justification = Justification::MT_PSI_GT_L;
  if (upper_a1 <= upper_p3) {
    e.hi = upper_a1;
    e.justification = Justification::MT_PSI_LT_L;
  } else {
    e.hi = upper_p3;
    e.justification = Justification::INEQ_P3;
    e.hi_attained = true;
  }
  return e;
}

Enclosure psi_enclosure_offset(const Real& x_in, const ParamA& a, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  const Regime regime = a.regime(ctx);
  Enclosure e;
  e.target = Target::Psi;
  switch (regime) {
    case Regime::AtLeastA1: {
      if (!(x > -1)) throw DomainError("x must exceed -1");
      const Real L = approximant(x, a, ctx);
      ScopedPrecision guard(ctx);
      e.hi = L;
      if (x > 0) {
        e.lo = L - c0(a, ctx);
        e.justification = Justification::PB_LR1;
      } else {
        e.lo = -infinity();
        e.justification = Justification::MT_PSI_LT_L;
      }
      return e;
    }
    case Regime::BelowA0pp:
    case Regime::A0ppToA0p: {
      require_positive_x(x);
      const Real L = approximant(x, a, ctx);
      ScopedPrecision guard(ctx);
      e.lo = L;
      e.hi = L - c0(a, ctx);
      e.justification = Justification::PB_LR2;
      return e;
    }
    case Regime::A0pToA0: {
      require_positive_x(x);
      e.lo = approximant(x, a, ctx);
      ScopedPrecision guard(ctx);
      e.hi = infinity();
      e.justification = Justification::MT_PSI_GT_L;
      return e;
    }
    case Regime::A0ToA1:
      break;
  }
  uncovered();
}

Enclosure harmonic_enclosure(long n, const ParamA& a, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("n must be positive");
  const Regime regime = a.regime(ctx);
  const bool below_a0 = regime == Regime::BelowA0pp || regime == Regime::A0ppToA0p ||
                        (regime == Regime::A0pToA0 && a.threshold_id() != Threshold::A0 &&
                         a.value(ctx) < threshold_value(Threshold::A0, ctx));
  if (regime != Regime::AtLeastA1 && !below_a0) uncovered();

  const Real L = approximant(Real(n), a, ctx);
  const Real c = c1(a, ctx);
  const Real g = euler_gamma(ctx);
  ScopedPrecision guard(ctx);
  Enclosure e;
  e.target = Target::Harmonic;
  if (regime == Regime::AtLeastA1) {
    e.lo = L + c;
    e.hi = L + g;
    e.lo_attained = n == 1;
    e.justification = Justification::H_NA1;
  } else {
    e.lo = L + g;
    e.hi = L + c;
    e.hi_attained = n == 1;
    e.justification = Justification::H_NA0;
  }
  return e;
}

Enclosure polygamma_bounds(int k, const Real& x_in, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  ScopedPrecision guard(ctx);
  if (x < 0) throw DomainError("x must be non-negative");
  // a0' and a0'' are defined by equality at x = 0.
  const bool at_zero = x == 0;
  const ParamA a1 = ParamA::threshold(Threshold::A1);
  Enclosure e;
  if (k == 1) {
    e.hi_attained = at_zero;
    e.target = Target::Psi1;
    e.lo = approximant_partial_x(1, x, a1, ctx);
    e.hi = approximant_partial_x(1, x, ParamA::threshold(Threshold::A0Prime), ctx);
    e.justification = Justification::COR_PSI1;
  } else if (k == 2) {
    e.target = Target::Psi2;
    e.lo_attained = at_zero;
    e.lo = approximant_partial_x(2, x, ParamA::threshold(Threshold::A0DoublePrime), ctx);
    e.hi = approximant_partial_x(2, x, a1, ctx);
    e.justification = Justification::COR_PSI2;
  } else {
    throw DomainError("polygamma bounds exist for k = 1, 2");
  }
  return e;
}

OneSidedBound halfshift_bound(int k, const Real& x_in, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  if (!(x > Real(-1) / 2)) throw DomainError("x must exceed -1/2");
  ScopedPrecision guard(ctx);
  switch (k) {
    case 1:
      return {formulas::halfshift1(x), Direction::Lower, 1};
    case 2:
      return {formulas::halfshift2(x), Direction::Upper, 2};
    case 3:
      return {formulas::halfshift3(x), Direction::Lower, 3};
    default:
      throw DomainError("half-shift bounds exist for k = 1, 2, 3");
  }
}

Enclosure baseline_bounds(const Real& x_in, Baseline which, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  require_positive_x(x);
  const Real g = euler_gamma(ctx);
  ScopedPrecision guard(ctx);
  Enclosure e;
  e.target = Target::Psi;
  if (which == Baseline::BATIR_1_1A) {
    e.lo = log(x + Real(1) / 2);
    e.hi = log(x + exp(-g));
    e.hi_attained = true;
    e.justification = Justification::BASELINE_1_1A;
  } else {
    e.lo = log(x * x + x + exp(-2 * g)) / 2;
    e.hi = log(x * x + x + Real(1) / 3) / 2;
    e.lo_attained = true;
    e.justification = Justification::BASELINE_1_2A;
  }
  return e;
}

}  // namespace psibound
