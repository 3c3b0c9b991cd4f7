#include <doctest.h>

#include <limits>

#include "psibound/approximant_formulas.hpp"
#include "psibound/bounds.hpp"
#include "psibound/oracle.hpp"
#include "support.hpp"

using namespace psibound;
using psibound::test::Gen;
using psibound::test::lit;
using psibound::test::show;

namespace {

Enclosure synthetic(double lo, double hi, bool lo_att = false, bool hi_att = false) {
  Enclosure e;
  e.lo = lo;
  e.hi = hi;
  e.lo_attained = lo_att;
  e.hi_attained = hi_att;
  return e;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("containment verdicts") {
  ScopedPrecision guard(PrecisionContext(30));
  const Real eps = pow10_neg(20);
  CHECK(containment(synthetic(0, 1), Real(0.5), eps) == Verdict::Pass);
  CHECK(containment(synthetic(0, 1), Real(2), eps) == Verdict::Fail);
  CHECK(containment(synthetic(0, 1), Real(-1), eps) == Verdict::Fail);
  CHECK(containment(synthetic(0, 1), Real(1) + eps, eps) == Verdict::Indeterminate);
  CHECK(containment(synthetic(0, 1), Real(0), eps) == Verdict::Indeterminate);
  CHECK(containment(synthetic(0, 1, true), Real(0), eps) == Verdict::Pass);
  CHECK(containment(synthetic(0, 1, false, true), Real(1) - eps, eps) == Verdict::Pass);
  Enclosure open_below = synthetic(0, 1);
  open_below.lo = -std::numeric_limits<double>::infinity();
  CHECK_FALSE(open_below.has_lo());
  CHECK(containment(open_below, Real(-1e30), eps) == Verdict::Pass);
  CHECK(isinf(open_below.width()));
}

TEST_CASE("psi enclosure contains the oracle") {
  const PrecisionContext ctx(40);
  Gen gen(101);
  const Real eps = oracle_epsilon(ctx);
  int p3 = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Real x = gen.log_uniform(1e-3, 1e3, ctx);
    const Enclosure e = psi_enclosure(x, ctx);
    INFO("x=" << show(x));
    CHECK(containment(e, polygamma(0, x + 1, ctx), eps) == Verdict::Pass);
    CHECK(e.lower_justification == Justification::MT_PSI_GT_L);
    CHECK(e.hi <= approximant(x, ParamA::threshold(Threshold::A1), ctx));
    p3 += e.justification == Justification::INEQ_P3 ? 1 : 0;
  }
  // The constant-offset upper bound wins only near x0.
  CHECK(p3 > 0);
  CHECK(p3 < 300);
}

TEST_CASE("psi enclosure is tighter than the cited baseline") {
  const PrecisionContext ctx(30);
  const Enclosure mine = psi_enclosure(Real(5), ctx);
  const Enclosure he = baseline_bounds(Real(5), Baseline::HE_1_2A, ctx);
  CHECK(mine.width() < he.width());
}

TEST_CASE("offset form per regime") {
  const PrecisionContext ctx(40);
  const Real eps = oracle_epsilon(ctx);
  const Real x = lit("1", ctx);
  const Real psi2 = polygamma(0, x + 1, ctx);

  const Enclosure above = psi_enclosure_offset(x, ParamA::parse("4/5"), ctx);
  CHECK(above.justification == Justification::PB_LR1);
  CHECK(containment(above, psi2, eps) == Verdict::Pass);

  const Enclosure below = psi_enclosure_offset(x, ParamA::parse("1/3"), ctx);
  CHECK(below.justification == Justification::PB_LR2);
  CHECK(containment(below, psi2, eps) == Verdict::Pass);

  const Enclosure lower_only = psi_enclosure_offset(x, ParamA::parse("0.49"), ctx);
  CHECK_FALSE(lower_only.has_hi());
  CHECK(lower_only.justification == Justification::MT_PSI_GT_L);
  CHECK(containment(lower_only, psi2, eps) == Verdict::Pass);

  CHECK_THROWS_AS(psi_enclosure_offset(x, ParamA::parse("0.6"), ctx), DomainError);

  // a >= a1 on (-1, 0]: upper bound only.
  const Real xn = lit("-0.7", ctx);
  const Enclosure neg = psi_enclosure_offset(xn, ParamA::parse("a1"), ctx);
  CHECK_FALSE(neg.has_lo());
  CHECK(neg.justification == Justification::MT_PSI_LT_L);
  CHECK(containment(neg, polygamma(0, xn + 1, ctx), eps) == Verdict::Pass);
}

TEST_CASE("offset bounds nest as a grows past a1") {
  // For a1 <= a < a', L(x,a) <= L(x,a') and L(x,a) - c0(a) >= L(x,a') - c0(a').
  const PrecisionContext ctx(30);
  Gen gen(19);
  for (int trial = 0; trial < 40; ++trial) {
    const Real x = gen.log_uniform(1e-2, 1e2, ctx);
    const BigRational a = gen.rational_in(BigRational(8, 10), BigRational(3), 100);
    const Enclosure e1 = psi_enclosure_offset(x, ParamA::rational(a), ctx);
    const Enclosure e2 = psi_enclosure_offset(x, ParamA::rational(a + BigRational(1, 4)), ctx);
    CHECK(e1.hi <= e2.hi);
    CHECK(e1.lo >= e2.lo);
  }
}

TEST_CASE("harmonic enclosures") {
  const PrecisionContext ctx(40);
  const Real eps = oracle_epsilon(ctx);
  for (const char* a : {"a1", "1", "inf", "1/2", "1/3"}) {
    for (long n : {1L, 2L, 7L, 100L, 5000L}) {
      const Enclosure e = harmonic_enclosure(n, ParamA::parse(a), ctx);
      INFO("a=" << a << " n=" << n);
      CHECK(containment(e, harmonic_real(n, ctx), eps) == Verdict::Pass);
    }
  }
  const Enclosure e1 = harmonic_enclosure(1, ParamA::parse("a1"), ctx);
  CHECK(e1.justification == Justification::H_NA1);
  CHECK(e1.lo_attained);
  const Enclosure e0 = harmonic_enclosure(1, ParamA::parse("1/2"), ctx);
  CHECK(e0.justification == Justification::H_NA0);
  CHECK(e0.hi_attained);
  CHECK_THROWS_AS(harmonic_enclosure(0, ParamA::parse("a1"), ctx), DomainError);
  CHECK_THROWS_AS(harmonic_enclosure(3, ParamA::parse("0.6"), ctx), DomainError);
}

TEST_CASE("polygamma bounds") {
  const PrecisionContext ctx(40);
  const Real eps = oracle_epsilon(ctx);
  Gen gen(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Real x = gen.log_uniform(1e-3, 1e3, ctx);
    for (int k = 1; k <= 2; ++k) {
      INFO("x=" << show(x) << " k=" << k);
      CHECK(containment(polygamma_bounds(k, x, ctx), polygamma(k, x + 1, ctx), eps) == Verdict::Pass);
    }
  }
  const Enclosure at1 = polygamma_bounds(1, Real(1), ctx);
  {
    const Real p = pi(ctx);
    ScopedPrecision guard(ctx);
    CHECK(containment(at1, p * p / 6 - 1, eps) == Verdict::Pass);
  }
  const Enclosure z1 = polygamma_bounds(1, Real(0), ctx);
  CHECK(z1.hi_attained);
  CHECK(containment(z1, polygamma(1, Real(1), ctx), eps) == Verdict::Pass);
  const Enclosure z2 = polygamma_bounds(2, Real(0), ctx);
  CHECK(z2.lo_attained);
  CHECK(containment(z2, polygamma(2, Real(1), ctx), eps) == Verdict::Pass);
  CHECK_THROWS_AS(polygamma_bounds(3, Real(1), ctx), DomainError);
  CHECK_THROWS_AS(polygamma_bounds(1, Real(-1), ctx), DomainError);
}

TEST_CASE("half-shift bounds") {
  const PrecisionContext ctx(40);
  CHECK(formulas::halfshift1(BigRational(1, 2)) == BigRational(115, 72));
  const BigRational n3 = BigRational(6585600 + 15052800 + 11696160 + 1820960 - 701703);
  CHECK(formulas::halfshift3(BigRational(1)) == BigRational(160, 3) * n3 / (BigRational(1107) * 1107 * 1107));
  Gen gen(6);
  for (int trial = 0; trial < 60; ++trial) {
    const Real x = gen.uniform(-0.45, 40, ctx);
    for (int k = 1; k <= 3; ++k) {
      const OneSidedBound b = halfshift_bound(k, x, ctx);
      const Real psi = polygamma(k, x + Real(1) / 2, ctx);
      INFO("x=" << show(x) << " k=" << k);
      CHECK(b.order == k);
      if (b.direction == Direction::Lower) {
        CHECK(b.value < psi);
      } else {
        CHECK(b.value > psi);
      }
    }
  }
  CHECK(halfshift_bound(2, Real(1), ctx).direction == Direction::Upper);
  CHECK_THROWS_AS(halfshift_bound(1, lit("-0.5", ctx), ctx), DomainError);
  CHECK_THROWS_AS(halfshift_bound(4, Real(1), ctx), DomainError);
}

TEST_CASE("baselines") {
  const PrecisionContext ctx(40);
  const Real eps = oracle_epsilon(ctx);
  const Real g = euler_gamma(ctx);
  const Enclosure batir = baseline_bounds(Real(1), Baseline::BATIR_1_1A, ctx);
  const Enclosure he = baseline_bounds(Real(1), Baseline::HE_1_2A, ctx);
  ScopedPrecision guard(ctx);
  CHECK(abs(batir.lo - log(Real(3) / 2)) < pow10_neg(39));
  CHECK(abs(batir.hi - log(1 + exp(-g))) < pow10_neg(39));
  CHECK(abs(he.lo - log(2 + exp(-2 * g)) / 2) < pow10_neg(39));
  CHECK(abs(he.hi - log(Real(7) / 3) / 2) < pow10_neg(39));
  CHECK(containment(batir, 1 - g, eps) == Verdict::Pass);
  CHECK(containment(he, 1 - g, eps) == Verdict::Pass);
  CHECK_THROWS_AS(baseline_bounds(Real(0), Baseline::HE_1_2A, ctx), DomainError);
}

TEST_CASE("residual sign patterns") {
  const PrecisionContext ctx(40);
  const ParamA a1 = ParamA::threshold(Threshold::A1);
  const ParamA a0 = ParamA::threshold(Threshold::A0);
  for (int i = 0; i < 40; ++i) {
    ScopedPrecision guard(ctx);
    const Real x = -Real(9) / 10 + Real(i) * Real(1009) / 400;  // (-0.9, 100)
    INFO("x=" << show(x));
    CHECK(residual(0, x, a1, ctx) < 0);
    CHECK(residual(1, x, a1, ctx) > 0);
    CHECK(residual(2, x, a1, ctx) < 0);
    CHECK(residual(3, x, a1, ctx) > 0);
    if (x > 0) {
      CHECK(residual(0, x, a0, ctx) > 0);
      CHECK(residual(1, x, ParamA::threshold(Threshold::A0Prime), ctx) < 0);
      CHECK(residual(2, x, ParamA::threshold(Threshold::A0DoublePrime), ctx) > 0);
    }
  }
  CHECK_THROWS_AS(residual(4, Real(1), a1, ctx), DomainError);
}

}  // TEST_SUITE
