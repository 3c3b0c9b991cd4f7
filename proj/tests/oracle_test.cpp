#include <doctest.h>

#include "psibound/oracle.hpp"
#include "support.hpp"

using namespace psibound;
using psibound::test::Gen;
using psibound::test::lit;
using psibound::test::show;

namespace {

// Reference values from an independent arbitrary-precision implementation,
// frozen to 50+ digits.
struct PsiRow {
  const char* x;
  const char* psi[4];
};

const PsiRow kPsi[] = {
    {"0.001",
     {"-1000.575571931810300471472614469649228500126746905912225", "1000001.642533195868978032977502912370468218500011319995",
      "-2000000002.397632289733330585513499177515238209966787155", "6000000000006.469114055935714125745190779320578484711884"}},
    {"0.37",
     {"-2.795301410890563961627704734919725533204001599830488931", "8.360473827799097908738286294283585758041605739004338341",
      "-40.53032699757738572990973284681414937745236891193818562", "322.1165783174321098084814285936103956885693353846580311"}},
    {"2.5",
     {"0.7031566406452431872256903336679110994735070620062325596", "0.4903577561002348649728010554936311232124052591759508688",
      "-0.2362040516417274030037416685677072781172155001743917525", "0.2239058488172520512551475035199260645424004875002365063"}},
    {"17",
     {"2.80351332832746036838671690314659079795106965728906963", "0.06058753340323936178171077231192722541735639598358958482",
      "-0.003669728873958962154186529784226526244032953989290052068",
      "0.0004444085253892188298988185704989867792821086144921532696"}},
    {"123.456",
     {"4.811829323828985387322187623899528138817422841278776299", "0.008132945834278198010144325822868599163490277096799168633",
      "-0.00006614444336394040957646670422852203013797920383219338224",
      "0.000001075886490131746830317813509481900874215484107936498594"}},
};

constexpr const char* kGamma = "0.57721566490153286060651209008240243104215933593992359880576723488";
constexpr const char* kZeta3 = "1.2020569031595942853997381615114499907649862923404988817922715553";

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("frozen polygamma values") {
  const PrecisionContext ctx(50);
  for (const auto& row : kPsi) {
    for (int k = 0; k < 4; ++k) {
      const Real got = polygamma(k, lit(row.x, ctx), ctx);
      const Real want = lit(row.psi[k], ctx);
      ScopedPrecision guard(ctx);
      INFO("x=" << row.x << " k=" << k << " got " << show(got));
      CHECK(abs(got - want) <= pow10_neg(48) * (abs(want) > 1 ? abs(want) : Real(1)));
    }
  }
}

TEST_CASE("closed forms at 1 and 1/2") {
  const PrecisionContext ctx(60);
  const Real g = euler_gamma(ctx);
  const Real p = pi(ctx);
  ScopedPrecision guard(ctx);
  const Real tol = pow10_neg(58);
  CHECK(abs(g - parse_real(kGamma)) < tol);
  CHECK(abs(polygamma(0, Real(1), ctx) + g) < tol);
  CHECK(abs(polygamma(1, Real(1), ctx) - p * p / 6) < tol);
  CHECK(abs(polygamma(2, Real(1), ctx) + 2 * parse_real(kZeta3)) < tol);
  CHECK(abs(zeta3(ctx) - parse_real(kZeta3)) < tol);
  CHECK(abs(polygamma(0, Real(1) / 2, ctx) + g + 2 * log(Real(2))) < tol);
  CHECK(abs(polygamma(1, Real(1) / 2, ctx) - p * p / 2) < tol);
  CHECK(abs(polygamma(2, Real(1) / 2, ctx) + 14 * parse_real(kZeta3)) < tol);
  CHECK(abs(polygamma(3, Real(1), ctx) - p * p * p * p / 15) < tol);
}

TEST_CASE("recurrence on random grids") {
  const PrecisionContext ctx(40);
  Gen gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Real x = gen.log_uniform(1e-3, 1e3, ctx);
    const int k = static_cast<int>(gen.integer(0, 3));
    const Real lhs = polygamma(k, x + 1, ctx) - polygamma(k, x, ctx);
    ScopedPrecision guard(ctx);
    Real fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    const Real rhs = (k % 2 == 0 ? 1 : -1) * fact / pow(x, k + 1);
    INFO("x=" << show(x) << " k=" << k);
    CHECK(abs(lhs - rhs) < pow10_neg(38) * (1 + abs(rhs)));
  }
}

TEST_CASE("agreement across precisions") {
  const PrecisionContext lo(30), hi(70);
  for (const char* x : {"0.05", "1.75", "40"}) {
    for (int k = 0; k < 4; ++k) {
      const Real a = polygamma(k, lit(x, lo), lo);
      const Real b = polygamma(k, lit(x, hi), hi);
      ScopedPrecision guard(hi);
      CHECK(abs(a - b) < pow10_neg(29) * (1 + abs(b)));
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == BigRational(25, 12));
  BigRational h = 0;
  for (long i = 1; i <= 300; ++i) h += BigRational(1, i);
  CHECK(harmonic(300) == h);
  CHECK_THROWS_AS(harmonic(0), DomainError);
  const PrecisionContext ctx(50);
  const Real h100 = harmonic_real(100, ctx);
  ScopedPrecision guard(ctx);
  CHECK(abs(h100 - parse_real("5.187377517639620260805117675658253157908972126708451653")) < pow10_neg(49));
  CHECK(abs(h100 - to_real(harmonic(100))) < pow10_neg(55));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == BigRational(-691, 2730));
  CHECK(bernoulli(20) == BigRational(-174611, 330));
  CHECK_THROWS_AS(bernoulli(-2), DomainError);
}

TEST_CASE("asymptotic series alone at large argument") {
  const PrecisionContext ctx(40);
  const OracleConfig cfg = default_oracle_config(ctx);
  for (int k = 0; k < 4; ++k) {
    const Real a = polygamma_asymptotic(k, Real(200), ctx, cfg);
    const Real b = polygamma(k, Real(200), ctx);
    ScopedPrecision guard(ctx);
    CHECK(abs(a - b) < pow10_neg(39) * (1 + abs(b)));
  }
}

TEST_CASE("threshold grows with precision") {
  CHECK(default_oracle_config(PrecisionContext(50)).shift_threshold >= 30);
  CHECK(default_oracle_config(PrecisionContext(300)).shift_threshold >
        default_oracle_config(PrecisionContext(50)).shift_threshold);
}

TEST_CASE("oracle errors") {
  const PrecisionContext ctx(30);
  CHECK_THROWS_AS(polygamma(0, Real(0), ctx), DomainError);
  CHECK_THROWS_AS(polygamma(1, Real(-2), ctx), DomainError);
  CHECK_THROWS_AS(polygamma(4, Real(1), ctx), DomainError);
  CHECK_THROWS_AS(polygamma(0, Real(1), ctx, OracleConfig{5.0, 0}), DomainError);
  // Too few series terms for the requested accuracy.
  CHECK_THROWS_AS(polygamma(0, Real(1), ctx, OracleConfig{30.0, 2}), PrecisionError);
  CHECK(oracle_epsilon(ctx) == ctx.epsilon());
}

}  // TEST_SUITE
