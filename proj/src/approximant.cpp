#include "psibound/approximant.hpp"

#include <map>
#include <mutex>

#include "psibound/approximant_formulas.hpp"
#include "psibound/oracle.hpp"

namespace psibound {

namespace {

using ContextKey = std::pair<int, int>;
ContextKey key_of(const PrecisionContext& ctx) { return {ctx.digits(), ctx.guard_digits()}; }

const BigRational kOneFifteenth(1, 15);
const BigRational kFourFifteenths(4, 15);

formulas::Shape<Real> real_shape(const ParamA& a, const PrecisionContext& ctx) {
  if (a.is_exact()) {
    const auto s = formulas::shape(a.exact());
    return {to_real(s.w1), to_real(s.w2), to_real(s.c1), to_real(s.c2)};
  }
  return formulas::shape(a.value(ctx));
}

// a > bound, decided exactly where possible.
bool exceeds(const ParamA& a, const BigRational& bound, const PrecisionContext& ctx) {
  if (a.is_infinite()) return true;
  if (a.is_exact()) return a.exact() > bound;
  if (a.threshold_id()) return true;  // every threshold exceeds 4/15
  return a.value(ctx) > to_real(bound);
}

void check_domain(const Real& x, const ParamA& a, const PrecisionContext& ctx) {
  if (!(x > -1)) throw DomainError("outside (x,a) domain: x must exceed -1");
  if (x < 0 && !exceeds(a, kFourFifteenths, ctx)) {
    throw DomainError("outside (x,a) domain: x < 0 needs a > 4/15");
  }
  if (!exceeds(a, kOneFifteenth, ctx)) throw DomainError("outside (x,a) domain: a must exceed 1/15");
}

Real checked_quadratic(const Real& x, const Real& c, const char* label) {
  const Real g = x * x + x + c;
  if (!(g > 0)) throw DomainError(std::string("non-positive logarithm argument ") + label);
  return g;
}

constexpr const char* kG1 = "x^2+x+(3a+1)/3";
constexpr const char* kG2 = "x^2+x+(15a-1)/(45a)";

Real solve_tolerance(const PrecisionContext& ctx) { return pow10_neg(ctx.working_digits() - 2); }

ThresholdSet compute_thresholds(const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  ThresholdSet t;
  const Real s205 = sqrt(Real(205));
  t.a1 = (40 + 3 * s205) / 105;
  t.a2 = (40 - 3 * s205) / 105;
  const Real p = pi(ctx);
  const Real p2 = p * p;
  t.a0_prime = (45 - 4 * p2 + 3 * sqrt(4 * p2 * p2 - 80 * p2 + 405)) / (30 * (p2 - 9));

  const Real g = euler_gamma(ctx);
  auto f_a0 = [&](const Real& a) {
    const auto s = formulas::shape(a);
    return -g - (s.w1 * log(s.c1) + s.w2 * log(s.c2));
  };
  t.a0 = solve_bracketed(f_a0, BigRational(1, 2), BigRational(3, 5), solve_tolerance(ctx));

  const Real psi2_at_1 = polygamma(2, Real(1), ctx);
  auto f_a0pp = [&](const Real& a) { return psi2_at_1 - formulas::partial_x(2, Real(0), a); };
  t.a0_double_prime = solve_bracketed(f_a0pp, BigRational(1, 3), BigRational(1, 2), solve_tolerance(ctx));
  return t;
}

X0Solution compute_x0(const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  const Real a0 = thresholds(ctx).a0.value;
  auto f = [&](const Real& x) { return polygamma(1, x + 1, ctx) - formulas::partial_x(1, x, a0); };
  X0Solution out;
  out.x0 = solve_bracketed(f, BigRational(0), BigRational(1, 5), solve_tolerance(ctx));
  const Real& x0 = out.x0.value;
  const auto s = formulas::shape(a0);
  const Real L = s.w1 * log(x0 * x0 + x0 + s.c1) + s.w2 * log(x0 * x0 + x0 + s.c2);
  out.F_at_x0 = polygamma(0, x0 + 1, ctx) - L;
  return out;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::BelowA0pp:
      return "(1/15, a0'')";
    case Regime::A0ppToA0p:
      return "[a0'', a0']";
    case Regime::A0pToA0:
      return "(a0', a0]";
    case Regime::A0ToA1:
      return "(a0, a1)";
    case Regime::AtLeastA1:
      return "[a1, inf]";
  }
  return "?";
}

ParamA ParamA::rational(BigRational a) {
  if (!(a > kOneFifteenth)) throw DomainError("a must exceed 1/15, got " + to_string(a));
  ParamA p(Kind::Rational, to_string(a));
  p.q_ = std::move(a);
  return p;
}

ParamA ParamA::threshold(Threshold t) {
  static const char* names[] = {"a1", "a0", "a0p", "a0pp"};
  ParamA p(Kind::Threshold, names[static_cast<int>(t)]);
  p.t_ = t;
  return p;
}

ParamA ParamA::real(Real a, std::string label) {
  if (!(a > Real(1) / 15)) throw DomainError("a must exceed 1/15, got " + label);
  ParamA p(Kind::Real, std::move(label));
  p.r_ = std::move(a);
  return p;
}

ParamA ParamA::infinity() { return ParamA(Kind::Infinity, "inf"); }

ParamA ParamA::parse(std::string_view text) {
  if (text == "a1") return threshold(Threshold::A1);
  if (text == "a0") return threshold(Threshold::A0);
  if (text == "a0p") return threshold(Threshold::A0Prime);
  if (text == "a0pp") return threshold(Threshold::A0DoublePrime);
  if (text == "inf") return infinity();
  ParamA p = rational(parse_rational(text));
  p.label_ = std::string(text);
  return p;
}

const BigRational& ParamA::exact() const {
  if (kind_ != Kind::Rational) throw DomainError("parameter " + label_ + " is not an exact rational");
  return q_;
}

std::optional<Threshold> ParamA::threshold_id() const {
  if (kind_ == Kind::Threshold) return t_;
  return std::nullopt;
}

Real ParamA::value(const PrecisionContext& ctx) const {
  switch (kind_) {
    case Kind::Rational: {
      ScopedPrecision guard(ctx);
      return to_real(q_);
    }
    case Kind::Threshold:
      return threshold_value(t_, ctx);
    case Kind::Real:
      return *r_;
    case Kind::Infinity:
      break;
  }
  throw DomainError("a = inf has no finite value");
}

Regime ParamA::regime(const PrecisionContext& ctx) const {
  if (kind_ == Kind::Infinity) return Regime::AtLeastA1;
  if (kind_ == Kind::Threshold) {
    switch (t_) {
      case Threshold::A1:
        return Regime::AtLeastA1;
      case Threshold::A0:
        return Regime::A0pToA0;
      case Threshold::A0Prime:
      case Threshold::A0DoublePrime:
        return Regime::A0ppToA0p;
    }
  }
  const ThresholdSet& t = thresholds(ctx);
  ScopedPrecision guard(ctx);
  const Real a = value(ctx);
  if (a >= t.a1) return Regime::AtLeastA1;
  if (a > t.a0.value) return Regime::A0ToA1;
  if (a > t.a0_prime) return Regime::A0pToA0;
  if (a >= t.a0_double_prime.value) return Regime::A0ppToA0p;
  return Regime::BelowA0pp;
}

Real approximant(const Real& x_in, const ParamA& a, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  check_domain(x, a, ctx);
  ScopedPrecision guard(ctx);
  if (a.is_infinite()) return log(checked_quadratic(x, Real(1) / 3, "x^2+x+1/3")) / 2;
  const auto s = real_shape(a, ctx);
  return s.w1 * log(checked_quadratic(x, s.c1, kG1)) + s.w2 * log(checked_quadratic(x, s.c2, kG2));
}

Real approximant_partial_x(int k, const Real& x_in, const ParamA& a, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  if (k < 1 || k > 3) throw DomainError("partial order must be 1, 2 or 3");
  check_domain(x, a, ctx);
  ScopedPrecision guard(ctx);
  if (a.is_infinite()) {
    checked_quadratic(x, Real(1) / 3, "x^2+x+1/3");
    return formulas::partial_x_limit(k, x);
  }
  const auto s = real_shape(a, ctx);
  checked_quadratic(x, s.c1, kG1);
  checked_quadratic(x, s.c2, kG2);
  return s.w1 * formulas::log_quadratic_partial(k, x, s.c1) + s.w2 * formulas::log_quadratic_partial(k, x, s.c2);
}

Real approximant_partial_a(const Real& x_in, const ParamA& a, const PrecisionContext& ctx) {
  const Real x = at_precision(x_in, ctx);
  if (a.is_infinite()) throw DomainError("dL/da needs a finite a");
  check_domain(x, a, ctx);
  ScopedPrecision guard(ctx);
  const auto s = real_shape(a, ctx);
  const Real g1 = checked_quadratic(x, s.c1, kG1);
  const Real g2 = checked_quadratic(x, s.c2, kG2);
  const Real av = a.value(ctx);
  return formulas::partial_a_log_weight(av) * (log(g2) - log(g1)) + s.w1 * (1 / g1 + 1 / g2);
}

const ThresholdSet& thresholds(const PrecisionContext& ctx) {
  static std::mutex mutex;
  static std::map<ContextKey, ThresholdSet> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key_of(ctx));
  if (it == cache.end()) it = cache.emplace(key_of(ctx), compute_thresholds(ctx)).first;
  return it->second;
}

Real threshold_value(Threshold t, const PrecisionContext& ctx) {
  const ThresholdSet& s = thresholds(ctx);
  switch (t) {
    case Threshold::A1:
      return s.a1;
    case Threshold::A0:
      return s.a0.value;
    case Threshold::A0Prime:
      return s.a0_prime;
    case Threshold::A0DoublePrime:
      return s.a0_double_prime.value;
  }
  return s.a1;
}

Real c0(const ParamA& a, const PrecisionContext& ctx) {
  if (a.is_infinite()) {
    ScopedPrecision guard(ctx);
    return euler_gamma(ctx) - log(Real(3)) / 2;
  }
  const Real L0 = approximant(Real(0), a, ctx);
  ScopedPrecision guard(ctx);
  return L0 + euler_gamma(ctx);
}

Real c1(const ParamA& a, const PrecisionContext& ctx) {
  const Real L1 = approximant(Real(1), a, ctx);
  ScopedPrecision guard(ctx);
  return 1 - L1;
}

const X0Solution& solve_x0(const PrecisionContext& ctx) {
  static std::mutex mutex;
  static std::map<ContextKey, X0Solution> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key_of(ctx));
  if (it == cache.end()) it = cache.emplace(key_of(ctx), compute_x0(ctx)).first;
  return it->second;
}

}  // namespace psibound
