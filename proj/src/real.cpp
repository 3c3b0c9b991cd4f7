#include "psibound/real.hpp"

#include <cmath>
#include <sstream>

namespace psibound {

PrecisionContext::PrecisionContext(int digits, int guard_digits)
    : digits_(digits), guard_digits_(guard_digits) {
  if (digits < kMinDigits) {
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
  }
  if (guard_digits < 0) {
    throw DomainError("guard digits must be non-negative");
  }
}

Real PrecisionContext::epsilon() const {
  ScopedPrecision guard(*this);
  return pow10_neg(digits_);
}

ScopedPrecision::ScopedPrecision(const PrecisionContext& ctx) : saved_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(ctx.working_digits()));
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_); }

Real at_precision(const Real& v, const PrecisionContext& ctx) {
  Real r;
  r.precision(static_cast<unsigned>(ctx.working_digits()));
  mpfr_set(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Indeterminate:
      return "INDETERMINATE";
  }
  return "?";
}

Verdict decide_less(const Real& lhs, const Real& rhs, const Real& eps) {
  const Real gap = rhs - lhs;
  const Real margin = 2 * eps;
  if (gap > margin) return Verdict::Pass;
  if (gap < -margin) return Verdict::Fail;
  return Verdict::Indeterminate;
}

Verdict decide_positive(const Real& value, const Real& eps) { return decide_less(Real(0), value, eps); }

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Indeterminate || b == Verdict::Indeterminate) return Verdict::Indeterminate;
  return Verdict::Pass;
}

Real parse_real(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  try {
    return Real(std::string(text));
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
}

std::string format_sig(const Real& value, int sig) {
  if (sig < 1) sig = 1;
  if (value == 0) return "0";
  if (boost::multiprecision::isinf(value)) return value < 0 ? "-inf" : "inf";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", sig - 1, value.backend().data());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string format_full(const Real& value, const PrecisionContext& ctx) {
  return format_sig(value, ctx.digits());
}

Real pow10_neg(int k) { return boost::multiprecision::pow(Real(10), -k); }

}  // namespace psibound
