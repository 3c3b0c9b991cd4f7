#include "psibound/gammaseq.hpp"

#include <algorithm>
#include <cmath>

#include "psibound/approximant_formulas.hpp"
#include "psibound/oracle.hpp"

namespace psibound {

namespace {

struct TagName {
  SequenceTag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {SequenceTag::SIGMA, "sigma"},       {SequenceTag::THETA, "theta"}, {SequenceTag::TAU, "tau"},
    {SequenceTag::DELTA, "delta"},       {SequenceTag::U, "u"},         {SequenceTag::V, "v"},
    {SequenceTag::ALPHA, "alpha"},       {SequenceTag::DETEMPLE, "detemple"},
    {SequenceTag::TOTH, "toth"},         {SequenceTag::MU, "mu"},       {SequenceTag::CLASSICAL, "classical"},
};

Real expm1(const Real& x) {
  Real r;
  mpfr_expm1(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

// H_{n-1} + 1/(c n) - ln(n + s) for the u/v pair.
Real mortici(const Real& h_prev, long n, const Real& c, const Real& s) {
  return h_prev + 1 / (c * n) - log(Real(n) + s);
}

Real raw_value(const SequenceId& id, long n, const PrecisionContext& ctx) {
  if (id.tag() == SequenceTag::L_OF_A) {
    const Real L = approximant(Real(n), id.param(), ctx);
    ScopedPrecision guard(ctx);
    return harmonic_real(n, ctx) - L;
  }
  ScopedPrecision guard(ctx);
  const Real h = harmonic_real(n, ctx);
  const Real N(n);
  switch (id.tag()) {
    case SequenceTag::SIGMA:
      return h - log(N * N + N + Real(1) / 3) / 2;
    case SequenceTag::THETA:
      return h + log(expm1(Real(2) / (N + 1)) / (2 * N + 2)) / 2;
    case SequenceTag::TAU:
      return h + log(expm1(Real(2) / (N + 1)) / (2 * N * N * N + 4 * N * N + 8 * N / 3 + Real(2) / 3)) / 4;
    case SequenceTag::U:
    case SequenceTag::V:
    case SequenceTag::DELTA: {
      const Real h1 = h - 1 / N;
      const Real s6 = sqrt(Real(6));
      const Real u = mortici(h1, n, 6 - 2 * s6, 1 / s6);
      const Real v = mortici(h1, n, 6 + 2 * s6, -1 / s6);
      if (id.tag() == SequenceTag::U) return u;
      if (id.tag() == SequenceTag::V) return v;
      return (u + v) / 2;
    }
    case SequenceTag::ALPHA: {
      const Real h2 = h - 1 / N - 1 / (N - 1);
      return h2 + Real(23) / (24 * (N - 1)) + 1 / (24 * N) - log(N - Real(1) / 2);
    }
    case SequenceTag::DETEMPLE:
      return h - log(N + Real(1) / 2);
    case SequenceTag::TOTH:
      return h - log(N + Real(1) / 2 + 1 / (24 * N));
    case SequenceTag::MU:
      return h + log(expm1(1 / (N + 1)) / (N + Real(1) / 2)) / 2;
    case SequenceTag::CLASSICAL:
      return h - log(N);
    case SequenceTag::L_OF_A:
      break;
  }
  throw DomainError("unknown sequence");
}

}  // namespace

SequenceId::SequenceId(SequenceTag tag) : tag_(tag) {
  if (tag == SequenceTag::L_OF_A) throw DomainError("l(a) needs a parameter; use SequenceId::l_of");
}

SequenceId SequenceId::l_of(ParamA a) {
  SequenceId id(SequenceTag::SIGMA);
  id.tag_ = SequenceTag::L_OF_A;
  id.a_ = std::move(a);
  return id;
}

SequenceId SequenceId::parse(std::string_view text) {
  if (text.substr(0, 2) == "l:") return l_of(ParamA::parse(text.substr(2)));
  for (const auto& tn : kTagNames) {
    if (text == tn.name) return SequenceId(tn.tag);
  }
  throw DomainError("unknown sequence '" + std::string(text) + "'");
}

const ParamA& SequenceId::param() const {
  if (!a_) throw DomainError("sequence " + name() + " has no parameter");
  return *a_;
}

std::string SequenceId::name() const {
  if (tag_ == SequenceTag::L_OF_A) return "l:" + a_->label();
  for (const auto& tn : kTagNames) {
    if (tn.tag == tag_) return tn.name;
  }
  return "?";
}

long SequenceId::min_n() const {
  switch (tag_) {
    case SequenceTag::ALPHA:
      return 3;
    default:
      return 1;
  }
}

int SequenceId::theoretical_order() const {
  switch (tag_) {
    case SequenceTag::L_OF_A:
      if (a_->is_infinite()) return 4;
      if (a_->threshold_id() == Threshold::A1) return 8;
      return 6;
    case SequenceTag::SIGMA:
    case SequenceTag::THETA:
    case SequenceTag::DELTA:
    case SequenceTag::ALPHA:
      return 4;
    case SequenceTag::TAU:
      return 5;
    case SequenceTag::U:
    case SequenceTag::V:
    case SequenceTag::TOTH:
    case SequenceTag::MU:
      return 3;
    case SequenceTag::DETEMPLE:
      return 2;
    case SequenceTag::CLASSICAL:
      return 1;
  }
  return 0;
}

SequenceSample seq_value(const SequenceId& id, long n, const PrecisionContext& ctx) {
  if (n < id.min_n()) {
    throw DomainError("sequence " + id.name() + " needs n >= " + std::to_string(id.min_n()));
  }
  const Real value = raw_value(id, n, ctx);
  const Real g = euler_gamma(ctx);
  ScopedPrecision guard(ctx);
  SequenceSample s;
  s.n = n;
  s.value = value;
  s.error = value - g;
  s.abs_error = abs(s.error);
  return s;
}

int required_digits(int order, long n_max) {
  return static_cast<int>(std::ceil(6 + order * std::log10(static_cast<double>(std::max(n_max, 1L))))) + 10;
}

ErrorTable error_table(const std::vector<SequenceId>& ids, const std::vector<long>& ns, const PrecisionContext& ctx) {
  long n_max = 1;
  for (long n : ns) n_max = std::max(n_max, n);
  const PrecisionContext work = ctx.with_digits(std::max(ctx.digits(), required_digits(8, n_max)));
  ErrorTable t{ids, ns, {}, work};
  t.cells.reserve(ns.size());
  for (long n : ns) {
    std::vector<SequenceSample> row;
    row.reserve(ids.size());
    for (const auto& id : ids) row.push_back(seq_value(id, n, work));
    t.cells.push_back(std::move(row));
  }
  return t;
}

Real limit_constant(const ParamA& a, const PrecisionContext& ctx) {
  if (a.is_infinite()) throw DomainError("limit constant needs a finite a");
  ScopedPrecision guard(ctx);
  if (a.threshold_id() == Threshold::A1) return Real(0);
  if (a.is_exact()) return to_real(formulas::limit_constant(a.exact()));
  return formulas::limit_constant(a.value(ctx));
}

ScaledLimitResult scaled_limit_check(const ScaledLimit& which, long n, const PrecisionContext& ctx) {
  SequenceId id(SequenceTag::SIGMA);
  ScaledLimitResult r;
  switch (which.kind) {
    case ScaledLimitKind::L6:
      if (!which.a) throw DomainError("L6 needs a parameter");
      id = SequenceId::l_of(*which.a);
      r.power = 6;
      r.target = limit_constant(*which.a, ctx);
      break;
    case ScaledLimitKind::L8_A1: {
      id = SequenceId::l_of(ParamA::threshold(Threshold::A1));
      r.power = 8;
      ScopedPrecision guard(ctx);
      r.target = Real(-2) / 1225;
      break;
    }
    case ScaledLimitKind::SIGMA4:
    case ScaledLimitKind::TAU5: {
      const bool tau = which.kind == ScaledLimitKind::TAU5;
      id = SequenceId(tau ? SequenceTag::TAU : SequenceTag::SIGMA);
      r.power = tau ? 5 : 4;
      ScopedPrecision guard(ctx);
      r.target = Real(-1) / 180;
      break;
    }
  }
  const SequenceSample s = seq_value(id, n, ctx);
  ScopedPrecision guard(ctx);
  if (!(s.abs_error > pow10_neg(ctx.digits() - 10))) throw PrecisionError("increase precision or decrease n");
  r.observed = boost::multiprecision::pow(Real(n), r.power) * s.error;
  return r;
}

OrderEstimate order_estimate(const SequenceId& id, long n, const PrecisionContext& ctx) {
  const SequenceSample e1 = seq_value(id, n, ctx);
  const SequenceSample e2 = seq_value(id, 2 * n, ctx);
  ScopedPrecision guard(ctx);
  const Real floor = pow10_neg(ctx.digits() - 5);
  if (!(e1.abs_error > floor) || !(e2.abs_error > floor)) {
    throw PrecisionError("error not resolvable at this precision: increase precision or decrease n");
  }
  return {n, log(e1.abs_error / e2.abs_error) / log(Real(2))};
}

}  // namespace psibound
