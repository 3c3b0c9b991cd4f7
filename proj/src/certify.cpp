#include "psibound/certify.hpp"

#include <chrono>

namespace psibound {

namespace {

BigRational R(long p, long q = 1) { return BigRational(p, q); }

Claim sign_claim(std::string name, std::string source, std::string poly, Assertion a, Bound lo, Bound hi,
                 int derivative = 0, bool hi_closed = false) {
  Claim c;
  c.name = std::move(name);
  c.source = std::move(source);
  c.assertion = a;
  c.poly.name = std::move(poly);
  c.poly.derivative = derivative;
  c.lo = std::move(lo);
  c.hi = std::move(hi);
  c.hi_closed = hi_closed;
  return c;
}

Claim exact_claim(std::string name, std::string source, PolySource poly, BigRational point, BigRational value) {
  Claim c;
  c.name = std::move(name);
  c.source = std::move(source);
  c.assertion = Assertion::ExactValue;
  c.poly = std::move(poly);
  c.point = std::move(point);
  c.value = std::move(value);
  return c;
}

PolySource named(std::string name) {
  PolySource s;
  s.name = std::move(name);
  return s;
}

PolySource q_at(BigRational a, std::optional<BigRational> minus_at = std::nullopt) {
  PolySource s;
  s.kind = PolySource::Kind::QAtRational;
  s.a = std::move(a);
  s.minus_value_at = std::move(minus_at);
  return s;
}

Claim coeff_claim(std::string name, std::vector<std::string> polys) {
  Claim c;
  c.name = std::move(name);
  c.source = "partials_in_a";
  c.assertion = Assertion::AllCoeffsPositive;
  c.coefficient_polys = std::move(polys);
  c.lo = R(1, 15);
  return c;
}

std::vector<Claim> make_registry() {
  using A = Assertion;
  const Bound inf = Bound::plus_infinity();
  const Bound minf = Bound::minus_infinity();
  std::vector<Claim> v;

  v.push_back(coeff_claim("mixed_P_coeffs_positive",
                          {"mixed_P_x0", "mixed_P_x1", "mixed_P_x2", "mixed_P_x3", "mixed_P_x4"}));
  v.push_back(coeff_claim("mixed_Q_coeffs_positive", {"mixed_Q_x0", "mixed_Q_x1", "mixed_Q_x2", "mixed_Q_x3",
                                                       "mixed_Q_x4", "mixed_Q_x5", "mixed_Q_x6"}));

  Claim identity;
  identity.name = "q_at_a1_is_constant";
  identity.source = "MT_F_a1";
  identity.assertion = A::IdentityConstant;
  identity.coefficient_polys = {"q_coeff2_num", "q_coeff0_num"};
  identity.value = R(-144, 1225);
  v.push_back(identity);
  v.push_back(sign_claim("w8_positive_on_0_inf", "MT_F_a1", "w8", A::Positive, 0, inf));
  v.push_back(sign_claim("w2_positive_on_R", "MT_F_a1", "w2", A::Positive, minf, inf));
  v.push_back(sign_claim("w3_positive_on_0_1/8", "MT_F_a1", "w3", A::Positive, 0, R(1, 8)));
  v.push_back(sign_claim("w3_lower_positive_on_R", "MT_F_a1", "w3_lower", A::Positive, minf, inf));

  v.push_back(exact_claim("q_48/100_at_1/20", "MT_F_a0p", q_at(R(48, 100)), R(1, 20), R(2341501, 1312200000)));
  {
    Claim c;
    c.name = "q_48/100_above_value_at_1/20";
    c.source = "MT_F_a0p";
    c.assertion = A::Positive;
    c.poly = q_at(R(48, 100), R(1, 20));
    c.lo = R(1, 20);
    v.push_back(c);
  }
  v.push_back(sign_claim("P_a0p_derivative_positive_on_0_1/20", "MT_F_a0p", "P_a0p", A::Positive, 0, R(1, 20), 1,
                         true));
  v.push_back(exact_claim("P_a0p_at_1/20", "MT_F_a0p", named("P_a0p"), R(1, 20),
                          BigRational(BigInt("-2874530403954909124821"), BigInt("1024000000000"))));
  v.push_back(sign_claim("P_a0p_negative_on_0_1/20", "MT_F_a0p", "P_a0p", A::Negative, 0, R(1, 20), 0, true));
  v.push_back(sign_claim("Q_a0p_positive_on_0_1/20", "MT_F_a0p", "Q_a0p", A::Positive, 0, R(1, 20), 0, true));

  v.push_back(sign_claim("r_a0pp_derivative_positive_on_0_inf", "MT_F_a0pp", "r_a0pp", A::Positive, 0, inf, 1));
  v.push_back(exact_claim("r_a0pp_at_3/50", "MT_F_a0pp", named("r_a0pp"), R(3, 50),
                          BigRational(BigInt("1114560148894087067992508"), BigInt("3814697265625"))));
  v.push_back(sign_claim("r_a0pp_positive_on_3/50_inf", "MT_F_a0pp", "r_a0pp", A::Positive, R(3, 50), inf));
  v.push_back(sign_claim("s_a0pp_positive_on_3/50_inf", "MT_F_a0pp", "s_a0pp", A::Positive, R(3, 50), inf));
  v.push_back(
      sign_claim("R_a0pp_second_derivative_positive_on_0_inf", "MT_F_a0pp", "R_a0pp", A::Positive, 0, inf, 2));
  v.push_back(exact_claim("R_a0pp_at_0", "MT_F_a0pp", named("R_a0pp"), 0, BigRational(BigInt("-4420688040144642816"))));
  // The printed denominator carries three extra zeros; this is the exact value.
  v.push_back(exact_claim(
      "R_a0pp_at_3/50", "MT_F_a0pp", named("R_a0pp"), R(3, 50),
      BigRational(BigInt("-337711343455989855048292675691209992531618111"), BigInt("190734863281250000000000000"))));
  v.push_back(sign_claim("R_a0pp_negative_on_0_3/50", "MT_F_a0pp", "R_a0pp", A::Negative, 0, R(3, 50), 0, true));
  v.push_back(sign_claim("S_a0pp_positive_on_0_3/50", "MT_F_a0pp", "S_a0pp", A::Positive, 0, R(3, 50), 0, true));

  v.push_back(sign_claim("v_a0_second_derivative_positive_on_0_inf", "MT_Psi>L", "v_a0", A::Positive, 0, inf, 2));
  v.push_back(exact_claim("v_a0_at_0", "MT_Psi>L", named("v_a0"), 0, R(-192808962)));
  v.push_back(exact_claim("v_a0_at_1/5", "MT_Psi>L", named("v_a0"), R(1, 5),
                          BigRational(BigInt("-245738739045744"), BigInt("1953125"))));
  v.push_back(sign_claim("v_a0_negative_on_0_1/5", "MT_Psi>L", "v_a0", A::Negative, 0, R(1, 5)));
  v.push_back(sign_claim("u_a0_positive_on_0_1/5", "MT_Psi>L", "u_a0", A::Positive, 0, R(1, 5)));
  v.push_back(exact_claim("q_11/21_at_1/5", "MT_Psi>L", q_at(R(11, 21)), R(1, 5), R(2448, 3705625)));
  {
    Claim c;
    c.name = "q_11/21_above_value_at_1/5";
    c.source = "MT_Psi>L";
    c.assertion = A::Positive;
    c.poly = q_at(R(11, 21), R(1, 5));
    c.lo = R(1, 5);
    v.push_back(c);
  }
  return v;
}

template <class Field>
Field eval_in(const RationalPolynomial& p, const Field& t) {
  Field acc(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + Field(*it);
  return acc;
}

// Sign certificate on the claim's interval, closed endpoints checked exactly.
ClaimReport check_sign(const RationalPolynomial& p, const Claim& c) {
  ClaimReport r;
  const PositivityCertificate cert = certify_positive(p, c.lo, c.hi);
  r.pass = cert.pass;
  r.detail = cert.summary();
  if (cert.witness) r.witness = cert.witness;
  auto check_end = [&](bool closed, const Bound& b) {
    if (!closed || !r.pass) return;
    const BigRational v = p(b.value());
    if (v <= 0) {
      r.pass = false;
      r.witness = b.value();
      r.detail = "FAIL: endpoint " + to_string(b.value()) + " value_sign=" + std::to_string(v.sign());
    }
  };
  check_end(c.lo_closed, c.lo);
  check_end(c.hi_closed, c.hi);
  return r;
}

}  // namespace

std::string_view to_string(Assertion a) {
  switch (a) {
    case Assertion::Positive:
      return "POSITIVE";
    case Assertion::Negative:
      return "NEGATIVE";
    case Assertion::ExactValue:
      return "EXACT_VALUE";
    case Assertion::IdentityConstant:
      return "IDENTITY_CONSTANT";
    case Assertion::AllCoeffsPositive:
      return "ALL_COEFFS_POSITIVE";
  }
  return "?";
}

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> registry = make_registry();
  return registry;
}

QuadraticSurd<205> a1_exact() { return {BigRational(8, 21), BigRational(1, 35)}; }

RationalPolynomial q_polynomial(const BigRational& a, const ProofConstants& constants) {
  if (a == 0) throw DomainError("q(x, a) needs a != 0");
  const BigRational c2 = constants.poly("q_coeff2_num")(a) / (2025 * a);
  const BigRational c0 = constants.poly("q_coeff0_num")(a) / (9 * a * a);
  const RationalPolynomial y = RationalPolynomial::linear(BigRational(1));
  return y * y * c2 + RationalPolynomial::constant(c0);
}

RationalPolynomial claim_polynomial(const Claim& c, const ProofConstants& constants) {
  RationalPolynomial p;
  switch (c.poly.kind) {
    case PolySource::Kind::Named:
      if (c.poly.name.empty()) throw DomainError("claim " + c.name + " names no polynomial");
      p = constants.poly(c.poly.name);
      break;
    case PolySource::Kind::QAtRational:
      p = q_polynomial(c.poly.a, constants);
      break;
  }
  if (c.poly.derivative < 0) throw DomainError("claim " + c.name + " has a negative derivative order");
  p = derivative(p, c.poly.derivative);
  if (c.poly.minus_value_at) p -= RationalPolynomial::constant(p(*c.poly.minus_value_at));
  return p;
}

ClaimReport verify_claim(const Claim& c, const ProofConstants& constants) {
  const auto start = std::chrono::steady_clock::now();
  ClaimReport r;
  switch (c.assertion) {
    case Assertion::Positive:
    case Assertion::Negative: {
      if (!(c.lo < c.hi)) throw DomainError("claim " + c.name + " has an empty interval");
      RationalPolynomial p = claim_polynomial(c, constants);
      if (c.assertion == Assertion::Negative) p = -p;
      r = check_sign(p, c);
      if (c.assertion == Assertion::Negative) r.detail = "for -p, " + r.detail;
      break;
    }
    case Assertion::ExactValue: {
      const BigRational got = claim_polynomial(c, constants)(c.point);
      r.pass = got == c.value;
      r.detail = "value at " + to_string(c.point) + " = " + to_string(got);
      if (!r.pass) {
        r.detail += ", expected " + to_string(c.value);
        r.witness = c.point;
      }
      break;
    }
    case Assertion::IdentityConstant: {
      if (c.coefficient_polys.size() != 2) throw DomainError("claim " + c.name + " needs two coefficient entries");
      // q = N2(a)/(2025a) (x+1)^2 + N0(a)/(9a^2), evaluated in Q(sqrt 205) at a1.
      using S = QuadraticSurd<205>;
      const S a = a1_exact();
      const S lead = eval_in(constants.poly(c.coefficient_polys[0]), a) / (S(2025) * a);
      const S cst = eval_in(constants.poly(c.coefficient_polys[1]), a) / (S(9) * a * a);
      r.pass = lead == S(0) && cst == S(c.value);
      r.detail = "(x+1)^2 coefficient = " + lead.str() + ", constant = " + cst.str();
      break;
    }
    case Assertion::AllCoeffsPositive: {
      if (c.coefficient_polys.empty()) throw DomainError("claim " + c.name + " lists no coefficients");
      if (!(c.lo < c.hi)) throw DomainError("claim " + c.name + " has an empty interval");
      r.pass = true;
      int certified = 0;
      for (const auto& name : c.coefficient_polys) {
        const ClaimReport one = check_sign(constants.poly(name), c);
        if (!one.pass) {
          r.pass = false;
          r.witness = one.witness;
          r.detail = name + " " + one.detail;
          break;
        }
        ++certified;
      }
      if (r.pass) r.detail = std::to_string(certified) + " coefficients certified positive, sturm_roots=0 each";
      break;
    }
  }
  r.name = c.name;
  r.source = c.source;
  r.assertion = c.assertion;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool CertifyReport::all_pass() const {
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

CertifyReport verify_claims(const std::vector<Claim>& claims, const ClaimFilter& filter,
                            const ProofConstants& constants) {
  CertifyReport report;
  for (const auto& c : claims) {
    if (!filter.name_substring.empty() && c.name.find(filter.name_substring) == std::string::npos) continue;
    if (!filter.source.empty() && c.source != filter.source) continue;
    report.claims.push_back(verify_claim(c, constants));
  }
  return report;
}

CertifyReport verify_all(const ClaimFilter& filter, const ProofConstants& constants) {
  return verify_claims(builtin_claims(), filter, constants);
}

}  // namespace psibound
