#include <doctest.h>

#include <sstream>

#include "psibound/certify.hpp"
#include "support.hpp"

using namespace psibound;

namespace {

// Constants text with one polynomial replaced.
std::string with_replaced(const std::string& name, const RationalPolynomial& p) {
  std::ostringstream out;
  for (const auto& [key, entry] : ProofConstants::builtin().entries()) {
    const RationalPolynomial& poly = key == name ? p : entry.poly;
    out << "poly " << key << " " << entry.source << " " << poly.degree() << "\n";
    for (const auto& c : poly.coefficients()) out << " " << to_string(c);
    out << "\n";
  }
  return out.str();
}

const ClaimReport* find(const CertifyReport& r, const std::string& name) {
  for (const auto& c : r.claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("every built-in claim certifies") {
  const CertifyReport r = verify_all();
  CHECK(r.claims.size() >= 14);
  for (const auto& c : r.claims) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
    CHECK(c.seconds >= 0);
  }
  CHECK(r.all_pass());
}

TEST_CASE("exact values are the printed rationals") {
  const std::map<std::string, BigRational> printed = {
      {"q_48/100_at_1/20", BigRational(2341501, 1312200000)},
      {"P_a0p_at_1/20", -BigRational(BigInt("2874530403954909124821"), BigInt("1024000000000"))},
      {"r_a0pp_at_3/50", BigRational(BigInt("1114560148894087067992508"), BigInt("3814697265625"))},
      {"R_a0pp_at_0", BigRational(BigInt("-4420688040144642816"))},
      {"R_a0pp_at_3/50", -BigRational(BigInt("337711343455989855048292675691209992531618111"),
                                      BigInt("190734863281250000000000000"))},
      {"v_a0_at_0", BigRational(-192808962)},
      {"v_a0_at_1/5", -BigRational(BigInt("245738739045744"), BigInt("1953125"))},
      {"q_11/21_at_1/5", BigRational(2448, 3705625)},
  };
  for (const auto& c : builtin_claims()) {
    auto it = printed.find(c.name);
    if (it == printed.end()) continue;
    CHECK(c.value == it->second);
    CHECK(claim_polynomial(c, ProofConstants::builtin())(c.point) == it->second);
  }
  std::size_t exact = 0;
  for (const auto& c : builtin_claims()) exact += c.assertion == Assertion::ExactValue ? 1 : 0;
  CHECK(exact == printed.size());
}

TEST_CASE("q at a1 is the constant -144/1225") {
  const auto& c = ProofConstants::builtin();
  using S = QuadraticSurd<205>;
  const S a = a1_exact();
  // independent of the registry: evaluate the two coefficient numerators directly
  S n2 = 0, n0 = 0, power = 1;
  for (const auto& k : c.poly("q_coeff2_num").coefficients()) {
    n2 = n2 + S(k) * power;
    power = power * a;
  }
  power = 1;
  for (const auto& k : c.poly("q_coeff0_num").coefficients()) {
    n0 = n0 + S(k) * power;
    power = power * a;
  }
  CHECK(n2 == S(0));
  CHECK(n0 / (S(9) * a * a) == S(BigRational(-144, 1225)));
}

TEST_CASE("filters") {
  const CertifyReport f = verify_all({"", "MT_Psi>L"});
  CHECK(f.claims.size() == 7);
  for (const auto& c : f.claims) CHECK(c.source == "MT_Psi>L");
  CHECK(find(f, "v_a0_at_0") != nullptr);
  CHECK(find(f, "q_11/21_at_1/5") != nullptr);
  const CertifyReport g = verify_all({"w8", ""});
  REQUIRE(g.claims.size() == 1);
  CHECK(g.claims[0].name == "w8_positive_on_0_inf");
  CHECK(verify_all({"no-such-claim", ""}).claims.empty());
}

TEST_CASE("mutated constants are caught") {
  const auto& base = ProofConstants::builtin();

  // A tiny negative dip in w8 near x = 1.
  const RationalPolynomial dip = RationalPolynomial({1, -2, 1}) * RationalPolynomial::constant(BigRational(1, 1000000));
  const auto w8 = base.poly("w8");
  const auto bad_w8 = w8 - RationalPolynomial::constant(w8(BigRational(1))) + dip -
                      RationalPolynomial::constant(BigRational(1, 100000) * BigRational(1, 100000));
  const ProofConstants mutated = ProofConstants::parse(with_replaced("w8", bad_w8));
  const CertifyReport r = verify_all({"w8", ""}, mutated);
  REQUIRE(r.claims.size() == 1);
  CHECK_FALSE(r.claims[0].pass);
  REQUIRE(r.claims[0].witness.has_value());
  CHECK(bad_w8(*r.claims[0].witness) <= 0);
  CHECK(r.claims[0].detail.find("FAIL") != std::string::npos);

  // Perturbed v changes the exact values.
  auto v = base.poly("v_a0");
  const ProofConstants mv = ProofConstants::parse(with_replaced("v_a0", v + RationalPolynomial::constant(1)));
  const CertifyReport rv = verify_all({"v_a0_at", ""}, mv);
  REQUIRE(rv.claims.size() == 2);
  for (const auto& c : rv.claims) {
    CHECK_FALSE(c.pass);
    CHECK(c.detail.find("expected") != std::string::npos);
  }

  // Breaking the a1 cancellation fails the identity claim.
  const auto q2 = base.poly("q_coeff2_num");
  const ProofConstants mq = ProofConstants::parse(with_replaced("q_coeff2_num", q2 + RationalPolynomial::constant(1)));
  CHECK_FALSE(verify_all({"q_at_a1", ""}, mq).all_pass());

  // A mixed-partial coefficient with a root in (1/15, inf).
  const ProofConstants ml = ProofConstants::parse(with_replaced("mixed_P_x0", RationalPolynomial({-1, 1})));
  CHECK_FALSE(verify_all({"mixed_P", ""}, ml).all_pass());
}

TEST_CASE("closed endpoints are checked exactly") {
  Claim c;
  c.name = "x_positive_on_0_1_closed";
  c.assertion = Assertion::Positive;
  c.poly.name = "t";
  c.lo = 0;
  c.hi = 1;
  const ProofConstants k = ProofConstants::parse("poly t T 1\n 0 1\n");
  CHECK(verify_claim(c, k).pass);
  c.lo_closed = true;
  const ClaimReport r = verify_claim(c, k);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == BigRational(0));
}

TEST_CASE("negative claims") {
  Claim c;
  c.name = "neg";
  c.assertion = Assertion::Negative;
  c.poly.name = "t";
  c.lo = 1;
  c.hi = 3;
  c.hi_closed = true;
  CHECK(verify_claim(c, ProofConstants::parse("poly t T 1\n -4 1\n")).pass);
  CHECK_FALSE(verify_claim(c, ProofConstants::parse("poly t T 1\n -3 1\n")).pass);
}

TEST_CASE("malformed claims") {
  Claim c;
  c.name = "bad";
  c.poly.name = "missing";
  CHECK_THROWS_AS(verify_claim(c), DomainError);
  c.poly.name = "w8";
  c.lo = 2;
  c.hi = 1;
  CHECK_THROWS_AS(verify_claim(c), DomainError);
  c.assertion = Assertion::AllCoeffsPositive;
  c.lo = 0;
  c.hi = 1;
  CHECK_THROWS_AS(verify_claim(c), DomainError);
  c.assertion = Assertion::IdentityConstant;
  CHECK_THROWS_AS(verify_claim(c), DomainError);
  c.assertion = Assertion::Positive;
  c.poly.derivative = -1;
  CHECK_THROWS_AS(verify_claim(c), DomainError);
  CHECK_THROWS_AS(q_polynomial(BigRational(0), ProofConstants::builtin()), DomainError);
}

}  // TEST_SUITE
