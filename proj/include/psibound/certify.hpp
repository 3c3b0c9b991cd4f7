#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psibound/constants_file.hpp"
#include "psibound/quadratic_surd.hpp"
#include "psibound/sturm.hpp"

namespace psibound {

enum class Assertion { Positive, Negative, ExactValue, IdentityConstant, AllCoeffsPositive };

std::string_view to_string(Assertion a);

/// Where a claim's univariate polynomial comes from.
struct PolySource {
  enum class Kind { Named, QAtRational };
  Kind kind = Kind::Named;
  /// Constants-file entry for Named.
  std::string name;
  /// q(x, a) for QAtRational, assembled from q_coeff2_num and q_coeff0_num.
  BigRational a{0};
  /// Differentiate this many times before use.
  int derivative = 0;
  /// Subtract the value at this point (after differentiating).
  std::optional<BigRational> minus_value_at;
};

struct Claim {
  std::string name;
  Assertion assertion = Assertion::Positive;
  PolySource poly;
  /// AllCoeffsPositive: constants-file entries, each a polynomial in a.
  std::vector<std::string> coefficient_polys;
  Bound lo = Bound::minus_infinity();
  Bound hi = Bound::plus_infinity();
  bool lo_closed = false;
  bool hi_closed = false;
  /// ExactValue: poly(point) == value. IdentityConstant: the constant.
  BigRational point{0};
  BigRational value{0};
  /// Theorem tag, e.g. "MT_F_a1".
  std::string source;
};

/// The built-in registry of proof claims.
const std::vector<Claim>& builtin_claims();

struct ClaimReport {
  std::string name;
  std::string source;
  Assertion assertion = Assertion::Positive;
  bool pass = false;
  /// Certificate summary on PASS, witness or mismatch on FAIL.
  std::string detail;
  std::optional<BigRational> witness;
  double seconds = 0.0;
};

/// Polynomial a claim is about, built from the given constants.
RationalPolynomial claim_polynomial(const Claim& c, const ProofConstants& constants);

/// q(x, a) for rational a as a polynomial in x.
RationalPolynomial q_polynomial(const BigRational& a, const ProofConstants& constants);

/// a1 = 8/21 + sqrt(205)/35 exactly.
QuadraticSurd<205> a1_exact();

/// Throws DomainError for a malformed claim (unknown entry, empty interval,
/// missing coefficient list).
ClaimReport verify_claim(const Claim& c, const ProofConstants& constants = ProofConstants::builtin());

struct ClaimFilter {
  /// Keep claims whose name contains this (empty keeps all).
  std::string name_substring;
  /// Keep claims with exactly this source tag (empty keeps all).
  std::string source;
};

struct CertifyReport {
  std::vector<ClaimReport> claims;
  bool all_pass() const;
};

CertifyReport verify_all(const ClaimFilter& filter = {}, const ProofConstants& constants = ProofConstants::builtin());

CertifyReport verify_claims(const std::vector<Claim>& claims, const ClaimFilter& filter,
                            const ProofConstants& constants);

}  // namespace psibound
