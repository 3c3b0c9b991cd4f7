#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psibound/polynomial.hpp"

namespace psibound {

/// Interval endpoint: a rational or one of the two infinities.
class Bound {
 public:
  Bound(BigRational value) : value_(std::move(value)) {}  // NOLINT: rationals are bounds
  Bound(int value) : value_(BigRational(value)) {}          // NOLINT
  static Bound minus_infinity() { return Bound(Kind::MinusInf); }
  static Bound plus_infinity() { return Bound(Kind::PlusInf); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_minus_infinity() const { return kind_ == Kind::MinusInf; }
  bool is_plus_infinity() const { return kind_ == Kind::PlusInf; }
  const BigRational& value() const;
  std::string str() const;

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  enum class Kind { MinusInf, Finite, PlusInf };
  explicit Bound(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  BigRational value_{0};
};

/// Sturm chain of the square-free part of p, each member scaled by a
/// positive rational to a primitive integer polynomial.
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);

/// Every real root of p lies strictly inside (-B, B) for the returned B.
BigRational cauchy_root_bound(const RationalPolynomial& p);

/// Number of distinct real roots of p in (lo, hi]. Infinite endpoints are
/// replaced by the Cauchy bound. Throws DomainError("degenerate polynomial")
/// for the zero polynomial.
int count_real_roots(const RationalPolynomial& p, const Bound& lo, const Bound& hi);

/// Outcome of a positivity check on an open interval.
struct PositivityCertificate {
  bool pass = false;
  /// Distinct real roots of p in the open interval.
  int roots_in_interval = 0;
  /// Sample point and its exact value; on PASS the value is positive.
  BigRational sample{0};
  BigRational sample_value{0};
  /// On FAIL: a point of the interval where p <= 0, if one was found.
  std::optional<BigRational> witness;
  std::optional<BigRational> witness_value;

  std::string summary() const;
};

/// PASS iff p has no real root in (lo, hi) and p(sample) > 0, with the sample
/// at the midpoint (or lo+1, hi-1, 0 for unbounded intervals). On FAIL the
/// certificate carries a witness t in (lo, hi) with p(t) <= 0 when the sign
/// changes there.
PositivityCertificate certify_positive(const RationalPolynomial& p, const Bound& lo, const Bound& hi);

}  // namespace psibound
