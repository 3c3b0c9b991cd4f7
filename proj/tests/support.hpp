#pragma once

#include <cmath>
#include <random>
#include <string>

#include "psibound/polynomial.hpp"
#include "psibound/real.hpp"

namespace psibound::test {

/// Decimal literal at the context's working precision.
inline Real lit(const char* text, const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  return parse_real(text);
}

inline bool close_abs(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

inline bool close_rel(const Real& a, const Real& b, const Real& tol) {
  return abs(a - b) <= tol * (abs(b) > 1 ? abs(b) : Real(1));
}

inline std::string show(const Real& v) { return format_sig(v, 20); }

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/q with |p| <= num_max, 1 <= q <= den_max.
  BigRational rational(long num_max, long den_max) {
    return BigRational(integer(-num_max, num_max), integer(1, den_max));
  }

  /// Rational in [lo, hi] on a grid of spacing (hi - lo)/steps.
  BigRational rational_in(const BigRational& lo, const BigRational& hi, long steps) {
    return lo + (hi - lo) * BigRational(integer(0, steps), steps);
  }

  RationalPolynomial polynomial(int degree, long coeff_max) {
    std::vector<BigRational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational(coeff_max, 7));
    if (c.back() == 0) c.back() = 1;
    return RationalPolynomial(std::move(c));
  }

  /// log-uniform double in (lo, hi), returned as an exact Real.
  Real log_uniform(double lo, double hi, const PrecisionContext& ctx) {
    const double u = std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng_);
    ScopedPrecision guard(ctx);
    return Real(std::exp(u));
  }

  Real uniform(double lo, double hi, const PrecisionContext& ctx) {
    const double u = std::uniform_real_distribution<double>(lo, hi)(rng_);
    ScopedPrecision guard(ctx);
    return Real(u);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace psibound::test
