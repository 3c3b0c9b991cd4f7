#pragma once

#include "psibound/rational.hpp"
#include "psibound/real.hpp"

namespace psibound {

/// Exact H_n = 1 + 1/2 + ... + 1/n. Throws DomainError("n must be positive").
BigRational harmonic(long n);

/// H_n rounded once to the context precision (exact binary splitting first).
Real harmonic_real(long n, const PrecisionContext& ctx);

/// Exact Bernoulli number B_n (B_1 = -1/2). Values are cached; the cache is
/// safe to fill from several threads.
BigRational bernoulli(int n);

struct OracleConfig {
  /// Arguments below this are shifted upward with the recurrence first.
  double shift_threshold = 30.0;
  /// Hard cap on asymptotic series terms.
  int series_terms = 0;
};

/// Threshold max(30, (working digits + 5) ln 10 / (2 pi) + 2) and a term cap
/// that reaches the truncation target there with room to spare.
OracleConfig default_oracle_config(const PrecisionContext& ctx);

/// psi^(k)(x) for k in 0..3 and x > 0.
///
/// Errors: DomainError("pole/branch region") for x <= 0, DomainError for k
/// out of range or shift_threshold < 10, PrecisionError("insufficient
/// precision budget") when the series terms stop decreasing (or run past the
/// cap) before falling below 10^-(digits+5).
Real polygamma(int k, const Real& x, const PrecisionContext& ctx, const OracleConfig& cfg);
Real polygamma(int k, const Real& x, const PrecisionContext& ctx);

/// The asymptotic series alone, no argument shift. Same error rules.
Real polygamma_asymptotic(int k, const Real& z, const PrecisionContext& ctx, const OracleConfig& cfg);

/// gamma = H_N - psi_asymptotic(N + 1) with N + 1 past the shift threshold.
Real euler_gamma(const PrecisionContext& ctx);

/// zeta(3) = -psi''(1) / 2.
Real zeta3(const PrecisionContext& ctx);

Real pi(const PrecisionContext& ctx);

/// 10^-digits; callers deciding strict inequalities demand a 2x margin.
Real oracle_epsilon(const PrecisionContext& ctx);

}  // namespace psibound
