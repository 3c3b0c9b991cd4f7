#include "psibound/oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace psibound {

namespace {

// Sum of 1/k for k in [a, b) as an unreduced fraction p/q.
void split_harmonic(long a, long b, BigInt& p, BigInt& q) {
  if (b - a == 1) {
    p = 1;
    q = a;
    return;
  }
  const long m = a + (b - a) / 2;
  BigInt p1, q1, p2, q2;
  split_harmonic(a, m, p1, q1);
  split_harmonic(m, b, p2, q2);
  p = p1 * q2 + p2 * q1;
  q = q1 * q2;
}

void require_positive(long n) {
  if (n < 1) throw DomainError("n must be positive");
}

std::mutex& bernoulli_mutex() {
  static std::mutex m;
  return m;
}

std::vector<BigRational>& bernoulli_table() {
  static std::vector<BigRational> table{BigRational(1)};
  return table;
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using ContextKey = std::pair<int, int>;
ContextKey key_of(const PrecisionContext& ctx) { return {ctx.digits(), ctx.guard_digits()}; }

Real truncation_tolerance(const PrecisionContext& ctx) {
  return pow10_neg(std::max(ctx.digits() + 5, ctx.working_digits()));
}

void check_order(int k) {
  if (k < 0 || k > 3) throw DomainError("polygamma order must be 0, 1, 2 or 3");
}

void check_config(const OracleConfig& cfg) {
  if (!(cfg.shift_threshold >= 10.0)) throw DomainError("shift_threshold must be at least 10");
  if (cfg.series_terms < 0) throw DomainError("series_terms must be positive");
}

}  // namespace

BigRational harmonic(long n) {
  require_positive(n);
  BigInt p, q;
  split_harmonic(1, n + 1, p, q);
  return BigRational(p, q);
}

Real harmonic_real(long n, const PrecisionContext& ctx) {
  require_positive(n);
  ScopedPrecision guard(ctx);
  BigInt p, q;
  split_harmonic(1, n + 1, p, q);
  Real r;
  mpfr_set_z(r.backend().data(), p.backend().data(), MPFR_RNDN);
  mpfr_div_z(r.backend().data(), r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

BigRational bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  if (n == 1) return BigRational(-1, 2);
  if (n % 2 == 1) return BigRational(0);
  std::lock_guard<std::mutex> lock(bernoulli_mutex());
  auto& table = bernoulli_table();  // table[i] = B_{2i}
  const std::size_t want = static_cast<std::size_t>(n / 2);
  while (table.size() <= want) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 with m = 2i; odd B_j vanish except B_1.
    const int m = static_cast<int>(table.size()) * 2;
    BigRational s = BigRational(binomial(m + 1, 1)) * BigRational(-1, 2);
    for (std::size_t i = 0; i < table.size(); ++i) {
      s += BigRational(binomial(m + 1, static_cast<int>(2 * i))) * table[i];
    }
    table.push_back(-s / BigRational(m + 1));
  }
  return table[want];
}

OracleConfig default_oracle_config(const PrecisionContext& ctx) {
  OracleConfig cfg;
  const double needed = (ctx.working_digits() + 5) * std::log(10.0) / (2.0 * M_PI) + 2.0;
  cfg.shift_threshold = std::max(30.0, std::ceil(needed));
  // The smallest term sits near j = pi z; stop well before that.
  cfg.series_terms = static_cast<int>(std::ceil(M_PI * cfg.shift_threshold)) + 10;
  return cfg;
}

Real polygamma_asymptotic(int k, const Real& z_in, const PrecisionContext& ctx, const OracleConfig& cfg) {
  const Real z = at_precision(z_in, ctx);
  check_order(k);
  check_config(cfg);
  if (z <= 0) throw DomainError("pole/branch region");
  ScopedPrecision guard(ctx);
  const Real tol = truncation_tolerance(ctx);
  const int cap = cfg.series_terms > 0 ? cfg.series_terms : default_oracle_config(ctx).series_terms;

  Real result;
  const Real zk = boost::multiprecision::pow(z, k);
  const int sk = (k % 2 == 0) ? 1 : -1;  // (-1)^k
  if (k == 0) {
    result = log(z) - 1 / (2 * z);
  } else {
    long fact = 1;
    for (int i = 2; i < k; ++i) fact *= i;  // (k-1)!
    result = Real(-sk * fact) / zk;         // (-1)^(k-1) (k-1)! / z^k
    result -= Real(sk * fact * k) / (2 * zk * z);
  }

  const Real z2 = z * z;
  Real zpow = zk * z2;  // z^(2j+k) for j = 1
  Real prev_mag = -1;
  for (int j = 1;; ++j) {
    if (j > cap) throw PrecisionError("insufficient precision budget");
    BigRational coeff = bernoulli(2 * j) / (2 * j);
    BigInt rising = 1;
    for (int i = 0; i < k; ++i) rising *= 2 * j + i;
    coeff *= BigRational(rising) * (-sk);
    const Real term = to_real(coeff) / zpow;
    result += term;
    const Real mag = abs(term);
    if (mag < tol) break;
    if (prev_mag >= 0 && mag > prev_mag) throw PrecisionError("insufficient precision budget");
    prev_mag = mag;
    zpow *= z2;
  }
  return result;
}

Real polygamma(int k, const Real& x_in, const PrecisionContext& ctx, const OracleConfig& cfg) {
  const Real x = at_precision(x_in, ctx);
  check_order(k);
  check_config(cfg);
  if (x <= 0) throw DomainError("pole/branch region");
  ScopedPrecision guard(ctx);
  Real z = x;
  Real shift_sum = 0;
  const Real threshold(cfg.shift_threshold);
  while (z < threshold) {
    shift_sum += 1 / boost::multiprecision::pow(z, k + 1);
    z += 1;
  }
  long kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  const int sk = (k % 2 == 0) ? 1 : -1;
  // psi^(k)(x) = psi^(k)(x + m) - (-1)^k k! sum_{i<m} (x + i)^-(k+1)
  return polygamma_asymptotic(k, z, ctx, cfg) - Real(sk * kfact) * shift_sum;
}

Real polygamma(int k, const Real& x, const PrecisionContext& ctx) {
  return polygamma(k, x, ctx, default_oracle_config(ctx));
}

Real euler_gamma(const PrecisionContext& ctx) {
  static std::mutex mutex;
  static std::map<ContextKey, Real> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key_of(ctx));
  if (it != cache.end()) return it->second;
  ScopedPrecision guard(ctx);
  const OracleConfig cfg = default_oracle_config(ctx);
  const long n = static_cast<long>(std::ceil(cfg.shift_threshold));
  Real g = harmonic_real(n, ctx) - polygamma_asymptotic(0, Real(n + 1), ctx, cfg);
  cache.emplace(key_of(ctx), g);
  return g;
}

Real zeta3(const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  return -polygamma(2, Real(1), ctx) / 2;
}

Real pi(const PrecisionContext& ctx) {
  ScopedPrecision guard(ctx);
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Real oracle_epsilon(const PrecisionContext& ctx) { return ctx.epsilon(); }

}  // namespace psibound
