#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

namespace psibound {

/// Runtime-precision binary floating point (MPFR).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Error taxonomy shared by every module. The CLI maps DomainError and
// PrecisionError to exit code 2.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RootBracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested significant decimal digits plus extra working digits.
///
/// Every real result computed under a context carries an error of at most
/// 10^-digits (absolute, or relative where the operation says so). The guard
/// digits are spent on rounding in recurrences and series.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 16;
  static constexpr int kDefaultDigits = 50;
  static constexpr int kDefaultGuardDigits = 10;

  explicit PrecisionContext(int digits = kDefaultDigits, int guard_digits = kDefaultGuardDigits);

  int digits() const { return digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return digits_ + guard_digits_; }

  /// The exported oracle error budget, 10^-digits.
  Real epsilon() const;

  /// Same guard digits, different target.
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_digits_); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_digits_;
};

/// Sets the MPFR default precision to the context's working digits for the
/// lifetime of the guard and restores the previous value afterwards.
///
/// The default precision is process-wide; nested guards are fine, concurrent
/// guards with different precisions on different threads are not.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Three-valued outcome of a numerically decided inequality.
enum class Verdict { Pass, Fail, Indeterminate };

std::string_view to_string(Verdict v);

/// Decides `lhs < rhs` when both sides carry an error of at most `eps`:
/// a gap wider than 2*eps either way is decisive, anything closer is
/// Indeterminate.
Verdict decide_less(const Real& lhs, const Real& rhs, const Real& eps);

/// decide_less(0, value, eps).
Verdict decide_positive(const Real& value, const Real& eps);

/// Combines verdicts: any Fail wins, then any Indeterminate.
Verdict combine(Verdict a, Verdict b);

/// Parses a decimal literal ("0.5", "1e-3", "-2") at the current default precision.
Real parse_real(std::string_view text);

/// Scientific notation with `sig` significant digits (round to nearest).
std::string format_sig(const Real& value, int sig);

/// Full-precision scientific string carrying ctx.digits significant digits.
std::string format_full(const Real& value, const PrecisionContext& ctx);

/// Copy of `v` carried at the context's working precision.
///
/// Arithmetic results take the precision of their widest operand, so a value
/// built outside a ScopedPrecision (Boost default: 20 digits) would cap the
/// accuracy of everything computed from it. Entry points taking a Real
/// re-seat their inputs with this first.
Real at_precision(const Real& v, const PrecisionContext& ctx);

/// 10^-k at the current default precision.
Real pow10_neg(int k);

}  // namespace psibound
