#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psibound/approximant.hpp"

namespace psibound {

enum class SequenceTag { L_OF_A, SIGMA, THETA, TAU, DELTA, U, V, ALPHA, DETEMPLE, TOTH, MU, CLASSICAL };

/// A gamma-approximating sequence. L_OF_A carries its parameter:
///   l_n(a) = H_n - L(n, a), and l_n(inf) = sigma_n.
class SequenceId {
 public:
  explicit SequenceId(SequenceTag tag);
  static SequenceId l_of(ParamA a);

  /// "sigma", "theta", "tau", "delta", "u", "v", "alpha", "detemple",
  /// "toth", "mu", "classical", or "l:<a>" with <a> as ParamA::parse takes it.
  static SequenceId parse(std::string_view text);

  SequenceTag tag() const { return tag_; }
  const ParamA& param() const;

  /// Round-trips through parse().
  std::string name() const;

  /// Smallest admissible n: 3 for alpha, 1 otherwise (H_0 = 0 for u, v, delta).
  long min_n() const;

  /// Published convergence rate p in |e_n| ~ n^-p.
  int theoretical_order() const;

 private:
  SequenceTag tag_;
  std::optional<ParamA> a_;
};

struct SequenceSample {
  long n = 0;
  Real value;
  Real error;      // value - gamma
  Real abs_error;
};

/// Errors: DomainError naming the sequence when n < min_n().
SequenceSample seq_value(const SequenceId& id, long n, const PrecisionContext& ctx);

/// Digits needed so an error of size n^-order keeps about six significant
/// digits after cancellation against gamma.
int required_digits(int order, long n_max);

struct ErrorTable {
  std::vector<SequenceId> ids;
  std::vector<long> ns;
  /// cells[row][col] for ns[row], ids[col].
  std::vector<std::vector<SequenceSample>> cells;
  /// Context the cells were computed in (at least the caller's precision).
  PrecisionContext ctx;
};

/// Raises the precision to required_digits(8, max n) when the caller's is
/// lower. Cells are computed sequentially: MPFR's default precision is
/// process-wide state.
ErrorTable error_table(const std::vector<SequenceId>& ids, const std::vector<long>& ns, const PrecisionContext& ctx);

/// lim n^6 (l_n(a) - gamma) = -(a - a1)(a - a2)/(270a); zero at a = a1.
Real limit_constant(const ParamA& a, const PrecisionContext& ctx);

enum class ScaledLimitKind { L6, L8_A1, SIGMA4, TAU5 };

struct ScaledLimit {
  ScaledLimitKind kind;
  /// Parameter for L6.
  std::optional<ParamA> a;
};

struct ScaledLimitResult {
  int power = 0;
  Real observed;  // n^power (value - gamma)
  Real target;
};

/// Errors: PrecisionError("increase precision or decrease n") when
/// |value - gamma| <= 10^(-digits+10).
ScaledLimitResult scaled_limit_check(const ScaledLimit& which, long n, const PrecisionContext& ctx);

struct OrderEstimate {
  long n = 0;
  Real p_hat;  // log2(|e_n| / |e_2n|)
};

/// Errors: PrecisionError when e_n or e_2n is not resolvable.
OrderEstimate order_estimate(const SequenceId& id, long n, const PrecisionContext& ctx);

}  // namespace psibound
