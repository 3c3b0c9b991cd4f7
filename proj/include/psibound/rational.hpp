#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "psibound/real.hpp"

namespace psibound {

using BigInt = boost::multiprecision::mpz_int;

/// Exact rational, always in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

/// Accepts "p", "p/q" and plain decimals such as "0.48" or "-1.25" (exactly).
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& q);

/// Correctly rounded conversion at the current default precision.
Real to_real(const BigRational& q);

int sign(const BigRational& q);

}  // namespace psibound
