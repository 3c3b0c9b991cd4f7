#include "psibound/rational.hpp"

#include <algorithm>
#include <cctype>

namespace psibound {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_literal(frac) || frac.front() == '-' || frac.front() == '+') {
      throw DomainError("not a decimal: '" + std::string(text) + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt num = parse_integer(whole) * scale + parse_integer(frac);
    BigRational q(num, scale);
    return negative ? BigRational(-q) : q;
  }
  return BigRational(parse_integer(text));
}

std::string to_string(const BigRational& q) {
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt num = boost::multiprecision::numerator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Real to_real(const BigRational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

int sign(const BigRational& q) { return q.sign(); }

}  // namespace psibound
