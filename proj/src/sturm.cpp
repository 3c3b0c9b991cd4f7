#include "psibound/sturm.hpp"

#include <stdexcept>

namespace psibound {

const BigRational& Bound::value() const {
  if (!is_finite()) throw std::logic_error("infinite bound has no value");
  return value_;
}

std::string Bound::str() const {
  switch (kind_) {
    case Kind::MinusInf:
      return "-inf";
    case Kind::PlusInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return to_string(value_);
}

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.kind_ == Bound::Kind::Finite && a.value_ < b.value_;
}

namespace {

// Scale by a positive rational so the coefficients are coprime integers.
// Signs at every point are preserved, which is all the chain needs.
RationalPolynomial primitive(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt den_lcm = 1;
  for (const auto& c : p.coefficients()) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  BigInt num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    BigInt n = boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, n);
  }
  return p * BigRational(den_lcm, boost::multiprecision::abs(num_gcd));
}

void require_nonzero(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("degenerate polynomial");
}

int sign_changes(const std::vector<RationalPolynomial>& chain, const BigRational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q(t).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

BigRational finite_point(const Bound& b, const BigRational& cauchy) {
  if (b.is_finite()) return b.value();
  return b.is_minus_infinity() ? BigRational(-cauchy) : cauchy;
}

}  // namespace

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  require_nonzero(p);
  const RationalPolynomial dp = derivative(p);
  RationalPolynomial square_free = p;
  if (!dp.is_zero()) {
    const RationalPolynomial g = gcd(p, dp);
    if (g.degree() > 0) square_free = divmod(p, g).first;
  }
  std::vector<RationalPolynomial> chain;
  chain.push_back(primitive(square_free));
  RationalPolynomial next = derivative(square_free);
  if (next.is_zero()) return chain;
  chain.push_back(primitive(next));
  while (true) {
    RationalPolynomial rem = divmod(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    chain.push_back(primitive(-rem));
  }
  return chain;
}

BigRational cauchy_root_bound(const RationalPolynomial& p) {
  require_nonzero(p);
  const BigRational lead = boost::multiprecision::abs(p.leading());
  BigRational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r = boost::multiprecision::abs(p.coefficients()[static_cast<std::size_t>(i)]) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

int count_real_roots(const RationalPolynomial& p, const Bound& lo, const Bound& hi) {
  require_nonzero(p);
  if (!(lo < hi)) return 0;
  if (p.degree() == 0) return 0;
  const auto chain = sturm_chain(p);
  const BigRational b = cauchy_root_bound(p);
  BigRational a_pt = finite_point(lo, b);
  BigRational b_pt = finite_point(hi, b);
  // Clamp finite endpoints outside the root bound; nothing lives out there.
  if (a_pt < -b) a_pt = -b;
  if (b_pt > b) b_pt = b;
  if (!(a_pt < b_pt)) return 0;
  return sign_changes(chain, a_pt) - sign_changes(chain, b_pt);
}

std::string PositivityCertificate::summary() const {
  std::string s = pass ? "PASS" : "FAIL";
  s += ": sturm_roots=" + std::to_string(roots_in_interval);
  s += " sample=" + to_string(sample) + " value_sign=" + std::to_string(sample_value.sign());
  if (witness) s += " witness=" + to_string(*witness) + " witness_value=" + to_string(*witness_value);
  return s;
}

PositivityCertificate certify_positive(const RationalPolynomial& p, const Bound& lo, const Bound& hi) {
  require_nonzero(p);
  if (!(lo < hi)) throw DomainError("empty interval " + lo.str() + ".." + hi.str());

  PositivityCertificate cert;
  if (lo.is_finite() && hi.is_finite()) {
    cert.sample = (lo.value() + hi.value()) / 2;
  } else if (lo.is_finite()) {
    cert.sample = lo.value() + 1;
  } else if (hi.is_finite()) {
    cert.sample = hi.value() - 1;
  } else {
    cert.sample = 0;
  }
  cert.sample_value = p(cert.sample);

  // Roots in the open interval: (lo, hi] minus a root sitting exactly on hi.
  int roots = count_real_roots(p, lo, hi);
  if (hi.is_finite() && p(hi.value()) == 0) --roots;
  cert.roots_in_interval = roots;

  if (roots == 0 && cert.sample_value > 0) {
    cert.pass = true;
    return cert;
  }
  if (cert.sample_value <= 0) {
    cert.witness = cert.sample;
    cert.witness_value = cert.sample_value;
    return cert;
  }

  // A root exists but the sample is positive: bisect with Sturm counts towards
  // a root, probing for a point where p <= 0.
  const BigRational cb = cauchy_root_bound(p);
  BigRational a = finite_point(lo, cb);
  BigRational b = finite_point(hi, cb);
  if (a < -cb) a = -cb;
  if (b > cb) b = cb;
  for (int iter = 0; iter < 200; ++iter) {
    const BigRational mid = (a + b) / 2;
    const BigRational v = p(mid);
    if (v <= 0) {
      cert.witness = mid;
      cert.witness_value = v;
      return cert;
    }
    if (count_real_roots(p, Bound(a), Bound(mid)) > 0) {
      b = mid;
    } else {
      a = mid;
    }
    for (const BigRational* end : {&a, &b}) {
      const bool inside = (!lo.is_finite() || *end > lo.value()) && (!hi.is_finite() || *end < hi.value());
      if (!inside) continue;
      const BigRational ve = p(*end);
      if (ve <= 0) {
        cert.witness = *end;
        cert.witness_value = ve;
        return cert;
      }
    }
  }
  // Even-multiplicity irrational root: p touches zero without a rational
  // point of non-positivity nearby. Report the closest probe.
  cert.witness = (a + b) / 2;
  cert.witness_value = p(*cert.witness);
  return cert;
}

}  // namespace psibound
