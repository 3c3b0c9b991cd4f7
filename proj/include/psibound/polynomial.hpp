#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "psibound/rational.hpp"

namespace psibound {

/// Dense univariate polynomial over a field, coefficients in ascending degree.
///
/// The leading coefficient is non-zero unless the polynomial is identically
/// zero, in which case the coefficient list is empty and degree() is -1.
/// `Field` needs value semantics, construction from int, the four field
/// operations and equality.
template <class Field>
class Polynomial {
 public:
  using value_type = Field;

  Polynomial() = default;
  explicit Polynomial(std::vector<Field> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<Field> ascending) : coeffs_(ascending) { trim(); }

  static Polynomial constant(Field c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(Field c, std::size_t power) {
    std::vector<Field> v(power + 1, Field(0));
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// t + c
  static Polynomial linear(Field c) { return Polynomial({std::move(c), Field(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Field>& coefficients() const { return coeffs_; }
  Field coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Field(0); }
  const Field& leading() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  /// Horner evaluation in the coefficient field (exact for exact fields).
  Field operator()(const Field& t) const {
    Field acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Field& s) {
    for (auto& c : coeffs_) c = c * s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = Field(0) - c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Field& s) { return a *= s; }
  friend Polynomial operator*(const Field& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> out(a.coeffs_.size() + b.coeffs_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Field(0)) coeffs_.pop_back();
  }

  std::vector<Field> coeffs_;
};

using RationalPolynomial = Polynomial<BigRational>;

/// Exact value of p at t.
template <class Field>
Field evaluate(const Polynomial<Field>& p, const Field& t) {
  return p(t);
}

/// k-th formal derivative.
template <class Field>
Polynomial<Field> derivative(const Polynomial<Field>& p, int order = 1) {
  std::vector<Field> c = p.coefficients();
  for (int k = 0; k < order && !c.empty(); ++k) {
    std::vector<Field> d;
    d.reserve(c.size() > 0 ? c.size() - 1 : 0);
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Field(static_cast<int>(i)));
    c = std::move(d);
  }
  return Polynomial<Field>(std::move(c));
}

template <class Field>
Polynomial<Field> pow(const Polynomial<Field>& p, unsigned e) {
  Polynomial<Field> result = Polynomial<Field>::constant(Field(1));
  Polynomial<Field> base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

/// p(q(t)).
template <class Field>
Polynomial<Field> compose(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  Polynomial<Field> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<Field>::constant(*it);
  return acc;
}

/// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& a, const Polynomial<Field>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Field> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Field>{}, a};
  std::vector<Field> quot(static_cast<std::size_t>(a.degree() - db + 1), Field(0));
  const Field& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Field factor = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == Field(0)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      r = r - factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Field>(std::move(quot)), Polynomial<Field>(std::move(rem))};
}

/// Monic greatest common divisor (zero if both are zero).
template <class Field>
Polynomial<Field> gcd(Polynomial<Field> a, Polynomial<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Field(1) / a.leading());
}

}  // namespace psibound
