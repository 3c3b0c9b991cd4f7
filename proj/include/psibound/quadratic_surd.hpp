#pragma once

#include <stdexcept>
#include <string>

#include "psibound/rational.hpp"

namespace psibound {

/// Element u + v*sqrt(D) of the field Q(sqrt(D)), D a positive non-square.
template <int D>
class QuadraticSurd {
  static_assert(D > 1, "radicand must be a positive non-square");

 public:
  QuadraticSurd() = default;
  QuadraticSurd(int u) : u_(u) {}  // NOLINT: implicit like a numeric literal
  QuadraticSurd(BigRational u) : u_(std::move(u)) {}  // NOLINT
  QuadraticSurd(BigRational u, BigRational v) : u_(std::move(u)), v_(std::move(v)) {}

  static QuadraticSurd root() { return QuadraticSurd(BigRational(0), BigRational(1)); }

  const BigRational& rational_part() const { return u_; }
  const BigRational& surd_part() const { return v_; }
  bool is_rational() const { return v_ == 0; }

  QuadraticSurd conjugate() const { return {u_, -v_}; }
  /// Field norm u^2 - D v^2 (zero only for zero).
  BigRational norm() const { return u_ * u_ - BigRational(D) * v_ * v_; }

  /// Sign decided exactly by comparing squares.
  int sign() const {
    const int su = u_.sign();
    const int sv = v_.sign();
    if (sv == 0) return su;
    if (su == 0 || su == sv) return su == 0 ? sv : su;
    // opposite signs: compare u^2 with D v^2
    const BigRational n = norm();
    return n.sign() * su;
  }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) { return {a.u_ + b.u_, a.v_ + b.v_}; }
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return {a.u_ - b.u_, a.v_ - b.v_}; }
  friend QuadraticSurd operator-(const QuadraticSurd& a) { return {-a.u_, -a.v_}; }
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
    return {a.u_ * b.u_ + BigRational(D) * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_};
  }
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
    const BigRational n = b.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(sqrt D)");
    const QuadraticSurd num = a * b.conjugate();
    return {num.u_ / n, num.v_ / n};
  }
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

  std::string str() const {
    return to_string(u_) + " + (" + to_string(v_) + ")*sqrt(" + std::to_string(D) + ")";
  }

 private:
  BigRational u_{0};
  BigRational v_{0};
};

}  // namespace psibound
