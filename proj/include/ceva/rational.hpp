#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "ceva/error.hpp"

namespace ceva {

/// Arbitrary-precision rational kept in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1. All arithmetic is exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit, lets 0/1/2 literals flow
  Rational(long n, long d) {
    if (d == 0) throw domain_error("exact_scalar: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw domain_error("exact_scalar: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw domain_error("exact_scalar: zero denominator");
    v_.canonicalize();
  }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const { return v_.get_d(); }

  /// "n" or "n/d", canonical.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) { return make(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return make(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return make(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("exact_scalar: division by zero");
    return make(a.v_ / b.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  static Rational make(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);  // results of mpq arithmetic are already canonical
    return r;
  }
  mpq_class v_;
};

}  // namespace ceva
