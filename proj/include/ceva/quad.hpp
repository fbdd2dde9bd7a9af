#pragma once

#include <cmath>
#include <string>

#include "ceva/rational.hpp"

namespace ceva {

/// Element p + q*sqrt(5) of Q(sqrt5), with rational p, q. The representation
/// is unique, so equality is componentwise. Hosts the golden ratio
/// phi = 1/2 + (1/2)sqrt5 and its powers, which satisfy phi^2 - phi - 1 = 0
/// exactly.
struct Quad {
  Rational p, q;

  Quad() = default;
  Quad(long n) : p(n) {}  // NOLINT: implicit, matches Rational
  Quad(Rational pp) : p(std::move(pp)) {}  // NOLINT
  Quad(Rational pp, Rational qq) : p(std::move(pp)), q(std::move(qq)) {}

  static Quad sqrt5() { return Quad(Rational(0), Rational(1)); }
  static Quad phi() { return Quad(Rational(1, 2), Rational(1, 2)); }
  static Quad phi_inv() { return Quad(Rational(-1, 2), Rational(1, 2)); }
  static Quad phi_sq() { return Quad(Rational(3, 2), Rational(1, 2)); }
  static Quad phi_inv_sq() { return Quad(Rational(3, 2), Rational(-1, 2)); }

  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  bool is_rational() const { return q.is_zero(); }

  /// Exact sign. If p and q agree in sign the answer is immediate; otherwise
  /// compare p^2 against 5 q^2 and attribute the sign of the dominant term.
  /// Never goes through floating point.
  int sign() const {
    const int sp = p.sign(), sq = q.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    const int c = (p * p - Rational(5) * q * q).sign();
    return sp > 0 ? c : -c;
  }

  Quad conj() const { return Quad(p, -q); }
  Rational field_norm() const { return p * p - Rational(5) * q * q; }

  Quad inverse() const {
    const Rational n = field_norm();
    if (n.is_zero()) throw domain_error("exact_scalar: division by zero");
    return Quad(p / n, -q / n);
  }

  double to_double() const {
    static const double r5 = std::sqrt(5.0);
    return p.to_double() + q.to_double() * r5;
  }

  /// Canonical text form: "p/q" when rational, else "p/q+r/s*sqrt5" (the
  /// rational part is kept even when zero so the form is easy to parse back).
  std::string str() const {
    if (q.is_zero()) return p.str();
    const std::string qs = q.abs().str();
    return p.str() + (q.sign() < 0 ? "-" : "+") + qs + "*sqrt5";
  }

  Quad operator-() const { return Quad(-p, -q); }
  friend Quad operator+(const Quad& a, const Quad& b) { return Quad(a.p + b.p, a.q + b.q); }
  friend Quad operator-(const Quad& a, const Quad& b) { return Quad(a.p - b.p, a.q - b.q); }
  friend Quad operator*(const Quad& a, const Quad& b) {
    return Quad(a.p * b.p + Rational(5) * a.q * b.q, a.p * b.q + a.q * b.p);
  }
  friend Quad operator/(const Quad& a, const Quad& b) { return a * b.inverse(); }
  Quad& operator+=(const Quad& o) { return *this = *this + o; }
  Quad& operator-=(const Quad& o) { return *this = *this - o; }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }
  Quad& operator/=(const Quad& o) { return *this = *this / o; }

  friend bool operator==(const Quad& a, const Quad& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }
  friend bool operator<(const Quad& a, const Quad& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Quad& a, const Quad& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Quad& a, const Quad& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Quad& a, const Quad& b) { return (a - b).sign() >= 0; }
};

}  // namespace ceva
