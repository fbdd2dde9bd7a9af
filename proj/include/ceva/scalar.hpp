#pragma once

#include <cmath>

#include "ceva/quad.hpp"

namespace ceva {

// Shared scalar interface for the two arithmetic modes: double (float mode)
// and Quad (exact mode). Generic formula code is written once against this.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static int sign(double x) { return (x > 0) - (x < 0); }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double phi() { return 0.5 * (1.0 + std::sqrt(5.0)); }
  static double phi_inv() { return 0.5 * (std::sqrt(5.0) - 1.0); }
  static double phi_sq() { return 0.5 * (3.0 + std::sqrt(5.0)); }
  static double phi_inv_sq() { return 0.5 * (3.0 - std::sqrt(5.0)); }
};

template <>
struct ScalarOps<Quad> {
  static constexpr bool exact = true;
  static int sign(const Quad& x) { return x.sign(); }
  static Quad abs(const Quad& x) { return x.sign() < 0 ? -x : x; }
  static double to_double(const Quad& x) { return x.to_double(); }
  static Quad phi() { return Quad::phi(); }
  static Quad phi_inv() { return Quad::phi_inv(); }
  static Quad phi_sq() { return Quad::phi_sq(); }
  static Quad phi_inv_sq() { return Quad::phi_inv_sq(); }
};

template <class S>
int sign_of(const S& x) {
  return ScalarOps<S>::sign(x);
}

template <class S>
S abs_of(const S& x) {
  return ScalarOps<S>::abs(x);
}

}  // namespace ceva
