#pragma once

#include <array>

#include "ceva/error.hpp"
#include "ceva/scalar.hpp"

namespace ceva {

template <class S>
struct Vec3T {
  S x{}, y{}, z{};

  Vec3T operator-() const { return {-x, -y, -z}; }
  friend Vec3T operator+(const Vec3T& u, const Vec3T& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
  friend Vec3T operator-(const Vec3T& u, const Vec3T& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
  friend Vec3T operator*(const S& k, const Vec3T& v) { return {k * v.x, k * v.y, k * v.z}; }
  friend bool operator==(const Vec3T& u, const Vec3T& v) { return u.x == v.x && u.y == v.y && u.z == v.z; }
};

using Vec3 = Vec3T<double>;
using Vec3Q = Vec3T<Quad>;

/// Dense 3x3 matrix, row-major.
template <class S>
struct Mat3T {
  std::array<std::array<S, 3>, 3> m{};

  static Mat3T identity() {
    Mat3T r;
    r.m[0][0] = S(1); r.m[1][1] = S(1); r.m[2][2] = S(1);
    return r;
  }
  static Mat3T from_rows(const Vec3T<S>& r0, const Vec3T<S>& r1, const Vec3T<S>& r2) {
    return Mat3T{{{{r0.x, r0.y, r0.z}, {r1.x, r1.y, r1.z}, {r2.x, r2.y, r2.z}}}};
  }
  static Mat3T from_cols(const Vec3T<S>& c0, const Vec3T<S>& c1, const Vec3T<S>& c2) {
    return Mat3T{{{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}}};
  }

  const std::array<S, 3>& operator[](int i) const { return m[static_cast<std::size_t>(i)]; }
  std::array<S, 3>& operator[](int i) { return m[static_cast<std::size_t>(i)]; }

  Mat3T transpose() const {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[j][i] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return r;
  }

  S det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Mat3T adjugate() const {
    Mat3T r;
    r[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    r[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    r[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    r[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    r[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    r[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    r[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    r[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    r[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return r;
  }

  friend Vec3T<S> operator*(const Mat3T& a, const Vec3T<S>& v) {
    return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
            a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
            a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
  }
  friend Mat3T operator*(const Mat3T& a, const Mat3T& b) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
  }
  friend Mat3T operator*(const S& k, const Mat3T& a) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = k * a[i][j];
    return r;
  }
  friend Mat3T operator-(const Mat3T& a, const Mat3T& b) {
    Mat3T r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] - b[i][j];
    return r;
  }
  friend bool operator==(const Mat3T& a, const Mat3T& b) { return a.m == b.m; }

  bool is_zero() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (sign_of(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) return false;
    return true;
  }
};

using Mat3 = Mat3T<double>;
using Mat3Q = Mat3T<Quad>;

/// Inverse via adjugate over the scalar field; exact for Quad.
template <class S>
Mat3T<S> inverse_exact(const Mat3T<S>& a) {
  const S d = a.det();
  if (sign_of(d) == 0) throw domain_error("cone: matrix is singular");
  Mat3T<S> adj = a.adjugate();
  Mat3T<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = adj[i][j] / d;
  return r;
}

inline double norm_inf(const Mat3& a) {
  double best = 0;
  for (int i = 0; i < 3; ++i) {
    const double row = std::fabs(a[i][0]) + std::fabs(a[i][1]) + std::fabs(a[i][2]);
    if (row > best) best = row;
  }
  return best;
}

/// Float-mode inverse. Refuses matrices whose condition estimate exceeds the
/// limit instead of returning garbage.
inline Mat3 inverse_guarded(const Mat3& a, double cond_limit = 1e12) {
  const double d = a.det();
  if (d == 0) throw domain_error("cone: matrix is singular");
  Mat3 inv;
  const Mat3 adj = a.adjugate();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = adj[i][j] / d;
  if (norm_inf(a) * norm_inf(inv) > cond_limit)
    throw domain_error("cone: ill-conditioned matrix");
  return inv;
}

}  // namespace ceva
