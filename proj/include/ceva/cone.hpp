#pragma once

#include <cstdint>
#include <optional>

#include "ceva/geometry.hpp"
#include "ceva/linalg.hpp"

namespace ceva {

enum class Region { open, boundary, closed };

/// 2(xy + yz + zx) - (x^2 + y^2 + z^2); positive strictly inside the cone of
/// squared triangle sides.
template <class S>
S cone_form(const Vec3T<S>& v) {
  return S(2) * (v.x * v.y + v.y * v.z + v.z * v.x) - (v.x * v.x + v.y * v.y + v.z * v.z);
}

/// Membership in the cone {x,y,z > 0, x^2+y^2+z^2 < 2(xy+yz+zx)}, the image
/// of the triangle set under coordinatewise squaring.
bool in_squares_cone(const Vec3& v, Region r, double eps = kDefaultEps);
bool in_squares_cone(const Vec3Q& v, Region r);

/// Membership in the auxiliary cone {(u,v,w): v,w > 0, u^2 < 4vw}.
bool in_aux_cone(const Vec3& v, Region r, double eps = kDefaultEps);
bool in_aux_cone(const Vec3Q& v, Region r);

Vec3 squares_map(const Triangle& t);

/// The matrix taking squared side lengths to squared cevian lengths:
/// rows [rho(rho-1), rho, 1-rho], [1-sigma, sigma(sigma-1), sigma],
/// [tau, 1-tau, tau(tau-1)].
template <class S>
Mat3T<S> transfer_matrix(const Triple3<S>& p) {
  const S one(1);
  return Mat3T<S>::from_rows({p.rho * (p.rho - one), p.rho, one - p.rho},
                             {one - p.sigma, p.sigma * (p.sigma - one), p.sigma},
                             {p.tau, one - p.tau, p.tau * (p.tau - one)});
}

/// Residual of transfer_matrix(p) * (a^2,b^2,c^2) - cevian squares; vanishes
/// identically.
template <class S>
Vec3T<S> transfer_residual(const Tri3<S>& t, const Triple3<S>& p) {
  const Vec3T<S> sq{t.a * t.a, t.b * t.b, t.c * t.c};
  return transfer_matrix(p) * sq - cevian_squares(t, p);
}

// --- the diagonal case: M(tau,tau,tau) is a scaled rotation ---

template <class S>
struct RotationReport {
  S scale;          // tau^2 - tau + 1
  bool mtm_ok;      // M^T M == scale^2 I
  bool det_ok;      // det M == scale^3
  bool axis_ok;     // M (1,1,1) == scale (1,1,1)
  bool pass() const { return mtm_ok && det_ok && axis_ok; }
};

RotationReport<Quad> rotation_check(const Quad& tau);
RotationReport<double> rotation_check(double tau, double tol = 1e-12);

// --- the rank-one case: M(1/(1-tau), 1-1/tau, tau) ---

/// The even sextic whose positivity (at x = 2 tau - 1) decides whether the
/// surviving eigenvector points into the open cone.
template <class S>
S interval_sextic(const S& x) {
  const S x2 = x * x;
  return -(x2 * x2 * x2) + S(23) * (x2 * x2) - S(91) * x2 + S(5);
}

/// tau in (-phi, -1/phi) u (1/phi^2, 1/phi) u (phi, phi^2)?
bool in_golden_intervals(double tau);
bool in_golden_intervals(const Quad& tau);

template <class S>
struct RankOneReport {
  Vec3T<S> null1, null2;   // kernel vectors (1-tau, 0, 1), (tau-1, tau, 0)
  Vec3T<S> eigvec;         // (tau/(tau-1), 1-1/tau, tau(tau-1))
  S eigval;
  bool null_ok, eig_ok;
  bool cos_ok;             // interval_sextic(2 tau - 1) > 0
  bool in_intervals;
  bool eigvec_in_open_cone;       // up to overall sign
  bool eigvec_on_cone_boundary;   // quadratic form vanishes, coords clean of sign mix
};

RankOneReport<Quad> rank_one_case(const Quad& tau);
RankOneReport<double> rank_one_case(double tau, double tol = 1e-9);

// --- the line-family case: M(xi, -xi, 2-xi) is diagonalizable ---

/// Fixed eigenvector basis with columns (-1,1,1), (1, 1/phi^2, phi^2),
/// (1, phi^2, 1/phi^2); maps the auxiliary cone onto the squares cone.
const Mat3Q& cone_change_of_basis();

struct DiagReport {
  Quad xi;
  Mat3Q M, B, D;
  bool similar_ok;        // B^{-1} M B == D exactly
  bool product_identity;  // (phi^2-1-xi)^2 (phi^-2-1-xi)^2 == (xi^2-xi-1)^2
  bool tail_positive;     // second and third eigenvalues strictly positive
  bool deferred = false;  // xi hit an excluded value; rank-one case applies
  Quad deferred_tau;      // the tau of the coinciding rank-one matrix
  bool pass() const { return !deferred && similar_ok && product_identity && tail_positive; }
};

DiagReport line_family_diagonalize(const Quad& xi);

// --- sampling-based verification ---

struct TransportReport {
  long samples = 0;
  std::uint64_t seed = 0;
  long forward_violations = 0;   // B q0 outside closed squares cone
  long backward_violations = 0;  // B^{-1} q outside closed aux cone
  double worst_identity_rel = 0; // form(B u) vs 5(u^2 - 4vw)
  bool pass(double tol = 1e-10) const {
    return forward_violations == 0 && backward_violations == 0 && worst_identity_rel <= tol;
  }
};

TransportReport cone_transport_check(long samples, std::uint64_t seed);

struct SamplerReport {
  long samples = 0;
  std::uint64_t seed = 0;
  long violations = 0;
  double worst_margin = 0;  // min over samples of the relative cone margin of M q
  std::optional<Vec3> first_violation;
};

/// Samples the squares cone (random triangles squared, plus boundary-biased
/// ones) and checks that the transfer matrix maps each sample back into the
/// open cone. Any violation certifies the triple is not universal; zero
/// violations is evidence only.
SamplerReport invariance_sampler(const ParamTriple& p, long samples, std::uint64_t seed);

/// Relative margin of v against the open cone: negative outside.
double cone_margin(const Vec3& v);

Triangle sample_triangle(std::uint64_t seed, std::uint64_t index);
Triangle sample_boundary_biased_triangle(std::uint64_t seed, std::uint64_t index);

}  // namespace ceva
