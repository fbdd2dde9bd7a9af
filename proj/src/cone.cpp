#include "ceva/cone.hpp"

#include <algorithm>
#include <cmath>

#include "ceva/rng.hpp"

namespace ceva {

namespace {

double lin_scale(const Vec3& v) { return std::fabs(v.x) + std::fabs(v.y) + std::fabs(v.z); }

bool open_squares(const Vec3& v) {
  return v.x > 0 && v.y > 0 && v.z > 0 && cone_form(v) > 0;
}

bool boundary_squares(const Vec3& v, double eps) {
  const double lin = lin_scale(v);
  return std::fabs(cone_form(v)) <= eps * lin * lin &&
         v.x >= -eps * lin && v.y >= -eps * lin && v.z >= -eps * lin;
}

bool open_aux(const Vec3& v) {
  return v.y > 0 && v.z > 0 && 4.0 * v.y * v.z - v.x * v.x > 0;
}

bool boundary_aux(const Vec3& v, double eps) {
  const double lin = lin_scale(v);
  return std::fabs(4.0 * v.y * v.z - v.x * v.x) <= eps * lin * lin &&
         v.y >= -eps * lin && v.z >= -eps * lin;
}

}  // namespace

bool in_squares_cone(const Vec3& v, Region r, double eps) {
  switch (r) {
    case Region::open: return open_squares(v);
    case Region::boundary: return boundary_squares(v, eps);
    case Region::closed: return open_squares(v) || boundary_squares(v, eps);
  }
  return false;
}

bool in_squares_cone(const Vec3Q& v, Region r) {
  const int fx = v.x.sign(), fy = v.y.sign(), fz = v.z.sign();
  const int form = cone_form(v).sign();
  const bool open = fx > 0 && fy > 0 && fz > 0 && form > 0;
  const bool boundary = form == 0 && fx >= 0 && fy >= 0 && fz >= 0;
  switch (r) {
    case Region::open: return open;
    case Region::boundary: return boundary;
    case Region::closed: return open || boundary;
  }
  return false;
}

bool in_aux_cone(const Vec3& v, Region r, double eps) {
  switch (r) {
    case Region::open: return open_aux(v);
    case Region::boundary: return boundary_aux(v, eps);
    case Region::closed: return open_aux(v) || boundary_aux(v, eps);
  }
  return false;
}

bool in_aux_cone(const Vec3Q& v, Region r) {
  const int fy = v.y.sign(), fz = v.z.sign();
  const int form = (Quad(4) * v.y * v.z - v.x * v.x).sign();
  const bool open = fy > 0 && fz > 0 && form > 0;
  const bool boundary = form == 0 && fy >= 0 && fz >= 0;
  switch (r) {
    case Region::open: return open;
    case Region::boundary: return boundary;
    case Region::closed: return open || boundary;
  }
  return false;
}

Vec3 squares_map(const Triangle& t) { return {t.a * t.a, t.b * t.b, t.c * t.c}; }

RotationReport<Quad> rotation_check(const Quad& tau) {
  const Mat3Q m = transfer_matrix<Quad>({tau, tau, tau});
  const Quad s = tau * tau - tau + Quad(1);
  RotationReport<Quad> r;
  r.scale = s;
  r.mtm_ok = (m.transpose() * m == (s * s) * Mat3Q::identity());
  r.det_ok = (m.det() == s * s * s);
  const Vec3Q ones{Quad(1), Quad(1), Quad(1)};
  r.axis_ok = (m * ones == s * ones);
  return r;
}

RotationReport<double> rotation_check(double tau, double tol) {
  const Mat3 m = transfer_matrix<double>({tau, tau, tau});
  const double s = tau * tau - tau + 1.0;
  const double scale = std::max(1.0, s * s);
  RotationReport<double> r;
  r.scale = s;
  r.mtm_ok = norm_inf(m.transpose() * m - (s * s) * Mat3::identity()) <= tol * scale;
  r.det_ok = std::fabs(m.det() - s * s * s) <= tol * std::max(1.0, std::fabs(s * s * s));
  const Vec3 ones{1, 1, 1};
  const Vec3 ax = m * ones - s * ones;
  r.axis_ok = lin_scale(ax) <= tol * std::max(1.0, std::fabs(s));
  return r;
}

bool in_golden_intervals(double tau) {
  const double phi = ScalarOps<double>::phi();
  const double phi_inv = ScalarOps<double>::phi_inv();
  const double phi_sq = ScalarOps<double>::phi_sq();
  const double phi_inv_sq = ScalarOps<double>::phi_inv_sq();
  return (tau > -phi && tau < -phi_inv) || (tau > phi_inv_sq && tau < phi_inv) ||
         (tau > phi && tau < phi_sq);
}

bool in_golden_intervals(const Quad& tau) {
  const Quad phi = Quad::phi(), phi_inv = Quad::phi_inv();
  const Quad phi_sq = Quad::phi_sq(), phi_inv_sq = Quad::phi_inv_sq();
  return (tau > -phi && tau < -phi_inv) || (tau > phi_inv_sq && tau < phi_inv) ||
         (tau > phi && tau < phi_sq);
}

RankOneReport<Quad> rank_one_case(const Quad& tau) {
  if (tau.is_zero() || tau == Quad(1))
    throw domain_error("cone: rank-one case requires tau outside {0, 1}");
  const Quad one(1);
  const Quad rho = (one - tau).inverse();
  const Quad sigma = one - tau.inverse();
  const Mat3Q m = transfer_matrix<Quad>({rho, sigma, tau});

  RankOneReport<Quad> r;
  r.null1 = {one - tau, Quad(0), one};
  r.null2 = {tau - one, tau, Quad(0)};
  const Vec3Q zero{Quad(0), Quad(0), Quad(0)};
  r.null_ok = (m * r.null1 == zero) && (m * r.null2 == zero);

  r.eigvec = {tau / (tau - one), one - tau.inverse(), tau * (tau - one)};
  const Quad t2 = tau * tau, t3 = t2 * tau;
  const Quad num = t3 * t3 - Quad(3) * t3 * t2 + Quad(3) * t2 * t2 - t3 + Quad(3) * t2 -
                   Quad(3) * tau + one;
  r.eigval = num / ((tau - one) * (tau - one) * t2);
  r.eig_ok = (m * r.eigvec == r.eigval * r.eigvec);

  r.cos_ok = interval_sextic(Quad(2) * tau - one).sign() > 0;
  r.in_intervals = in_golden_intervals(tau);
  r.eigvec_in_open_cone =
      in_squares_cone(r.eigvec, Region::open) || in_squares_cone(-r.eigvec, Region::open);
  r.eigvec_on_cone_boundary =
      in_squares_cone(r.eigvec, Region::boundary) || in_squares_cone(-r.eigvec, Region::boundary);
  return r;
}

RankOneReport<double> rank_one_case(double tau, double tol) {
  if (std::fabs(tau) < 1e-12 || std::fabs(tau - 1.0) < 1e-12)
    throw domain_error("cone: rank-one case requires tau outside {0, 1}");
  const Mat3 m = transfer_matrix<double>({1.0 / (1.0 - tau), 1.0 - 1.0 / tau, tau});
  const double scale = 1.0 + norm_inf(m);

  RankOneReport<double> r;
  r.null1 = {1.0 - tau, 0.0, 1.0};
  r.null2 = {tau - 1.0, tau, 0.0};
  r.null_ok = lin_scale(m * r.null1) <= tol * scale * lin_scale(r.null1) &&
              lin_scale(m * r.null2) <= tol * scale * lin_scale(r.null2);

  r.eigvec = {tau / (tau - 1.0), 1.0 - 1.0 / tau, tau * (tau - 1.0)};
  const double t2 = tau * tau, t3 = t2 * tau;
  r.eigval = (t3 * t3 - 3.0 * t3 * t2 + 3.0 * t2 * t2 - t3 + 3.0 * t2 - 3.0 * tau + 1.0) /
             ((tau - 1.0) * (tau - 1.0) * t2);
  r.eig_ok = lin_scale(m * r.eigvec - r.eigval * r.eigvec) <=
             tol * scale * (1.0 + std::fabs(r.eigval)) * lin_scale(r.eigvec);

  r.cos_ok = interval_sextic(2.0 * tau - 1.0) > 0;
  r.in_intervals = in_golden_intervals(tau);
  r.eigvec_in_open_cone =
      in_squares_cone(r.eigvec, Region::open) || in_squares_cone(-r.eigvec, Region::open);
  r.eigvec_on_cone_boundary = in_squares_cone(r.eigvec, Region::boundary, tol) ||
                              in_squares_cone(-r.eigvec, Region::boundary, tol);
  return r;
}

const Mat3Q& cone_change_of_basis() {
  static const Mat3Q b = Mat3Q::from_cols({Quad(-1), Quad(1), Quad(1)},
                                          {Quad(1), Quad::phi_inv_sq(), Quad::phi_sq()},
                                          {Quad(1), Quad::phi_sq(), Quad::phi_inv_sq()});
  return b;
}

DiagReport line_family_diagonalize(const Quad& xi) {
  DiagReport r;
  r.xi = xi;
  if (xi == -Quad::phi_inv()) {
    r.deferred = true;
    r.deferred_tau = Quad::phi_sq();
    return r;
  }
  if (xi == Quad::phi()) {
    r.deferred = true;
    r.deferred_tau = Quad::phi_inv_sq();
    return r;
  }
  const Quad one(1);
  r.M = transfer_matrix<Quad>({xi, -xi, Quad(2) - xi});
  r.B = cone_change_of_basis();
  const Quad d1 = xi * xi - xi - one;
  const Quad e2 = Quad::phi_sq() - one - xi;
  const Quad e3 = Quad::phi_inv_sq() - one - xi;
  const Quad d2 = e2 * e2, d3 = e3 * e3;
  r.D = Mat3Q{};
  r.D[0][0] = d1;
  r.D[1][1] = d2;
  r.D[2][2] = d3;
  r.similar_ok = (inverse_exact(r.B) * r.M * r.B == r.D);
  r.product_identity = (d2 * d3 == d1 * d1);
  r.tail_positive = d2.sign() > 0 && d3.sign() > 0;
  return r;
}

Triangle sample_triangle(std::uint64_t seed, std::uint64_t index) {
  SampleRng rng(seed, index);
  // two decades of side lengths and an interior position parameter keep the
  // relative margin genuine; near-degenerate shapes come from the
  // boundary-biased sampler instead
  for (int tries = 0; tries < 100; ++tries) {
    const double b = rng.log10_uniform(-1, 1);
    const double c = rng.log10_uniform(-1, 1);
    const double u = rng.uniform(0.01, 0.99);
    const double lo = std::fabs(b - c), hi = b + c;
    const double a = lo + u * (hi - lo);
    if (in_triangle_set(a, b, c)) return {a, b, c};
  }
  return {1.0, 1.0, 1.0};
}

Triangle sample_boundary_biased_triangle(std::uint64_t seed, std::uint64_t index) {
  SampleRng rng(seed, index);
  for (int tries = 0; tries < 100; ++tries) {
    const double b = rng.log10_uniform(-2, 2);
    const double c = rng.log10_uniform(-2, 2);
    const double delta = rng.log10_uniform(-12, -2);
    const double a = (b + c) * (1.0 - delta);
    if (in_triangle_set(a, b, c)) return {a, b, c};
  }
  return {1.0, 1.0, 1.0};
}

TransportReport cone_transport_check(long samples, std::uint64_t seed) {
  TransportReport rep;
  rep.samples = samples;
  rep.seed = seed;
  Mat3 b_f, binv_f;
  {
    const Mat3Q& b = cone_change_of_basis();
    const Mat3Q binv = inverse_exact(b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        b_f[i][j] = b[i][j].to_double();
        binv_f[i][j] = binv[i][j].to_double();
      }
  }
  for (long i = 0; i < samples; ++i) {
    SampleRng rng(seed, static_cast<std::uint64_t>(i));
    // forward: a point of the auxiliary cone, kept off the boundary far
    // enough that rounding cannot flip the verdict
    const double v = rng.log10_uniform(-2, 2);
    const double w = rng.log10_uniform(-2, 2);
    const double s = rng.uniform(-1.0 + 1e-9, 1.0 - 1e-9);
    const Vec3 q0{s * 2.0 * std::sqrt(v * w), v, w};
    const Vec3 img = b_f * q0;
    if (!in_squares_cone(img, Region::closed, 1e-12)) ++rep.forward_violations;

    // cone_form is oriented positive inside, so the transported quadratic
    // form equals 5(4vw - u^2)
    const double lhs = cone_form(img);
    const double rhs = 5.0 * (4.0 * q0.y * q0.z - q0.x * q0.x);
    const double qscale = lin_scale(img) * lin_scale(img);
    const double rel = std::fabs(lhs - rhs) / std::max(qscale, 1e-300);
    rep.worst_identity_rel = std::max(rep.worst_identity_rel, rel);

    // backward: squares of a random triangle, mapped down
    const Triangle t = sample_triangle(seed ^ 0xA5A5A5A5A5A5A5A5ULL, static_cast<std::uint64_t>(i));
    const Vec3 back = binv_f * squares_map(t);
    if (!in_aux_cone(back, Region::closed, 1e-12)) ++rep.backward_violations;
  }
  return rep;
}

double cone_margin(const Vec3& v) {
  const double lin = lin_scale(v);
  if (lin == 0) return -1.0;
  const double form_rel = cone_form(v) / (lin * lin);
  const double pos_rel = std::min({v.x, v.y, v.z}) / lin;
  return std::min(form_rel, pos_rel);
}

SamplerReport invariance_sampler(const ParamTriple& p, long samples, std::uint64_t seed) {
  if (samples < 1) throw domain_error("cone: invariance sampler needs at least one sample");
  const Mat3 m = transfer_matrix(p);
  const double m_norm = norm_inf(m);
  SamplerReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.worst_margin = 1.0;
  for (long i = 0; i < samples; ++i) {
    const Triangle t = (i % 2 == 0)
                           ? sample_triangle(seed, static_cast<std::uint64_t>(i))
                           : sample_boundary_biased_triangle(seed, static_cast<std::uint64_t>(i));
    const Vec3 q = squares_map(t);
    const Vec3 w = m * q;
    const double margin = cone_margin(w);
    rep.worst_margin = std::min(rep.worst_margin, margin);
    // a violation must exceed the forward-error bound of its own evaluation
    // (near-kernel samples amplify round-off by |M| |q| / |Mq|), so that each
    // one certifies non-membership
    const double q_lin = std::fabs(q.x) + std::fabs(q.y) + std::fabs(q.z);
    const double w_lin = lin_scale(w);
    const double amplification = w_lin > 0 ? m_norm * q_lin / w_lin : 1e300;
    const double cert = std::max(1e-13, 1e-14 * amplification);
    if (margin < -cert) {
      ++rep.violations;
      if (!rep.first_violation) rep.first_violation = q;
    }
  }
  return rep;
}

}  // namespace ceva
