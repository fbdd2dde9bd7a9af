#include "ceva/limiting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ceva {

int face_token(Face f) {
  switch (f) {
    case Face::a_eq_bc: return 8;
    case Face::b_eq_ca: return 9;
    case Face::c_eq_ab: return 10;
  }
  return 0;
}

std::optional<Face> face_from_token(int tok) {
  switch (tok) {
    case 8: return Face::a_eq_bc;
    case 9: return Face::b_eq_ca;
    case 10: return Face::c_eq_ab;
    default: return std::nullopt;
  }
}

DesignatedLine designated_line(Face f, int point_index) {
  if (point_index < 1 || point_index > 4)
    throw domain_error("limiting: level point index must be 1..4");
  // rows: face; columns: p11, p12, p21, p22
  static constexpr DesignatedLine table[3][4] = {
      {{LinePair::positive_slope, -1}, {LinePair::positive_slope, +1},
       {LinePair::negative_slope, -1}, {LinePair::negative_slope, +1}},
      {{LinePair::positive_slope, +1}, {LinePair::positive_slope, -1},
       {LinePair::negative_slope, +1}, {LinePair::negative_slope, -1}},
      {{LinePair::negative_slope, +1}, {LinePair::negative_slope, -1},
       {LinePair::positive_slope, +1}, {LinePair::positive_slope, -1}},
  };
  return table[static_cast<int>(f)][point_index - 1];
}

Cross cross_build(Face f, double t, double tau) {
  if (!(t > 0)) throw domain_error("limiting: t must be positive");
  const CrossCoeffs<double> k = cross_coeffs(f, t, tau);
  Cross cr;
  cr.family = f;
  cr.t = t;
  cr.tau = tau;
  cr.a = k.a; cr.b = k.b; cr.c = k.c; cr.d = k.d; cr.g = k.g;
  cr.center = {k.b / k.a, k.d / k.c};
  const double ga = std::fabs(k.g / k.a), gc = std::fabs(k.g / k.c);
  cr.marks = {Point2{cr.center.x + ga, cr.center.y}, Point2{cr.center.x, cr.center.y + gc},
              Point2{cr.center.x - ga, cr.center.y}, Point2{cr.center.x, cr.center.y - gc}};
  const double s = k.a / k.c;
  // pos pair: c y = a x - b + d +- g; neg pair: c y = -(a x - b) + d +- g
  cr.lines = {Line2{s, (-k.b + k.d - k.g) / k.c}, Line2{s, (-k.b + k.d + k.g) / k.c},
              Line2{-s, (k.b + k.d - k.g) / k.c}, Line2{-s, (k.b + k.d + k.g) / k.c}};
  cr.degenerate = std::fabs(k.g) <= 1e-12 * (1.0 + std::fabs(tau) + t);
  return cr;
}

namespace {

// u = a rho - b, v = c sigma - d; the cross is
// min(|u-v|, |u+v|) <= |g| <= |u| + |v|.
struct UV {
  double u, v, g;
};

UV uv_of(double rho, double sigma, const Cross& cr) {
  return {cr.a * rho - cr.b, cr.c * sigma - cr.d, std::fabs(cr.g)};
}

}  // namespace

bool in_cross(double rho, double sigma, const Cross& cr) {
  const UV s = uv_of(rho, sigma, cr);
  const double x = std::fabs(s.u), y = std::fabs(s.v);
  return std::fabs(x - y) <= s.g && s.g <= x + y;
}

bool in_cross_geometric(double rho, double sigma, const Cross& cr) {
  const UV s = uv_of(rho, sigma, cr);
  const bool in_slab = std::fabs(s.u - s.v) <= s.g || std::fabs(s.u + s.v) <= s.g;
  const bool in_nucleus = std::fabs(s.u) + std::fabs(s.v) < s.g;
  return in_slab && !in_nucleus;
}

double cross_violation(double rho, double sigma, const Cross& cr) {
  const UV s = uv_of(rho, sigma, cr);
  const double x = std::fabs(s.u), y = std::fabs(s.v);
  const double margin = std::min(s.g - std::fabs(x - y), x + y - s.g);
  const double scale = x + y + s.g;
  if (margin >= 0 || scale == 0) return 0.0;
  return -margin / scale;
}

template <>
std::pair<Face, double> face_for_slope(const double& m) {
  if (std::fabs(m) <= 1e-12 || std::fabs(m - 1.0) <= 1e-12)
    throw domain_error("limiting: slope must avoid {0, 1}");
  if (m > 1.0) return {Face::a_eq_bc, 1.0 / (m - 1.0)};
  if (m > 0.0) return {Face::b_eq_ca, 1.0 / m - 1.0};
  return {Face::c_eq_ab, -m};
}

Cross cross_for_slope(double m, double tau) {
  const auto [face, t] = face_for_slope(m);
  return cross_build(face, t, tau);
}

bool eq11_check(double rho, double sigma, double tau, double eps) {
  const double lhs = std::fabs(rho * (1.0 - tau) - 1.0);
  const double rhs = std::fabs(-sigma * tau + tau - 1.0);
  return std::fabs(lhs - rhs) <= eps * (lhs + rhs + 1.0);
}

bool eq11_check(const Quad& rho, const Quad& sigma, const Quad& tau) {
  const Quad one(1);
  const Quad lhs = abs_of(rho * (one - tau) - one);
  const Quad rhs = abs_of(tau - sigma * tau - one);
  return lhs == rhs;
}

P0Condition p0_condition(double tau) {
  if (std::fabs(tau) < 1e-12 || std::fabs(tau - 1.0) < 1e-12)
    throw domain_error("limiting: level must avoid tau in {0, 1}");
  const double phi = ScalarOps<double>::phi();
  const double phi_inv = ScalarOps<double>::phi_inv();
  const double phi_sq = ScalarOps<double>::phi_sq();
  const double phi_inv_sq = ScalarOps<double>::phi_inv_sq();
  P0Condition r;
  r.in_closed = (tau >= -phi && tau <= -phi_inv) || (tau >= phi_inv_sq && tau <= phi_inv) ||
                (tau >= phi && tau <= phi_sq);
  r.in_open = (tau > -phi && tau < -phi_inv) || (tau > phi_inv_sq && tau < phi_inv) ||
              (tau > phi && tau < phi_sq);
  return r;
}

P0Condition p0_condition(const Quad& tau) {
  if (tau.is_zero() || tau == Quad(1))
    throw domain_error("limiting: level must avoid tau in {0, 1}");
  const Quad phi = Quad::phi(), phi_inv = Quad::phi_inv();
  const Quad phi_sq = Quad::phi_sq(), phi_inv_sq = Quad::phi_inv_sq();
  P0Condition r;
  r.in_closed = (tau >= -phi && tau <= -phi_inv) || (tau >= phi_inv_sq && tau <= phi_inv) ||
                (tau >= phi && tau <= phi_sq);
  r.in_open = (tau > -phi && tau < -phi_inv) || (tau > phi_inv_sq && tau < phi_inv) ||
              (tau > phi && tau < phi_sq);
  return r;
}

LevelPoints level_points(double tau) {
  LevelPoints lp;
  auto pt = [](std::pair<double, double> p) { return Point2{p.first, p.second}; };
  lp.p11 = pt(level_point(1, tau));
  lp.p12 = pt(level_point(2, tau));
  lp.p21 = pt(level_point(3, tau));
  lp.p22 = pt(level_point(4, tau));
  auto unit = [](Point2 d) {
    const double n = std::hypot(d.x, d.y);
    return Point2{d.x / n, d.y / n};
  };
  lp.dir1 = unit({lp.p12.x - lp.p11.x, lp.p12.y - lp.p11.y});
  lp.dir2 = unit({lp.p22.x - lp.p21.x, lp.p22.y - lp.p21.y});
  if (std::fabs(tau) > 1e-12 && std::fabs(tau - 1.0) > 1e-12) {
    lp.has_p0 = true;
    lp.p0 = {1.0 / (1.0 - tau), 1.0 - 1.0 / tau};
  }
  if (std::fabs(tau) > 1e-12) lp.slope1 = 1.0 - 1.0 / tau;
  return lp;
}

std::vector<double> t_grid(const GridSpec& spec) {
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    const double u = spec.lo + (spec.hi - spec.lo) * i / (spec.n - 1);
    ts.push_back(std::pow(10.0, u));
  }
  return ts;
}

namespace {

double face_rel_margin(Face f, double t, double tau, double rho, double sigma) {
  const CrossCoeffs<double> k = cross_coeffs(f, t, tau);
  const double x = std::fabs(k.a * rho - k.b);
  const double y = std::fabs(k.c * sigma - k.d);
  const double z = std::fabs(k.g);
  const double scale = x + y + z;
  // all three arms vanish together only at the line-intersection point; within
  // rounding of that common zero the quotient is pure noise, and the true
  // margin there is nonnegative
  const double coeff_scale = std::fabs(k.a * rho) + std::fabs(k.b) + std::fabs(k.c * sigma) +
                             std::fabs(k.d) + std::fabs(k.g) + 1e-300;
  if (scale <= 1e-11 * coeff_scale) return 0.0;
  return std::min(z - std::fabs(x - y), x + y - z) / scale;
}

// Violations can hide in t-windows narrower than the grid step (they shrink
// linearly as a candidate approaches a member point), so each sampled local
// minimum of the margin-in-t curve is refined in log-t before trusting it.
double refine_t_dip(Face f, double u_lo, double u_hi, double tau, double rho, double sigma) {
  auto at = [&](double u) { return face_rel_margin(f, std::pow(10.0, u), tau, rho, sigma); };
  double best = at(0.5 * (u_lo + u_hi));
  const int subs = 32;
  double bu = 0.5 * (u_lo + u_hi);
  for (int i = 0; i <= subs; ++i) {
    const double u = u_lo + (u_hi - u_lo) * i / subs;
    const double m = at(u);
    if (m < best) {
      best = m;
      bu = u;
    }
  }
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = std::max(u_lo, bu - (u_hi - u_lo) / subs);
  double hi = std::min(u_hi, bu + (u_hi - u_lo) / subs);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = at(x1), f2 = at(x2);
  for (int i = 0; i < 60; ++i) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = at(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = at(x2);
    }
  }
  return std::min(best, std::min(f1, f2));
}

}  // namespace

namespace {

// Positive t at which one of the three absolute-value arms of the face
// inequality vanishes. Violations concentrate around these, so they seed the
// dip refinement regardless of how narrow the violating window is.
void critical_ts(Face f, double tau, double rho, double sigma, std::vector<double>& out) {
  out.clear();
  auto push = [&](double t) {
    if (std::isfinite(t) && t > 1e-12 && t < 1e12) out.push_back(t);
  };
  switch (f) {
    case Face::a_eq_bc:
      if (rho != 0) push((1.0 - rho) / rho);
      if (sigma != 1) push(1.0 / (sigma - 1.0));
      push(-tau);
      break;
    case Face::b_eq_ca:
      push(-rho);
      if (sigma != 0) push(1.0 / sigma - 1.0);
      if (tau != 1) push(1.0 / (tau - 1.0));
      break;
    case Face::c_eq_ab:
      if (rho != 1) push(1.0 / (rho - 1.0));
      push(-sigma);
      if (tau != 0) push(1.0 / tau - 1.0);
      break;
  }
}

}  // namespace

double worst_violation(double rho, double sigma, double tau, const std::vector<double>& ts,
                       double cap) {
  double worst = 0.0;
  const std::size_t n = ts.size();
  const double coarse_step = n > 1 ? (std::log10(ts.back()) - std::log10(ts.front())) / (n - 1) : 0.025;
  std::vector<double> m(n), crit;
  for (const Face f : {Face::a_eq_bc, Face::b_eq_ca, Face::c_eq_ab}) {
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = face_rel_margin(f, ts[i], tau, rho, sigma);
      if (-m[i] > worst) {
        worst = -m[i];
        if (worst >= cap) return worst;
      }
    }
    constexpr double kDipThreshold = 0.5;
    int refinements = 0;
    for (std::size_t i = 1; i + 1 < n && refinements < 64; ++i) {
      if (m[i] > kDipThreshold) continue;
      const bool strict_min = (m[i] <= m[i - 1] && m[i] < m[i + 1]) ||
                              (m[i] < m[i - 1] && m[i] <= m[i + 1]);
      if (!strict_min) continue;
      ++refinements;
      const double dip = refine_t_dip(f, std::log10(ts[i - 1]), std::log10(ts[i + 1]), tau, rho, sigma);
      if (-dip > worst) {
        worst = -dip;
        if (worst >= cap) return worst;
      }
    }
    critical_ts(f, tau, rho, sigma, crit);
    for (const double tc : crit) {
      const double u = std::log10(tc);
      const double dip = refine_t_dip(f, u - coarse_step, u + coarse_step, tau, rho, sigma);
      if (-dip > worst) {
        worst = -dip;
        if (worst >= cap) return worst;
      }
    }
  }
  return worst;
}

namespace {

struct LineParam {
  Point2 anchor, dir;
  Point2 at(double s) const { return {anchor.x + s * dir.x, anchor.y + s * dir.y}; }
};

// Minimum of f on [lo, hi] by golden-section; f is V-shaped (possibly with a
// flat floor) around each isolated survivor.
template <class F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, int iters) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// The t grid cannot distinguish points closer to a member than roughly the
// smallest t it contains, so survivors come in plateaus; bisect both plateau
// edges and report the midpoint.
template <class F>
double plateau_center(F&& f, double s_good, double lo_bound, double hi_bound, double tol) {
  auto edge = [&](double good, double bad) {
    for (int i = 0; i < 60; ++i) {
      const double mid = 0.5 * (good + bad);
      (f(mid) <= tol ? good : bad) = mid;
    }
    return good;
  };
  const double lo = f(lo_bound) <= tol ? lo_bound : edge(s_good, lo_bound);
  const double hi = f(hi_bound) <= tol ? hi_bound : edge(s_good, hi_bound);
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<LevelSetPoint> bruteforce_level_set(double tau, const GridSpec& tgrid,
                                                const GridSpec& sgrid, double cluster_radius) {
  if (!std::isfinite(tau)) throw domain_error("limiting: non-finite level");
  const std::vector<double> ts = t_grid(tgrid);
  const LevelPoints lp = level_points(tau);

  constexpr double kAcceptTol = 1e-8;
  constexpr double kPlateauTol = 1e-9;

  std::vector<LevelSetPoint> specials;
  auto try_special = [&](Point2 p, const char* label) {
    const double v = worst_violation(p.x, p.y, tau, ts);
    if (v <= kAcceptTol) specials.push_back({p, v, true, label});
  };
  try_special(lp.p11, "p11");
  try_special(lp.p12, "p12");
  try_special(lp.p21, "p21");
  try_special(lp.p22, "p22");
  if (lp.has_p0) try_special(lp.p0, "p0");

  std::vector<Point2> recovered;
  std::vector<double> recovered_violation;

  const LineParam lines[2] = {{{0.5 * (lp.p11.x + lp.p12.x), 0.5 * (lp.p11.y + lp.p12.y)}, lp.dir1},
                              {{0.5 * (lp.p21.x + lp.p22.x), 0.5 * (lp.p21.y + lp.p22.y)}, lp.dir2}};
  for (const LineParam& line : lines) {
    auto f = [&](double s) {
      const Point2 p = line.at(s);
      return worst_violation(p.x, p.y, tau, ts);
    };
    const int n = sgrid.n;
    std::vector<double> sv(static_cast<std::size_t>(n)), fv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      sv[static_cast<std::size_t>(i)] = sgrid.lo + (sgrid.hi - sgrid.lo) * i / (n - 1);
      fv[static_cast<std::size_t>(i)] = f(sv[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i + 1 < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      if (fv[k] > 0.5 || fv[k] > fv[k - 1] || fv[k] > fv[k + 1]) continue;
      auto [s_min, f_min] = golden_min(f, sv[k - 1], sv[k + 1], 90);
      if (f_min > kAcceptTol) continue;
      const double s_mid = plateau_center(f, s_min, sv[k - 1], sv[k + 1], kPlateauTol);
      const double f_mid = f(s_mid);
      // keep the plateau center only while it still survives everything
      const double s_best = f_mid <= kAcceptTol ? s_mid : s_min;
      recovered.push_back(line.at(s_best));
      recovered_violation.push_back(f(s_best));
    }
  }

  // cluster: recovered points collapse onto the surviving distinguished
  // points first, then onto each other
  std::vector<LevelSetPoint> out = specials;
  auto near = [&](Point2 a, Point2 b) {
    return std::hypot(a.x - b.x, a.y - b.y) <= cluster_radius;
  };
  for (std::size_t i = 0; i < recovered.size(); ++i) {
    bool merged = false;
    for (const LevelSetPoint& s : out)
      if (near(recovered[i], s.pt)) {
        merged = true;
        break;
      }
    if (!merged) out.push_back({recovered[i], recovered_violation[i], false, ""});
  }
  return out;
}

std::optional<Cross> eliminate_point(double rho, double sigma, double tau) {
  const LevelPoints lp = level_points(tau);
  const double scale = 1.0 + std::fabs(rho) + std::fabs(sigma) + std::fabs(tau);
  const Point2 x{rho, sigma};

  auto dist_to_line = [](Point2 p, Point2 anchor, Point2 dir) {
    return std::fabs((p.x - anchor.x) * dir.y - (p.y - anchor.y) * dir.x);
  };
  const double d1 = dist_to_line(x, lp.p11, lp.dir1);
  const double d2 = dist_to_line(x, lp.p21, lp.dir2);
  if (std::min(d1, d2) > 1e-9 * scale)
    throw domain_error("limiting: eliminate_point requires a point on one of the two candidate lines");

  std::vector<Point2> specials{lp.p11, lp.p12, lp.p21, lp.p22};
  if (lp.has_p0) specials.push_back(lp.p0);
  for (const Point2& s : specials)
    if (std::hypot(x.x - s.x, x.y - s.y) <= 1e-9 * scale) return std::nullopt;

  constexpr double kExcludeTol = 1e-9;
  const double m_line = lp.slope1.value_or(std::numeric_limits<double>::infinity());

  auto try_slope = [&](double m) -> std::optional<Cross> {
    if (!std::isfinite(m)) return std::nullopt;
    if (std::fabs(m) <= 1e-6 || std::fabs(m - 1.0) <= 1e-6) return std::nullopt;
    if (std::fabs(m - m_line) <= 1e-9) return std::nullopt;  // degenerate cross excludes nothing new
    const Cross cr = cross_for_slope(m, tau);
    if (cr.degenerate) return std::nullopt;
    if (cross_violation(rho, sigma, cr) > kExcludeTol) return cr;
    return std::nullopt;
  };

  // the strategic slopes of the case analysis: lines through the point and a
  // distinguished point, the mirrored line slope, each nudged a little
  std::vector<double> slopes;
  auto add_with_nudges = [&](double m) {
    for (const double d : {0.0, 1e-3, -1e-3, 1e-2, -1e-2, 0.1, -0.1}) {
      slopes.push_back(m + d);
      slopes.push_back(m * (1.0 + d));
    }
  };
  if (lp.slope1) add_with_nudges(-*lp.slope1);
  for (const Point2& p : {lp.p11, lp.p12, lp.p21, lp.p22}) {
    if (std::fabs(p.x - x.x) > 1e-12) add_with_nudges((p.y - x.y) / (p.x - x.x));
  }
  for (int i = 0; i <= 400; ++i) {
    const double u = -2.0 + 4.0 * i / 400.0;
    slopes.push_back(std::pow(10.0, u));
    slopes.push_back(-std::pow(10.0, u));
  }
  for (const double m : slopes)
    if (auto cr = try_slope(m)) return cr;

  // extreme-parameter crosses of all three faces
  for (const Face f : {Face::a_eq_bc, Face::b_eq_ca, Face::c_eq_ab})
    for (const double t : {1e-6, 1e-4, 1e-2, 1.0, 1e2, 1e4, 1e6}) {
      const Cross cr = cross_build(f, t, tau);
      if (!cr.degenerate && cross_violation(rho, sigma, cr) > kExcludeTol) return cr;
    }
  return std::nullopt;
}

}  // namespace ceva
