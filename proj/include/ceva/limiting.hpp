#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ceva/geometry.hpp"

namespace ceva {

/// The three one-parameter limiting inequalities, one per face of the closed
/// triangle set: a = b+c (t = b/c), b = c+a (t = c/a), c = a+b (t = a/b).
/// External interfaces label them 8, 9 and 10.
enum class Face { a_eq_bc, b_eq_ca, c_eq_ab };

int face_token(Face f);                        // 8, 9 or 10
std::optional<Face> face_from_token(int tok);

/// Coefficients of the generic two-sided inequality
/// ||a x - b| - |c y - d|| <= |g| <= |a x - b| + |c y - d| realised by the
/// selected face at parameter t and level tau. a and c are positive for t > 0.
template <class S>
struct CrossCoeffs {
  S a, b, c, d, g;
};

template <class S>
CrossCoeffs<S> cross_coeffs(Face f, const S& t, const S& tau) {
  const S one(1);
  switch (f) {
    case Face::a_eq_bc: return {t + one, one, t, t + one, tau + t};
    case Face::b_eq_ca: return {one, -t, t + one, one, tau * t - t - one};
    case Face::c_eq_ab: return {t, t + one, one, -t, tau * (t + one) - one};
  }
  throw domain_error("limiting: bad face");
}

template <class S>
struct IneqSlack {
  bool holds;      // non-strict two-sided inequality satisfied
  S slack_lo;      // middle - lower bound
  S slack_hi;      // upper bound - middle
  S scale;         // |ax-b| + |cy-d| + |g|
};

/// Evaluates the selected limiting inequality directly (not via geometry).
template <class S>
IneqSlack<S> limiting_ineq(Face f, const S& t, const S& tau, const S& rho, const S& sigma) {
  if (sign_of(t) <= 0) throw domain_error("limiting: t must be positive");
  const CrossCoeffs<S> k = cross_coeffs(f, t, tau);
  const S x = abs_of(k.a * rho - k.b);
  const S y = abs_of(k.c * sigma - k.d);
  const S z = abs_of(k.g);
  const S lo = z - abs_of(x - y);
  const S hi = x + y - z;
  return {sign_of(lo) >= 0 && sign_of(hi) >= 0, lo, hi, x + y + z};
}

struct Point2 {
  double x = 0, y = 0;
};

struct Line2 {
  double slope = 0, intercept = 0;  // y = slope x + intercept
};

/// Which boundary line of a cross carries each of the four distinguished
/// points, and with which sign of the +-g/c offset.
enum class LinePair { positive_slope, negative_slope };
struct DesignatedLine {
  LinePair pair;
  int sign;  // -1 or +1
};
DesignatedLine designated_line(Face f, int point_index);  // point_index 1..4

/// The four distinguished points of a level, in the (rho, sigma) plane:
/// 1 -> (tau, tau), 2 -> (-tau, 2-tau), 3 -> (2-tau, -2+tau), 4 -> (2+tau, -tau).
template <class S>
std::pair<S, S> level_point(int index, const S& tau) {
  const S two(2);
  switch (index) {
    case 1: return {tau, tau};
    case 2: return {-tau, two - tau};
    case 3: return {two - tau, -two + tau};
    case 4: return {two + tau, -tau};
    default: throw domain_error("limiting: level point index must be 1..4");
  }
}

/// Signed residual of (x, y) against one boundary line, scaled by c so it is
/// polynomial in the coefficients; zero iff the point lies on the line.
template <class S>
S boundary_line_residual(const CrossCoeffs<S>& k, DesignatedLine which, const S& x, const S& y) {
  const S lhs = k.c * y - k.d - S(which.sign) * k.g;
  return which.pair == LinePair::positive_slope ? lhs - (k.a * x - k.b) : lhs + (k.a * x - k.b);
}

struct Cross {
  Face family;
  double t, tau;
  double a, b, c, d, g;
  Point2 center;                 // (b/a, d/c)
  std::array<Point2, 4> marks;   // center +- (|g/a|, 0), center +- (0, |g/c|)
  std::array<Line2, 4> lines;    // [pos -, pos +, neg -, neg +]
  bool degenerate;               // g = 0: the cross collapses to two lines
};

Cross cross_build(Face f, double t, double tau);

/// Direct evaluation of the defining two-sided inequality (non-strict).
bool in_cross(double rho, double sigma, const Cross& cr);

/// Same set, by geometry: inside one of the two slabs bounded by the parallel
/// line pairs, and not inside the open nucleus parallelogram.
bool in_cross_geometric(double rho, double sigma, const Cross& cr);

/// How badly (rho, sigma) violates the cross inequality, relative; 0 inside.
double cross_violation(double rho, double sigma, const Cross& cr);

/// The face and parameter whose cross has boundary lines of slope m through
/// the first pair of distinguished points (and -m through the second pair).
/// m in {0, 1} is a domain error.
template <class S>
std::pair<Face, S> face_for_slope(const S& m) {
  const S one(1);
  if (sign_of(m) == 0 || sign_of(m - one) == 0)
    throw domain_error("limiting: slope must avoid {0, 1}");
  if (sign_of(m - one) > 0) return {Face::a_eq_bc, (m - one).inverse()};
  if (sign_of(m) > 0) return {Face::b_eq_ca, m.inverse() - one};
  return {Face::c_eq_ab, -m};
}
template <>
std::pair<Face, double> face_for_slope(const double& m);

Cross cross_for_slope(double m, double tau);

/// True iff (rho, sigma) satisfies |rho(1-tau) - 1| = |-sigma tau + tau - 1|,
/// i.e. lies on the union of the two candidate lines of the level.
bool eq11_check(double rho, double sigma, double tau, double eps = kDefaultEps);
bool eq11_check(const Quad& rho, const Quad& sigma, const Quad& tau);

/// Whether the line-intersection point of a level can survive every cross:
/// tau against [-phi, -1/phi] u [1/phi^2, 1/phi] u [phi, phi^2], closed and
/// open variants. tau in {0, 1} is a domain error.
struct P0Condition {
  bool in_closed, in_open;
};
P0Condition p0_condition(double tau);
P0Condition p0_condition(const Quad& tau);

/// The five distinguished points and the two candidate lines of one level.
struct LevelPoints {
  Point2 p11, p12, p21, p22;
  bool has_p0 = false;
  Point2 p0;                      // intersection of the two lines, tau not in {0,1}
  Point2 dir1, dir2;              // unit directions of line 1 (p11->p12) and line 2 (p21->p22)
  std::optional<double> slope1;   // 1 - 1/tau when tau != 0 (slope of line 1; line 2 has -slope1)
};
LevelPoints level_points(double tau);

struct GridSpec {
  double lo, hi;
  int n;
};

inline constexpr GridSpec kDefaultTGrid{-6.0, 6.0, 481};     // log10 of t
inline constexpr GridSpec kDefaultSGrid{-12.0, 12.0, 4801};  // arclength along each line

struct LevelSetPoint {
  Point2 pt;
  double worst_violation;  // max over the t grid, relative; ~0 for members
  bool special;            // one of the five distinguished points
  std::string label;       // "p11".."p22", "p0", or "" for recovered grid points
};

/// Largest relative violation of the three limiting inequalities over the t
/// grid; members of the level set score (numerically) zero.
double worst_violation(double rho, double sigma, double tau, const std::vector<double>& ts,
                       double cap = 1.0);

std::vector<double> t_grid(const GridSpec& spec = kDefaultTGrid);

/// Brute-force level set at fixed tau: sweeps candidates along the two lines
/// (plus the five distinguished points), keeps survivors of all three
/// inequalities over the whole t grid, refines each survivor run by bisecting
/// its edges, and clusters the results to isolated points.
std::vector<LevelSetPoint> bruteforce_level_set(double tau, const GridSpec& tgrid = kDefaultTGrid,
                                                const GridSpec& sgrid = kDefaultSGrid,
                                                double cluster_radius = 1e-6);

/// Searches for a cross whose solution set excludes the given on-line point;
/// none for the five distinguished points (they survive every cross). A point
/// off both lines is a domain error.
std::optional<Cross> eliminate_point(double rho, double sigma, double tau);

}  // namespace ceva
