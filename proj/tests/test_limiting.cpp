#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ceva/geometry.hpp"
#include "ceva/limiting.hpp"
#include "ceva/rng.hpp"

using namespace ceva;

namespace {

Cross canonical_cross() {
  // a = c = g = 1, b = d = 0: marks at (+-1, 0), (0, +-1)
  Cross cr{};
  cr.a = 1; cr.b = 0; cr.c = 1; cr.d = 0; cr.g = 1;
  cr.center = {0, 0};
  cr.marks = {Point2{1, 0}, Point2{0, 1}, Point2{-1, 0}, Point2{0, -1}};
  cr.lines = {Line2{1, -1}, Line2{1, 1}, Line2{-1, -1}, Line2{-1, 1}};
  cr.degenerate = false;
  return cr;
}

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_CASE("face tokens") {
  CHECK(face_token(Face::a_eq_bc) == 8);
  CHECK(face_token(Face::b_eq_ca) == 9);
  CHECK(face_token(Face::c_eq_ab) == 10);
  CHECK(face_from_token(9) == Face::b_eq_ca);
  CHECK_FALSE(face_from_token(7).has_value());
}

TEST_CASE("limiting inequality evaluation") {
  SUBCASE("the diagonal point keeps one slack at exact zero") {
    for (int i = 0; i < 300; ++i) {
      SampleRng rng(51, static_cast<std::uint64_t>(i));
      const Quad t(rng.rational(30, 10).abs() + Rational(1, 9));
      const Quad tau(rng.rational(30, 10));
      const IneqSlack<Quad> ev = limiting_ineq(Face::a_eq_bc, t, tau, tau, tau);
      REQUIRE(ev.holds);
      REQUIRE((ev.slack_lo.is_zero() || ev.slack_hi.is_zero()));
    }
  }
  SUBCASE("published failing sample on the third face") {
    // (rho, sigma) = (2, 1), tau = 0, t = 1: |rho t - t - 1| = 0, |sigma + t| = 2,
    // middle 1: the lower bound fails
    const IneqSlack<double> ev = limiting_ineq(Face::c_eq_ab, 1.0, 0.0, 2.0, 1.0);
    CHECK_FALSE(ev.holds);
    CHECK(ev.slack_lo < 0);
  }
  SUBCASE("small t approaches the stated limit form") {
    SampleRng rng(52);
    for (int i = 0; i < 200; ++i) {
      const double rho = rng.uniform(-3, 3), tau = rng.uniform(-3, 3), sigma = rng.uniform(-3, 3);
      const IneqSlack<double> ev = limiting_ineq(Face::a_eq_bc, 1e-9, tau, rho, sigma);
      // limit of the bounds: ||rho - 1| - 1| <= |tau| <= |rho - 1| + 1
      const double x = std::fabs(rho - 1.0), z = std::fabs(tau);
      const bool limit_holds = std::fabs(x - 1.0) <= z + 1e-6 && z <= x + 1.0 + 1e-6;
      REQUIRE(ev.holds == limit_holds);
    }
  }
  CHECK_THROWS_AS(limiting_ineq(Face::a_eq_bc, 0.0, 1.0, 1.0, 1.0), domain_error);
  CHECK_THROWS_AS(limiting_ineq(Face::a_eq_bc, -1.0, 1.0, 1.0, 1.0), domain_error);
}

TEST_CASE("limiting inequality matches the degenerate-triangle reading of each face") {
  // on the closure face the cevians collapse to absolute values of affine
  // forms; the inequality is exactly the closed triangle test for that triple
  SampleRng rng(53);
  for (int i = 0; i < 2000; ++i) {
    const double t = rng.log10_uniform(-3, 3);
    const double rho = rng.uniform(-4, 4), sigma = rng.uniform(-4, 4), tau = rng.uniform(-4, 4);
    const struct {
      Face face;
      double xa, xb, xc;
    } cases[] = {
        // a = b + c with b/c = t: (|rho a - c|, |sigma b - a|, |tau c + b|), scaled by c = 1
        {Face::a_eq_bc, std::fabs(rho * (t + 1) - 1), std::fabs(sigma * t - t - 1),
         std::fabs(tau + t)},
        // b = c + a with c/a = t: (|rho a + c|, |sigma b - a|, |b - tau c|), scaled by a = 1
        {Face::b_eq_ca, std::fabs(rho + t), std::fabs(sigma * (t + 1) - 1),
         std::fabs(tau * t - t - 1)},
        // c = a + b with a/b = t: (|rho a - c|, |sigma b + a|, |b - tau c|), scaled by b = 1
        {Face::c_eq_ab, std::fabs(rho * t - t - 1), std::fabs(sigma + t),
         std::fabs(tau * (t + 1) - 1)},
    };
    for (const auto& k : cases) {
      const double margin =
          std::min({k.xa + k.xb - k.xc, k.xb + k.xc - k.xa, k.xc + k.xa - k.xb});
      const IneqSlack<double> ev = limiting_ineq(k.face, t, tau, rho, sigma);
      const double evmargin = std::min(ev.slack_lo, ev.slack_hi);
      REQUIRE(evmargin == doctest::Approx(margin).epsilon(1e-9));
      REQUIRE(ev.holds == (margin >= -1e-12 * (k.xa + k.xb + k.xc)));
    }
  }
}

TEST_CASE("near-face triangles extrapolate to the limiting margin") {
  SampleRng rng(54);
  for (int i = 0; i < 300; ++i) {
    const double t = rng.log10_uniform(-1, 1);
    const double rho = rng.uniform(-2, 2), sigma = rng.uniform(-2, 2), tau = rng.uniform(-2, 2);
    const IneqSlack<double> ev = limiting_ineq(Face::a_eq_bc, t, tau, rho, sigma);
    const double face_margin = std::min(ev.slack_lo, ev.slack_hi);
    // lift the face point slightly inside and compare cevian margins
    const double delta = 1e-7;
    const Triangle tri{(1.0 - delta) * (t + 1.0), t, 1.0};
    REQUIRE(in_triangle_set(tri.a, tri.b, tri.c));
    const TriangleCheck chk = cevians_form_triangle(tri, {rho, sigma, tau});
    REQUIRE(chk.margin == doctest::Approx(face_margin).epsilon(5e-4).scale(1.0));
  }
}

TEST_CASE("cross construction") {
  SUBCASE("boundary slopes at t = 1 on the first face are +-2") {
    const Cross cr = cross_build(Face::a_eq_bc, 1.0, 0.7);
    CHECK(cr.lines[0].slope == doctest::Approx(2.0));
    CHECK(cr.lines[1].slope == doctest::Approx(2.0));
    CHECK(cr.lines[2].slope == doctest::Approx(-2.0));
    CHECK(cr.lines[3].slope == doctest::Approx(-2.0));
    CHECK_FALSE(cr.degenerate);
  }
  SUBCASE("marks solve the two-sided inequality with equality") {
    SampleRng rng(55);
    for (int i = 0; i < 200; ++i) {
      const Face f = static_cast<Face>(rng.uniform_long(0, 2));
      const double t = rng.log10_uniform(-2, 2);
      const double tau = rng.uniform(-3, 3);
      const Cross cr = cross_build(f, t, tau);
      if (cr.degenerate) continue;
      for (const Point2& mk : cr.marks) {
        // marking points saturate both bounds (they sit on the cross
        // boundary, so strict membership is left to rounding)
        const double u = std::fabs(cr.a * mk.x - cr.b), v = std::fabs(cr.c * mk.y - cr.d);
        REQUIRE(u + v == doctest::Approx(std::fabs(cr.g)).epsilon(1e-9));
        REQUIRE(std::fabs(u - v) <= std::fabs(cr.g) * (1 + 1e-9));
      }
      REQUIRE_FALSE(in_cross(cr.center.x, cr.center.y, cr));  // nucleus interior
    }
  }
  CHECK_THROWS_AS(cross_build(Face::a_eq_bc, 0.0, 1.0), domain_error);
}

TEST_CASE("canonical cross membership") {
  const Cross cr = canonical_cross();
  CHECK(in_cross(1, 0, cr));        // marking point
  CHECK_FALSE(in_cross(0, 0, cr));  // nucleus
  CHECK_FALSE(in_cross(2, 0, cr));  // beyond the arm: upper bound fails
  CHECK(in_cross(2, 1, cr));        // on the boundary of a slab
  CHECK(in_cross(5, 5, cr));        // far along an arm
  CHECK(in_cross_geometric(1, 0, cr));
  CHECK_FALSE(in_cross_geometric(0, 0, cr));
  CHECK_FALSE(in_cross_geometric(2, 0, cr));
}

TEST_CASE("direct and geometric cross membership agree") {
  int disagreements = 0;
  for (int ci = 0; ci < 100; ++ci) {
    SampleRng rng(56, static_cast<std::uint64_t>(ci));
    const Face f = static_cast<Face>(rng.uniform_long(0, 2));
    const double t = rng.log10_uniform(-2, 2);
    const double tau = rng.uniform(-3, 3);
    const Cross cr = cross_build(f, t, tau);
    if (cr.degenerate) continue;
    const double cx = cr.center.x, cy = cr.center.y;
    const double span = 4.0 * (std::fabs(cr.g / cr.a) + std::fabs(cr.g / cr.c)) + 1.0;
    for (int i = 0; i < 200; ++i)
      for (int j = 0; j < 200; ++j) {
        const double x = cx + span * (i / 199.0 - 0.5);
        const double y = cy + span * (j / 199.0 - 0.5);
        const bool direct = in_cross(x, y, cr);
        const bool geo = in_cross_geometric(x, y, cr);
        if (direct != geo) {
          // only tolerable within rounding of a boundary
          const double u = std::fabs(cr.a * x - cr.b), v = std::fabs(cr.c * y - cr.d);
          const double g = std::fabs(cr.g);
          const double scale = u + v + g;
          const double near_boundary =
              std::min(std::fabs(g - std::fabs(u - v)), std::fabs(u + v - g));
          REQUIRE(near_boundary <= 1e-9 * scale);
          ++disagreements;
        }
      }
  }
  CHECK(disagreements <= 5);
}

TEST_CASE("distinguished points lie on their designated boundary lines exactly") {
  for (int tn = 1; tn <= 10; ++tn)
    for (int taun = -5; taun <= 4; ++taun) {
      const Quad t(Rational(tn, 3));
      const Quad tau(Rational(2 * taun + 1, 4));
      for (const Face f : {Face::a_eq_bc, Face::b_eq_ca, Face::c_eq_ab}) {
        const CrossCoeffs<Quad> k = cross_coeffs(f, t, tau);
        for (int pt = 1; pt <= 4; ++pt) {
          const auto [x, y] = level_point(pt, tau);
          const Quad res = boundary_line_residual(k, designated_line(f, pt), x, y);
          REQUIRE(res.is_zero());
        }
      }
    }
}

TEST_CASE("slope-selected crosses") {
  SUBCASE("published slope-to-parameter map") {
    const auto [f8, t8] = face_for_slope(2.0);
    CHECK(f8 == Face::a_eq_bc);
    CHECK(t8 == doctest::Approx(1.0));
    const auto [f9, t9] = face_for_slope(0.5);
    CHECK(f9 == Face::b_eq_ca);
    CHECK(t9 == doctest::Approx(1.0));
    const auto [f10, t10] = face_for_slope(-3.0);
    CHECK(f10 == Face::c_eq_ab);
    CHECK(t10 == doctest::Approx(3.0));
    CHECK_THROWS_AS(face_for_slope(0.0), domain_error);
    CHECK_THROWS_AS(face_for_slope(1.0), domain_error);
    CHECK_THROWS_AS(cross_for_slope(0.0, 0.5), domain_error);
  }

  SUBCASE("the designated pair through the first two points has slope m, exactly") {
    SampleRng rng(57);
    for (int i = 0; i < 400; ++i) {
      Rational mr = rng.rational(40, 12);
      if (mr.is_zero() || mr == Rational(1)) continue;
      const Quad m(mr);
      const auto [face, t] = face_for_slope(m);
      REQUIRE(t.sign() > 0);
      const CrossCoeffs<Quad> k = cross_coeffs(face, t, Quad(Rational(3, 7)));
      const DesignatedLine dl = designated_line(face, 1);  // the pair carrying p11 and p12
      const Quad pair_slope = dl.pair == LinePair::positive_slope ? k.a / k.c : -(k.a / k.c);
      REQUIRE(pair_slope == m);
      const DesignatedLine dl2 = designated_line(face, 3);  // the pair carrying p21 and p22
      const Quad pair_slope2 = dl2.pair == LinePair::positive_slope ? k.a / k.c : -(k.a / k.c);
      REQUIRE(pair_slope2 == -m);
    }
  }

  SUBCASE("the cross at the line slope is degenerate") {
    const double tau = 0.7;
    const double m = 1.0 - 1.0 / tau;
    CHECK(cross_for_slope(m, tau).degenerate);
    CHECK_FALSE(cross_for_slope(m + 0.3, tau).degenerate);
  }
}

TEST_CASE("line membership equation") {
  for (int i = 0; i < 200; ++i) {
    SampleRng rng(58, static_cast<std::uint64_t>(i));
    const Quad tau(rng.rational(30, 10));
    for (int pt = 1; pt <= 4; ++pt) {
      const auto [x, y] = level_point(pt, tau);
      REQUIRE(eq11_check(x, y, tau));
    }
    if (!tau.is_zero() && tau != Quad(1)) {
      const Quad p0x = (Quad(1) - tau).inverse();
      const Quad p0y = Quad(1) - tau.inverse();
      REQUIRE(eq11_check(p0x, p0y, tau));
    }
  }
  CHECK_FALSE(eq11_check(0.0, 0.0, 0.5));  // |rho/2 - 1| = 1 vs 1/2
  CHECK(eq11_check(0.5, 0.5, 0.5));
}

TEST_CASE("intersection point condition") {
  const P0Condition c2 = p0_condition(2.0);
  CHECK(c2.in_closed);
  CHECK(c2.in_open);
  const P0Condition cphi = p0_condition(Quad::phi());
  CHECK(cphi.in_closed);
  CHECK_FALSE(cphi.in_open);
  const P0Condition c3 = p0_condition(3.0);
  CHECK_FALSE(c3.in_closed);
  CHECK_FALSE(c3.in_open);
  CHECK(p0_condition(0.5).in_open);
  CHECK(p0_condition(-1.0).in_open);
  CHECK_THROWS_AS(p0_condition(0.0), domain_error);
  CHECK_THROWS_AS(p0_condition(1.0), domain_error);
  CHECK_THROWS_AS(p0_condition(Quad(1)), domain_error);
}

TEST_CASE("level points") {
  const LevelPoints lp = level_points(0.5);
  CHECK(lp.p11.x == doctest::Approx(0.5));
  CHECK(lp.p12.x == doctest::Approx(-0.5));
  CHECK(lp.p12.y == doctest::Approx(1.5));
  CHECK(lp.p21.x == doctest::Approx(1.5));
  CHECK(lp.p21.y == doctest::Approx(-1.5));
  CHECK(lp.p22.x == doctest::Approx(2.5));
  CHECK(lp.p22.y == doctest::Approx(-0.5));
  REQUIRE(lp.has_p0);
  CHECK(lp.p0.x == doctest::Approx(2.0));
  CHECK(lp.p0.y == doctest::Approx(-1.0));
  REQUIRE(lp.slope1.has_value());
  CHECK(*lp.slope1 == doctest::Approx(-1.0));
  CHECK_FALSE(level_points(0.0).has_p0);
}

TEST_CASE("brute-force level sets at the published levels") {
  const GridSpec sgrid{-12, 12, 2401};
  SUBCASE("tau = 0") {
    const auto pts = bruteforce_level_set(0.0, kDefaultTGrid, sgrid);
    REQUIRE(pts.size() == 4);
    const Point2 expected[4] = {{0, 0}, {0, 2}, {2, 0}, {2, -2}};
    for (const Point2& e : expected) {
      bool found = false;
      for (const auto& p : pts) found = found || dist(p.pt, e) <= 1e-6;
      REQUIRE(found);
    }
  }
  SUBCASE("tau = 1") {
    const auto pts = bruteforce_level_set(1.0, kDefaultTGrid, sgrid);
    REQUIRE(pts.size() == 4);
    const Point2 expected[4] = {{1, 1}, {-1, 1}, {1, -1}, {3, -1}};
    for (const Point2& e : expected) {
      bool found = false;
      for (const auto& p : pts) found = found || dist(p.pt, e) <= 1e-6;
      REQUIRE(found);
    }
  }
  SUBCASE("tau = 1/2 keeps the intersection point") {
    const auto pts = bruteforce_level_set(0.5, kDefaultTGrid, sgrid);
    REQUIRE(pts.size() == 5);
    bool p0_found = false;
    for (const auto& p : pts)
      if (p.label == "p0") p0_found = dist(p.pt, {2.0, -1.0}) <= 1e-9;
    CHECK(p0_found);
  }
  SUBCASE("tau = 3 drops the intersection point") {
    const auto pts = bruteforce_level_set(3.0, kDefaultTGrid, sgrid);
    CHECK(pts.size() == 4);
    for (const auto& p : pts) CHECK(p.label != "p0");
  }
}

TEST_CASE("level sets across a grid of levels: four points, plus p0 exactly when admitted") {
  const GridSpec sgrid{-12, 12, 1601};
  const double taus[] = {-2.5, -1.0, -0.3, 0.45, 1.7, 2.0, 3.0};
  for (const double tau : taus) {
    INFO("tau = ", tau);
    const bool expect_p0 = p0_condition(tau).in_closed;
    const auto pts = bruteforce_level_set(tau, kDefaultTGrid, sgrid);
    REQUIRE(pts.size() == (expect_p0 ? 5u : 4u));
    const LevelPoints lp = level_points(tau);
    for (const Point2& e : {lp.p11, lp.p12, lp.p21, lp.p22}) {
      bool found = false;
      for (const auto& p : pts) found = found || dist(p.pt, e) <= 1e-6;
      REQUIRE(found);
    }
    bool has_p0 = false;
    for (const auto& p : pts) has_p0 = has_p0 || p.label == "p0";
    REQUIRE(has_p0 == expect_p0);
  }
}

TEST_CASE("eliminating crosses") {
  SUBCASE("midpoint of the first segment at tau = 3") {
    const LevelPoints lp = level_points(3.0);
    const Point2 mid{0.5 * (lp.p11.x + lp.p12.x), 0.5 * (lp.p11.y + lp.p12.y)};
    const auto cr = eliminate_point(mid.x, mid.y, 3.0);
    REQUIRE(cr.has_value());
    CHECK(cross_violation(mid.x, mid.y, *cr) > 1e-9);
  }
  SUBCASE("distinguished points survive every cross") {
    const LevelPoints lp = level_points(3.0);
    CHECK_FALSE(eliminate_point(lp.p11.x, lp.p11.y, 3.0).has_value());
    CHECK_FALSE(eliminate_point(lp.p22.x, lp.p22.y, 3.0).has_value());
    const LevelPoints lph = level_points(0.5);
    CHECK_FALSE(eliminate_point(lph.p0.x, lph.p0.y, 0.5).has_value());
  }
  SUBCASE("a far point on the first line at tau = 1/2") {
    const LevelPoints lp = level_points(0.5);
    const Point2 far{lp.p11.x + 7.0 * lp.dir1.x, lp.p11.y + 7.0 * lp.dir1.y};
    const auto cr = eliminate_point(far.x, far.y, 0.5);
    REQUIRE(cr.has_value());
  }
  SUBCASE("off-line points violate the precondition") {
    CHECK_THROWS_AS(eliminate_point(0.0, 0.0, 0.5), domain_error);
  }
}
