#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ceva/classifier.hpp"
#include "ceva/cone.hpp"
#include "ceva/rng.hpp"
#include "ceva/search.hpp"

using namespace ceva;

TEST_CASE("witness search on the published counterexample") {
  const ParamTriple p{0.25, 0.5, 5.0 / 6.0};
  const WitnessSearch ws = find_witness(p);
  REQUIRE(ws.witness.has_value());
  const Witness& w = *ws.witness;
  CHECK(w.margin < 0);
  // re-verify independently
  const TriangleCheck chk = cevians_form_triangle(w.triangle, p);
  CHECK(chk.verdict == TriVerdict::no);
  CHECK(chk.margin < -1e-12 * chk.scale);
  REQUIRE(w.face_hint.has_value());

  // the published witness itself: (sqrt8, 3, 1) has margin sqrt(3/2) + 3/2 - 17/6
  const TriangleCheck known = cevians_form_triangle(make_triangle(std::sqrt(8.0), 3, 1), p);
  CHECK(known.margin == doctest::Approx(std::sqrt(1.5) + 1.5 - 17.0 / 6.0).epsilon(1e-12));
  CHECK(known.margin == doctest::Approx(-0.108588).epsilon(1e-4));
}

TEST_CASE("members and golden points short-circuit") {
  CHECK(find_witness({0.5, 0.5, 0.5}).member_short_circuit);
  CHECK_FALSE(find_witness({0.5, 0.5, 0.5}).witness.has_value());
  CHECK(find_witness({2, -2, 0}).member_short_circuit);

  const auto& g = golden_points()[0];
  const ParamTriple gf{g.rho.to_double(), g.sigma.to_double(), g.tau.to_double()};
  const WitnessSearch ws = find_witness(gf);
  CHECK(ws.degenerate_point);
  CHECK_FALSE(ws.witness.has_value());
}

TEST_CASE("witness exists for simple non-members") {
  const WitnessSearch ws = find_witness({0.0, 0.0, 0.5});
  REQUIRE(ws.witness.has_value());
  CHECK(ws.witness->margin < 0);
}

TEST_CASE("100 random non-members all produce verified witnesses") {
  int tried = 0;
  for (std::uint64_t i = 0; tried < 100; ++i) {
    SampleRng rng(61, i);
    const ParamTriple p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    if (classify(p).verdict != Verdict::non_member) continue;
    const WitnessSearch ws = find_witness(p);
    REQUIRE(ws.witness.has_value());
    const TriangleCheck chk = cevians_form_triangle(ws.witness->triangle, p);
    REQUIRE(chk.margin < -1e-12 * chk.scale);
    ++tried;
  }
}

TEST_CASE("fixed-triangle classification") {
  const Triangle eq = make_triangle(1, 1, 1);
  // at the origin the cevians are the sides themselves
  const FixedVerdict v0 = fixed_triangle_classify(eq, {0, 0, 0});
  CHECK(v0.verdict == TriVerdict::yes);

  const auto& g = golden_points()[1];
  const FixedVerdict vg =
      fixed_triangle_classify(eq, {g.rho.to_double(), g.sigma.to_double(), g.tau.to_double()});
  CHECK(vg.verdict == TriVerdict::degenerate);

  const FixedVerdict vno =
      fixed_triangle_classify(make_triangle(std::sqrt(8.0), 3, 1), {0.25, 0.5, 5.0 / 6.0});
  CHECK(vno.verdict == TriVerdict::no);
}

TEST_CASE("equilateral margin is invariant under cyclic parameter rotation") {
  const Triangle eq = make_triangle(1, 1, 1);
  SampleRng rng(62);
  for (int i = 0; i < 1000; ++i) {
    const ParamTriple p{rng.uniform(-3, 4), rng.uniform(-3, 4), rng.uniform(-3, 4)};
    const ParamTriple q{p.tau, p.rho, p.sigma};
    const double m1 = fixed_triangle_classify(eq, p).margin;
    const double m2 = fixed_triangle_classify(eq, q).margin;
    REQUIRE(m1 == doctest::Approx(m2).epsilon(1e-12));
  }
}

TEST_CASE("surface extraction smoke test") {
  SurfaceOptions opt;
  opt.res = 16;
  const auto cloud = surface_extract(make_triangle(1, 1, 1), opt);
  REQUIRE(cloud.size() > 100);
  const Triangle eq = make_triangle(1, 1, 1);
  for (const auto& s : cloud) {
    const FixedVerdict v = fixed_triangle_classify(eq, s.point);
    REQUIRE(std::fabs(v.margin) <= 1e-7 * v.scale);  // refined onto the surface
    REQUIRE(std::fabs(s.margin) <= s.edge_bound);     // recorded edge bound holds
    REQUIRE(s.point.rho >= opt.lo);
    REQUIRE(s.point.rho <= opt.hi);
  }
  SurfaceOptions bad;
  bad.res = 4;
  CHECK_THROWS_AS(surface_extract(make_triangle(1, 1, 1), bad), domain_error);
}

TEST_CASE("no diagonal member appears in the cloud; members classify clean") {
  SurfaceOptions opt;
  opt.res = 12;
  const Triangle scalene = make_triangle(2, 3, 4);
  const auto cloud = surface_extract(scalene, opt);
  REQUIRE(!cloud.empty());
  for (const auto& s : cloud) {
    const Classification c = classify(s.point);
    // surface points are never interior members; at worst they trail a
    // golden point
    REQUIRE((c.verdict == Verdict::non_member || c.verdict == Verdict::golden_point));
    const double d = std::fabs(s.point.rho - s.point.sigma) +
                     std::fabs(s.point.sigma - s.point.tau);
    REQUIRE(d > 1e-6);  // the diagonal family stays strictly inside
  }
}

TEST_CASE("solution curve dataset") {
  const SolutionCurves data = figure2_emit(101);
  REQUIRE(!data.polylines.empty());

  // diagonal endpoints at +-5
  const Polyline& diag = data.polylines.front();
  CHECK(diag.family == FamilyKind::diagonal);
  CHECK(diag.pts.front().rho == doctest::Approx(-5.0));
  CHECK(diag.pts.back().rho == doctest::Approx(5.0));
  CHECK(diag.pts.front().sigma == doctest::Approx(-5.0));

  // punctures are the exact excluded parameters
  CHECK(data.punctures[0] == -Quad::phi_inv());
  CHECK(data.punctures[1] == Quad::phi());

  int line_polylines = 0, curve_polylines = 0;
  const double phi = ScalarOps<double>::phi();
  const double phi_inv = ScalarOps<double>::phi_inv();
  const double phi_sq = ScalarOps<double>::phi_sq();
  for (const Polyline& pl : data.polylines) {
    if (pl.family == FamilyKind::line) {
      ++line_polylines;
      for (const ParamTriple& p : pl.pts) {
        // recover the branch parameter and keep it off the punctures
        const double xi = pl.branch == 1 ? p.tau : pl.branch == 2 ? p.rho : p.sigma;
        REQUIRE(std::fabs(xi - phi) > 1e-9);
        REQUIRE(std::fabs(xi + phi_inv) > 1e-9);
        REQUIRE(classify(p).verdict == Verdict::line_family);
      }
    }
    if (pl.family == FamilyKind::curve) {
      ++curve_polylines;
      for (const ParamTriple& p : pl.pts) {
        const double xi = pl.branch == 1 ? p.tau : pl.branch == 2 ? p.rho : p.sigma;
        REQUIRE(xi > phi);
        REQUIRE(xi < phi_sq);
        REQUIRE(classify(p).verdict == Verdict::curve_family);
      }
    }
  }
  CHECK(line_polylines == 9);   // three branches, three segments each
  CHECK(curve_polylines == 3);

  // branch-1 curve point at xi = 2 is (-1, 1/2, 2); check against a sampled
  // point by direct formula instead of expecting the exact sample
  const SolutionCurves tiny = figure2_emit(2);
  REQUIRE(!tiny.polylines.empty());
  CHECK_THROWS_AS(figure2_emit(1), domain_error);

  // six excluded points ride along exactly
  for (int i = 0; i < 6; ++i) {
    CHECK(data.excluded_points[static_cast<std::size_t>(i)].rho ==
          golden_points()[static_cast<std::size_t>(i)].rho);
  }
}
