#include "ceva/search.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ceva/cone.hpp"
#include "ceva/rng.hpp"

namespace ceva {

namespace {

constexpr double kWitnessRel = 1e-12;  // required |margin| relative to the cevian perimeter
constexpr double kFaceViolationRel = 1e-9;
constexpr double kLiftDelta0 = 1e-3;
constexpr double kLiftDeltaMin = 1e-15;  // delta0 * 1e-12

Triangle face_triangle(Face f, double t, double delta) {
  switch (f) {
    case Face::a_eq_bc: return {(1.0 - delta) * (t + 1.0), t, 1.0};
    case Face::b_eq_ca: return {1.0, (1.0 - delta) * (t + 1.0), t};
    case Face::c_eq_ab: return {t, 1.0, (1.0 - delta) * (t + 1.0)};
  }
  throw domain_error("search: bad face");
}

}  // namespace

WitnessSearch find_witness(const ParamTriple& p, long budget, std::uint64_t seed) {
  WitnessSearch out;
  const Classification cls = classify(p);
  if (cls.verdict == Verdict::diagonal || cls.verdict == Verdict::line_family ||
      cls.verdict == Verdict::curve_family) {
    out.member_short_circuit = true;
    return out;
  }
  if (cls.verdict == Verdict::golden_point) {
    // margins vanish identically for every triangle; no strict witness exists
    out.degenerate_point = true;
    return out;
  }

  auto certify = [&](const Triangle& tri, std::optional<std::pair<Face, double>> hint)
      -> std::optional<Witness> {
    ++out.evaluations;
    const TriangleCheck chk = cevians_form_triangle(tri, p);
    if (chk.margin < -kWitnessRel * chk.scale) return Witness{tri, chk.margin, hint};
    return std::nullopt;
  };

  const std::vector<double> ts = t_grid();
  for (const Face f : {Face::a_eq_bc, Face::b_eq_ca, Face::c_eq_ab}) {
    for (const double t : ts) {
      if (out.evaluations >= budget) break;
      ++out.evaluations;
      const IneqSlack<double> ev = limiting_ineq(f, t, p.tau, p.rho, p.sigma);
      const double rel = std::min(ev.slack_lo, ev.slack_hi) / std::max(ev.scale, 1e-300);
      if (rel >= -kFaceViolationRel) continue;
      // lift the face point inside the triangle set; halve the lift until the
      // strict violation is certified
      for (double delta = kLiftDelta0; delta > kLiftDeltaMin; delta *= 0.5) {
        if (out.evaluations >= budget) break;
        const Triangle tri = face_triangle(f, t, delta);
        if (!in_triangle_set(tri.a, tri.b, tri.c)) continue;
        if (auto w = certify(tri, std::make_pair(f, t))) {
          out.witness = *w;
          return out;
        }
      }
    }
  }

  for (std::uint64_t i = 0; out.evaluations < budget; ++i) {
    const Triangle tri = (i % 2 == 0) ? sample_triangle(seed, i)
                                      : sample_boundary_biased_triangle(seed, i);
    if (auto w = certify(tri, std::nullopt)) {
      out.witness = *w;
      return out;
    }
  }
  return out;  // inconclusive
}

FixedVerdict fixed_triangle_classify(const Triangle& t, const ParamTriple& p) {
  const TriangleCheck chk = cevians_form_triangle(t, p);
  return {chk.verdict, chk.margin, chk.scale};
}

std::vector<SurfaceSample> surface_extract(const Triangle& t, const SurfaceOptions& opt) {
  if (opt.res < 8) throw domain_error("search: surface resolution must be at least 8 per axis");
  if (!(opt.hi > opt.lo)) throw domain_error("search: empty surface box");
  const int n = opt.res;
  const double h = (opt.hi - opt.lo) / (n - 1);
  const auto coord = [&](int i) { return opt.lo + h * i; };
  const auto margin_at = [&](const ParamTriple& p) { return cevians_form_triangle(t, p).margin; };

  std::vector<double> m(static_cast<std::size_t>(n) * n * n);
  const auto idx = [&](int i, int j, int k) {
    return (static_cast<std::size_t>(k) * n + j) * n + i;
  };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        m[idx(i, j, k)] = margin_at({coord(i), coord(j), coord(k)});

  std::vector<SurfaceSample> cloud;
  auto emit = [&](ParamTriple p0, ParamTriple p1, double m0, double m1, std::array<int, 3> cell) {
    if ((m0 < 0) == (m1 < 0)) return;
    for (int step = 0; step < opt.refine_steps; ++step) {
      const ParamTriple mid{0.5 * (p0.rho + p1.rho), 0.5 * (p0.sigma + p1.sigma),
                            0.5 * (p0.tau + p1.tau)};
      const double mm = margin_at(mid);
      if ((mm < 0) == (m0 < 0)) {
        p0 = mid;
        m0 = mm;
      } else {
        p1 = mid;
        m1 = mm;
      }
    }
    // secant point of the final bracket; the margin is locally linear there
    double s = 0.5;
    if (m0 != m1) s = std::clamp(m0 / (m0 - m1), 0.0, 1.0);
    const ParamTriple pt{p0.rho + s * (p1.rho - p0.rho), p0.sigma + s * (p1.sigma - p0.sigma),
                         p0.tau + s * (p1.tau - p0.tau)};
    cloud.push_back({pt, margin_at(pt), cell, std::fabs(m1 - m0)});
  };

  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const ParamTriple p0{coord(i), coord(j), coord(k)};
        const double m0 = m[idx(i, j, k)];
        if (i + 1 < n)
          emit(p0, {coord(i + 1), p0.sigma, p0.tau}, m0, m[idx(i + 1, j, k)], {i, j, k});
        if (j + 1 < n)
          emit(p0, {p0.rho, coord(j + 1), p0.tau}, m0, m[idx(i, j + 1, k)], {i, j, k});
        if (k + 1 < n)
          emit(p0, {p0.rho, p0.sigma, coord(k + 1)}, m0, m[idx(i, j, k + 1)], {i, j, k});
      }
  return cloud;
}

namespace {

// linspace over [lo, hi]; an open end is pulled half a step inward so the
// excluded value itself is never emitted
std::vector<double> segment_samples(double lo, double hi, int k, bool open_lo, bool open_hi) {
  k = std::max(k, 2);
  std::vector<double> xs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (k - 1);
  const double half = 0.5 * (hi - lo) / (k - 1);
  if (open_lo) xs.front() += half;
  if (open_hi) xs.back() -= half;
  return xs;
}

Polyline sampled_polyline(FamilyKind fam, int branch, const std::vector<double>& xs) {
  Polyline pl{fam, branch, {}};
  pl.pts.reserve(xs.size());
  for (const double xi : xs) {
    switch (fam) {
      case FamilyKind::diagonal: pl.pts.push_back({xi, xi, xi}); break;
      case FamilyKind::line:
        switch (branch) {
          case 1: pl.pts.push_back({-xi, 2.0 - xi, xi}); break;
          case 2: pl.pts.push_back({xi, -xi, 2.0 - xi}); break;
          default: pl.pts.push_back({2.0 - xi, xi, -xi}); break;
        }
        break;
      case FamilyKind::curve: {
        const double u = 1.0 / (1.0 - xi), v = 1.0 - 1.0 / xi;
        switch (branch) {
          case 1: pl.pts.push_back({u, v, xi}); break;
          case 2: pl.pts.push_back({xi, u, v}); break;
          default: pl.pts.push_back({v, xi, u}); break;
        }
        break;
      }
    }
  }
  return pl;
}

}  // namespace

SolutionCurves figure2_emit(int resolution) {
  if (resolution < 2) throw domain_error("search: figure resolution must be at least 2");
  SolutionCurves out;
  out.punctures = {-Quad::phi_inv(), Quad::phi()};
  out.excluded_points = golden_points();

  const double lo = -5.0, hi = 5.0;
  const double punct_lo = out.punctures[0].to_double();  // ~ -0.618
  const double punct_hi = out.punctures[1].to_double();  // ~  1.618
  const double phi = ScalarOps<double>::phi(), phi_sq = ScalarOps<double>::phi_sq();

  out.polylines.push_back(
      sampled_polyline(FamilyKind::diagonal, 0, segment_samples(lo, hi, resolution, false, false)));

  const double span = hi - lo;
  for (int branch = 1; branch <= 3; ++branch) {
    const std::array<std::tuple<double, double, bool, bool>, 3> segs{{
        {lo, punct_lo, false, true},
        {punct_lo, punct_hi, true, true},
        {punct_hi, hi, true, false},
    }};
    for (const auto& [slo, shi, olo, ohi] : segs) {
      const int k = std::max(2, static_cast<int>(std::lround(resolution * (shi - slo) / span)));
      out.polylines.push_back(
          sampled_polyline(FamilyKind::line, branch, segment_samples(slo, shi, k, olo, ohi)));
    }
  }

  for (int branch = 1; branch <= 3; ++branch)
    out.polylines.push_back(sampled_polyline(FamilyKind::curve, branch,
                                             segment_samples(phi, phi_sq, resolution, true, true)));
  return out;
}

}  // namespace ceva
