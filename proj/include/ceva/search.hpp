#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ceva/classifier.hpp"
#include "ceva/geometry.hpp"
#include "ceva/limiting.hpp"

namespace ceva {

struct Witness {
  Triangle triangle;
  double margin;  // cevian triangle-inequality margin, strictly negative
  std::optional<std::pair<Face, double>> face_hint;  // limiting violation that seeded the search
};

struct WitnessSearch {
  std::optional<Witness> witness;
  bool member_short_circuit = false;  // classifier said the triple is universal
  bool degenerate_point = false;      // golden point: margins vanish identically
  long evaluations = 0;
};

/// Looks for a triangle on which the cevians of p fail the triangle
/// inequality: scans the limiting inequalities over the t grid, lifts a
/// violating face point slightly inside the triangle set by bisecting the
/// lift, and falls back to seeded random triangles within the budget.
WitnessSearch find_witness(const ParamTriple& p, long budget = 100000, std::uint64_t seed = 0);

struct FixedVerdict {
  TriVerdict verdict;
  double margin;
  double scale;
};

/// Verdict of one triple against one fixed triangle, for grid sweeps.
FixedVerdict fixed_triangle_classify(const Triangle& t, const ParamTriple& p);

struct SurfaceSample {
  ParamTriple point;
  double margin;
  std::array<int, 3> cell;  // grid index of the edge origin
  double edge_bound;        // |margin delta| across the originating edge
};

struct SurfaceOptions {
  double lo = -3.0, hi = 4.0;  // box, cubical
  int res = 64;                // nodes per axis, >= 8
  int refine_steps = 20;       // bisection steps along each sign-change edge
};

/// Sign-change extraction of the boundary surface of the fixed-triangle
/// solution set: emits one point per grid edge whose endpoint margins differ
/// in sign, refined along the edge.
std::vector<SurfaceSample> surface_extract(const Triangle& t, const SurfaceOptions& opt);

struct Polyline {
  FamilyKind family;
  int branch;  // 0 for diagonal
  std::vector<ParamTriple> pts;
};

struct SolutionCurves {
  std::vector<Polyline> polylines;
  std::array<Quad, 2> punctures;               // excluded line-family parameters
  std::array<ParamTripleQ, 6> excluded_points; // the six golden points
};

/// Dataset behind the solution-set picture: the diagonal, the three punctured
/// lines, the three open curve branches, and the six excluded points.
SolutionCurves figure2_emit(int resolution);

}  // namespace ceva
