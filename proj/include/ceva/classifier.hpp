#pragma once

#include <array>
#include <string>
#include <vector>

#include "ceva/geometry.hpp"

namespace ceva {

/// The three parametrized families whose union is the universal solution set,
/// plus the six excluded golden-ratio points and everything else.
enum class Verdict {
  diagonal,      // (xi, xi, xi)
  line_family,   // (-xi, 2-xi, xi) and cyclic shifts, xi avoiding {-1/phi, phi}
  curve_family,  // (1/(1-xi), 1-1/xi, xi) and cyclic shifts, xi in (phi, phi^2)
  golden_point,  // one of the six degenerate points
  non_member,
};

const char* to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::non_member;
  int branch = 0;   // 1..3 for the families, 1..6 for golden points
  bool exact = false;
  double xi = 0.0;  // family parameter (float view; always filled when applicable)
  Quad xi_exact;    // filled in exact mode
};

/// Float-mode classification; relations of the line family are tested to an
/// absolute tolerance, the curve-family parameter is recovered from the bare
/// coordinate of each branch. Non-finite input is a domain error.
Classification classify(const ParamTriple& p, double eps = kDefaultEps);

/// Exact classification of an exact triple; no tolerances anywhere.
Classification classify_exact(const ParamTripleQ& p);

/// The six excluded points, exact, in their published order.
const std::array<ParamTripleQ, 6>& golden_points();

/// Every golden point must match a line-family branch formula with parameter
/// in {-1/phi, phi}; mismatches are flagged rather than silently corrected.
struct GoldenPointCheck {
  int index;        // 1..6
  int line_branch;  // matching branch, 0 if none
  Quad xi;          // matching parameter
  bool matches;
};
std::array<GoldenPointCheck, 6> golden_points_consistency();

/// Exact family parametrizations (branch 1..3 cycles the coordinates).
ParamTripleQ diagonal_point(const Quad& xi);
ParamTripleQ line_family_point(int branch, const Quad& xi);
ParamTripleQ curve_family_point(int branch, const Quad& xi);

enum class FamilyKind { diagonal, line, curve };

struct EnumerateResult {
  std::vector<ParamTriple> triples;
  std::vector<std::pair<std::size_t, std::string>> errors;  // per-item, by input index
};

/// Emits the parametrized triples of one family branch for a list of xi
/// values; illegal xi values produce per-item errors instead of points.
EnumerateResult enumerate_members(FamilyKind family, int branch, const std::vector<double>& xis);

}  // namespace ceva
