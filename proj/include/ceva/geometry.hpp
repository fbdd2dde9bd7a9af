#pragma once

#include "ceva/linalg.hpp"

namespace ceva {

inline constexpr double kDefaultEps = 1e-9;

template <class S>
struct Tri3 {
  S a{}, b{}, c{};  // side lengths BC, CA, AB
};

template <class S>
struct Triple3 {
  S rho{}, sigma{}, tau{};  // cevian foot parameters
};

using Triangle = Tri3<double>;
using ParamTriple = Triple3<double>;
using TriangleQ = Tri3<Quad>;
using ParamTripleQ = Triple3<Quad>;

struct CevianLengths {
  double aa, bb, cc;  // AA_rho, BB_sigma, CC_tau
};

enum class TriVerdict { yes, degenerate, no };
enum class Strictness { strict, closed };

struct TriangleCheck {
  TriVerdict verdict;
  double margin;  // min(x+y-z, y+z-x, z+x-y), absolute
  double scale;   // x+y+z
  bool passes(Strictness s) const {
    return s == Strictness::strict ? verdict == TriVerdict::yes : verdict != TriVerdict::no;
  }
};

const char* to_string(TriVerdict v);

/// Squared cevian length: rho(rho-1)a^2 + rho b^2 + (1-rho)c^2. Nonnegative
/// whenever (a,b,c) is in the closure of the triangle set.
template <class S>
S cevian_radicand(const S& a, const S& b, const S& c, const S& rho) {
  return rho * (rho - S(1)) * (a * a) + rho * (b * b) + (S(1) - rho) * (c * c);
}

/// Strict membership in the open triangle set: |a-b| < c < a+b with a,b,c > 0.
bool in_triangle_set(double a, double b, double c);
bool in_triangle_set(const Quad& a, const Quad& b, const Quad& c);

/// Throws unless (a,b,c) is strictly a triangle.
Triangle make_triangle(double a, double b, double c);
TriangleQ make_triangle(Quad a, Quad b, Quad c);

/// Cevian length through vertex A, foot dividing BC in ratio rho.
/// Radicands in [-eps*scale, 0) clamp to 0; below that is a domain error
/// (the caller left the closure of the triangle set).
double cevian_f(double a, double b, double c, double rho, double eps = kDefaultEps);

/// The three cevian lengths with the cyclic argument order
/// AA = f(a,b,c,rho), BB = f(b,c,a,sigma), CC = f(c,a,b,tau).
CevianLengths cevian_lengths(const Triangle& t, const ParamTriple& p, double eps = kDefaultEps);

/// Squared cevian lengths as a vector, generic over the scalar.
template <class S>
Vec3T<S> cevian_squares(const Tri3<S>& t, const Triple3<S>& p) {
  return {cevian_radicand(t.a, t.b, t.c, p.rho),
          cevian_radicand(t.b, t.c, t.a, p.sigma),
          cevian_radicand(t.c, t.a, t.b, p.tau)};
}

/// Three lengths classified against the triangle inequality with margin
/// g = min of the three slacks; yes iff g > eps*scale, degenerate iff
/// |g| <= eps*scale, no otherwise, where scale = x+y+z.
TriangleCheck forms_triangle(double x, double y, double z, double eps = kDefaultEps);

TriangleCheck cevians_form_triangle(const Triangle& t, const ParamTriple& p, double eps = kDefaultEps);

/// Exact verdict for exact inputs. Decided on the squared lengths (three
/// nonnegative reals form a strict triangle iff their squares lie in the open
/// quadratic cone), so no square roots are needed.
TriVerdict cevians_form_triangle_exact(const TriangleQ& t, const ParamTripleQ& p);

/// (rho/a) * sqrt(2(a^2b^2 + b^2c^2 + c^2a^2) - (a^4 + b^4 + c^4)); for rho = 2
/// this is proportional to the altitude orthogonal to side a. Zero radicand
/// (degenerate triangle) yields 0.
double altitude_h(double a, double b, double c, double rho, double eps = kDefaultEps);

Triangle scale_triangle(const Triangle& t, double k);

}  // namespace ceva
