#include "ceva/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "ceva/cone.hpp"

namespace ceva {

const char* to_string(TriVerdict v) {
  switch (v) {
    case TriVerdict::yes: return "yes";
    case TriVerdict::degenerate: return "degenerate";
    case TriVerdict::no: return "no";
  }
  return "?";
}

bool in_triangle_set(double a, double b, double c) {
  return a > 0 && b > 0 && c > 0 && std::fabs(a - b) < c && c < a + b;
}

bool in_triangle_set(const Quad& a, const Quad& b, const Quad& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) return false;
  const Quad d = a - b;
  const Quad lo = d.sign() < 0 ? -d : d;
  return (c - lo).sign() > 0 && (a + b - c).sign() > 0;
}

Triangle make_triangle(double a, double b, double c) {
  if (!in_triangle_set(a, b, c))
    throw domain_error("geometry: side lengths do not form a triangle");
  return {a, b, c};
}

TriangleQ make_triangle(Quad a, Quad b, Quad c) {
  if (!in_triangle_set(a, b, c))
    throw domain_error("geometry: side lengths do not form a triangle");
  return {std::move(a), std::move(b), std::move(c)};
}

double cevian_f(double a, double b, double c, double rho, double eps) {
  const double r = cevian_radicand(a, b, c, rho);
  if (r >= 0) return std::sqrt(r);
  const double s = a + b + c;
  const double scale = (1.0 + rho * rho) * s * s;
  if (r >= -eps * scale) return 0.0;  // limiting-face evaluations hit exact zeros up to round-off
  throw domain_error("geometry: cevian radicand negative, input outside closure of the triangle set");
}

CevianLengths cevian_lengths(const Triangle& t, const ParamTriple& p, double eps) {
  return {cevian_f(t.a, t.b, t.c, p.rho, eps),
          cevian_f(t.b, t.c, t.a, p.sigma, eps),
          cevian_f(t.c, t.a, t.b, p.tau, eps)};
}

TriangleCheck forms_triangle(double x, double y, double z, double eps) {
  const double margin = std::min({x + y - z, y + z - x, z + x - y});
  const double scale = x + y + z;
  TriVerdict v;
  if (margin > eps * scale)
    v = TriVerdict::yes;
  else if (margin >= -eps * scale)
    v = TriVerdict::degenerate;
  else
    v = TriVerdict::no;
  return {v, margin, scale};
}

TriangleCheck cevians_form_triangle(const Triangle& t, const ParamTriple& p, double eps) {
  const CevianLengths l = cevian_lengths(t, p, eps);
  return forms_triangle(l.aa, l.bb, l.cc, eps);
}

TriVerdict cevians_form_triangle_exact(const TriangleQ& t, const ParamTripleQ& p) {
  const Vec3Q sq = cevian_squares(t, p);
  if (sq.x.sign() < 0 || sq.y.sign() < 0 || sq.z.sign() < 0)
    throw domain_error("geometry: cevian radicand negative, input outside closure of the triangle set");
  if (in_squares_cone(sq, Region::open)) return TriVerdict::yes;
  if (in_squares_cone(sq, Region::boundary)) return TriVerdict::degenerate;
  return TriVerdict::no;
}

double altitude_h(double a, double b, double c, double rho, double eps) {
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const double r = 2.0 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2);
  if (r < 0) {
    const double s = a + b + c;
    const double scale = s * s * s * s;
    if (r < -eps * scale)
      throw domain_error("geometry: altitude radicand negative, input outside closure of the triangle set");
    return 0.0;
  }
  return rho / a * std::sqrt(r);
}

Triangle scale_triangle(const Triangle& t, double k) {
  if (!(k > 0)) throw domain_error("geometry: scale factor must be positive");
  return {k * t.a, k * t.b, k * t.c};
}

}  // namespace ceva
