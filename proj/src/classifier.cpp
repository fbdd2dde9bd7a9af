#include "ceva/classifier.hpp"

#include <cmath>

namespace ceva {

namespace {

bool finite(const ParamTriple& p) {
  return std::isfinite(p.rho) && std::isfinite(p.sigma) && std::isfinite(p.tau);
}

double bare_coordinate(int branch, const ParamTriple& p) {
  // the coordinate that carries xi directly in each branch parametrization
  switch (branch) {
    case 1: return p.tau;
    case 2: return p.rho;
    default: return p.sigma;
  }
}

Quad bare_coordinate(int branch, const ParamTripleQ& p) {
  switch (branch) {
    case 1: return p.tau;
    case 2: return p.rho;
    default: return p.sigma;
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::diagonal: return "diagonal";
    case Verdict::line_family: return "line-family";
    case Verdict::curve_family: return "curve-family";
    case Verdict::golden_point: return "golden-point";
    case Verdict::non_member: return "non-member";
  }
  return "?";
}

ParamTripleQ diagonal_point(const Quad& xi) { return {xi, xi, xi}; }

ParamTripleQ line_family_point(int branch, const Quad& xi) {
  const Quad two(2);
  switch (branch) {
    case 1: return {-xi, two - xi, xi};
    case 2: return {xi, -xi, two - xi};
    case 3: return {two - xi, xi, -xi};
    default: throw domain_error("classifier: branch must be 1, 2 or 3");
  }
}

ParamTripleQ curve_family_point(int branch, const Quad& xi) {
  const Quad one(1);
  if (xi.is_zero() || xi == one)
    throw domain_error("classifier: curve family parameter must avoid {0, 1}");
  const Quad u = (one - xi).inverse();  // 1/(1-xi)
  const Quad v = one - xi.inverse();    // 1 - 1/xi
  switch (branch) {
    case 1: return {u, v, xi};
    case 2: return {xi, u, v};
    case 3: return {v, xi, u};
    default: throw domain_error("classifier: branch must be 1, 2 or 3");
  }
}

const std::array<ParamTripleQ, 6>& golden_points() {
  static const std::array<ParamTripleQ, 6> pts = [] {
    const Quad f = Quad::phi(), fi = Quad::phi_inv();
    const Quad f2 = Quad::phi_sq(), fi2 = Quad::phi_inv_sq();
    return std::array<ParamTripleQ, 6>{{
        {fi, f2, -fi},
        {-fi, fi, f2},
        {f2, -fi, fi},
        {-f, fi2, f},
        {f, -f, fi2},
        {fi2, f, -f},
    }};
  }();
  return pts;
}

std::array<GoldenPointCheck, 6> golden_points_consistency() {
  std::array<GoldenPointCheck, 6> out{};
  const std::array<Quad, 2> xis{-Quad::phi_inv(), Quad::phi()};
  for (int i = 0; i < 6; ++i) {
    const ParamTripleQ& g = golden_points()[static_cast<std::size_t>(i)];
    GoldenPointCheck chk{i + 1, 0, Quad(0), false};
    for (int branch = 1; branch <= 3 && !chk.matches; ++branch)
      for (const Quad& xi : xis) {
        const ParamTripleQ cand = line_family_point(branch, xi);
        if (cand.rho == g.rho && cand.sigma == g.sigma && cand.tau == g.tau) {
          chk.matches = true;
          chk.line_branch = branch;
          chk.xi = xi;
          break;
        }
      }
    out[static_cast<std::size_t>(i)] = chk;
  }
  return out;
}

Classification classify_exact(const ParamTripleQ& p) {
  Classification c;
  c.exact = true;

  const auto& golden = golden_points();
  for (int i = 0; i < 6; ++i) {
    const ParamTripleQ& g = golden[static_cast<std::size_t>(i)];
    if (p.rho == g.rho && p.sigma == g.sigma && p.tau == g.tau) {
      c.verdict = Verdict::golden_point;
      c.branch = i + 1;
      return c;
    }
  }

  if (p.rho == p.sigma && p.sigma == p.tau) {
    c.verdict = Verdict::diagonal;
    c.branch = 0;
    c.xi_exact = p.rho;
    c.xi = p.rho.to_double();
    return c;
  }

  for (int branch = 1; branch <= 3; ++branch) {
    const Quad xi = bare_coordinate(branch, p);
    if (xi == -Quad::phi_inv() || xi == Quad::phi()) continue;  // excluded; cannot match here
    const ParamTripleQ cand = line_family_point(branch, xi);
    if (cand.rho == p.rho && cand.sigma == p.sigma && cand.tau == p.tau) {
      c.verdict = Verdict::line_family;
      c.branch = branch;
      c.xi_exact = xi;
      c.xi = xi.to_double();
      return c;
    }
  }

  for (int branch = 1; branch <= 3; ++branch) {
    const Quad xi = bare_coordinate(branch, p);
    if (!(xi > Quad::phi() && xi < Quad::phi_sq())) continue;  // strict interval
    const ParamTripleQ cand = curve_family_point(branch, xi);
    if (cand.rho == p.rho && cand.sigma == p.sigma && cand.tau == p.tau) {
      c.verdict = Verdict::curve_family;
      c.branch = branch;
      c.xi_exact = xi;
      c.xi = xi.to_double();
      return c;
    }
  }

  c.verdict = Verdict::non_member;
  return c;
}

Classification classify(const ParamTriple& p, double eps) {
  if (!finite(p)) throw domain_error("classifier: non-finite input");
  Classification c;

  const double phi = ScalarOps<double>::phi();
  const double phi_inv = ScalarOps<double>::phi_inv();
  const double phi_sq = ScalarOps<double>::phi_sq();

  const auto& golden = golden_points();
  for (int i = 0; i < 6; ++i) {
    const ParamTripleQ& g = golden[static_cast<std::size_t>(i)];
    if (std::fabs(p.rho - g.rho.to_double()) <= eps &&
        std::fabs(p.sigma - g.sigma.to_double()) <= eps &&
        std::fabs(p.tau - g.tau.to_double()) <= eps) {
      c.verdict = Verdict::golden_point;
      c.branch = i + 1;
      return c;
    }
  }

  if (std::fabs(p.rho - p.sigma) <= eps && std::fabs(p.sigma - p.tau) <= eps &&
      std::fabs(p.rho - p.tau) <= eps) {
    c.verdict = Verdict::diagonal;
    c.xi = (p.rho + p.sigma + p.tau) / 3.0;
    return c;
  }

  // line family via the two linear relations per branch
  for (int branch = 1; branch <= 3; ++branch) {
    const double xi = bare_coordinate(branch, p);
    bool match = false;
    switch (branch) {
      case 1: match = std::fabs(p.sigma - (p.rho + 2.0)) <= eps && std::fabs(p.tau + p.rho) <= eps; break;
      case 2: match = std::fabs(p.sigma + p.rho) <= eps && std::fabs(p.tau - (2.0 - p.rho)) <= eps; break;
      case 3: match = std::fabs(p.tau + p.sigma) <= eps && std::fabs(p.rho - (2.0 - p.sigma)) <= eps; break;
    }
    if (!match) continue;
    if (std::fabs(xi + phi_inv) <= eps || std::fabs(xi - phi) <= eps) {
      // the puncture itself; closest golden point would have been caught above,
      // so only a tolerance mismatch lands here
      c.verdict = Verdict::golden_point;
      c.branch = 0;
      return c;
    }
    c.verdict = Verdict::line_family;
    c.branch = branch;
    c.xi = xi;
    return c;
  }

  for (int branch = 1; branch <= 3; ++branch) {
    const double xi = bare_coordinate(branch, p);
    if (!(xi > phi + eps && xi < phi_sq - eps)) continue;  // endpoint hits are golden points
    const double u = 1.0 / (1.0 - xi), v = 1.0 - 1.0 / xi;
    bool match = false;
    switch (branch) {
      case 1: match = std::fabs(p.rho - u) <= eps && std::fabs(p.sigma - v) <= eps; break;
      case 2: match = std::fabs(p.sigma - u) <= eps && std::fabs(p.tau - v) <= eps; break;
      case 3: match = std::fabs(p.rho - v) <= eps && std::fabs(p.tau - u) <= eps; break;
    }
    if (!match) continue;
    c.verdict = Verdict::curve_family;
    c.branch = branch;
    c.xi = xi;
    return c;
  }

  c.verdict = Verdict::non_member;
  return c;
}

EnumerateResult enumerate_members(FamilyKind family, int branch, const std::vector<double>& xis) {
  EnumerateResult out;
  const double phi = ScalarOps<double>::phi();
  const double phi_inv = ScalarOps<double>::phi_inv();
  const double phi_sq = ScalarOps<double>::phi_sq();
  for (std::size_t i = 0; i < xis.size(); ++i) {
    const double xi = xis[i];
    if (!std::isfinite(xi)) {
      out.errors.emplace_back(i, "non-finite parameter");
      continue;
    }
    switch (family) {
      case FamilyKind::diagonal:
        out.triples.push_back({xi, xi, xi});
        break;
      case FamilyKind::line: {
        if (xi == -phi_inv || xi == phi) {
          out.errors.emplace_back(i, "parameter at an excluded golden value");
          continue;
        }
        switch (branch) {
          case 1: out.triples.push_back({-xi, 2.0 - xi, xi}); break;
          case 2: out.triples.push_back({xi, -xi, 2.0 - xi}); break;
          case 3: out.triples.push_back({2.0 - xi, xi, -xi}); break;
          default: throw domain_error("classifier: branch must be 1, 2 or 3");
        }
        break;
      }
      case FamilyKind::curve: {
        if (!(xi > phi && xi < phi_sq)) {
          out.errors.emplace_back(i, "parameter outside the open golden interval");
          continue;
        }
        const double u = 1.0 / (1.0 - xi), v = 1.0 - 1.0 / xi;
        switch (branch) {
          case 1: out.triples.push_back({u, v, xi}); break;
          case 2: out.triples.push_back({xi, u, v}); break;
          case 3: out.triples.push_back({v, xi, u}); break;
          default: throw domain_error("classifier: branch must be 1, 2 or 3");
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace ceva
