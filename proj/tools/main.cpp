// Command-line front end: every module behind one binary with JSON reports.
// Exit codes: 0 computed, 1 a verified property was violated, 2 usage or
// domain error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ceva/classifier.hpp"
#include "ceva/cone.hpp"
#include "ceva/geometry.hpp"
#include "ceva/limiting.hpp"
#include "ceva/rng.hpp"
#include "ceva/scalar_io.hpp"
#include "ceva/search.hpp"

using nlohmann::json;
using namespace ceva;

namespace {

json int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json rational_json(const Rational& r) { return json::array({int_json(r.num()), int_json(r.den())}); }

json quad_json(const Quad& x) {
  return json{{"p", rational_json(x.p)}, {"q", rational_json(x.q)}};
}

struct TripleArg {
  bool exact = false;
  ParamTriple f{};
  ParamTripleQ e{};
};

TripleArg parse_triple(const std::string& text, bool force_exact) {
  auto parts = parse_scalar_list(text, 3);
  if (!parts) throw domain_error("cli: expected three comma-separated scalars");
  TripleArg t;
  t.exact = force_exact || (*parts)[0].exact_literal || (*parts)[1].exact_literal ||
            (*parts)[2].exact_literal;
  t.e = {(*parts)[0].value, (*parts)[1].value, (*parts)[2].value};
  t.f = {(*parts)[0].to_double(), (*parts)[1].to_double(), (*parts)[2].to_double()};
  return t;
}

Quad parse_one_exact(const std::string& text) {
  auto v = parse_scalar(text);
  if (!v) throw domain_error("cli: malformed scalar '" + text + "'");
  return v->value;
}

Triangle parse_triangle_arg(const std::string& text) {
  auto parts = parse_scalar_list(text, 3);
  if (!parts) throw domain_error("cli: expected three comma-separated side lengths");
  return make_triangle((*parts)[0].to_double(), (*parts)[1].to_double(), (*parts)[2].to_double());
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) throw domain_error("cli: cannot open output file " + out_path);
    os << j.dump(2) << "\n";
  }
}

json witness_json(const Witness& w) {
  return json{{"triangle", {w.triangle.a, w.triangle.b, w.triangle.c}},
              {"margin", w.margin},
              {"face_hint", w.face_hint
                                ? json{{"family", face_token(w.face_hint->first)},
                                       {"t", w.face_hint->second}}
                                : json(nullptr)}};
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
};

int run_selftest(std::uint64_t seed, const std::string& out_path);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ceva triangle-inequality verification toolkit"};
  app.require_subcommand(1);

  std::string triple_text, triangle_text, out_path, box_text = "-3,4", tau_text, xi_text, t_text;
  bool exact_flag = false;
  double eps = kDefaultEps;
  std::uint64_t seed = 0;  // documented default seed
  long samples = 100000, budget = 100000;
  int grid_n = kDefaultSGrid.n, res = 64, refine = 20, family_tok = 8;

  auto* c_classify = app.add_subcommand("classify", "membership of a parameter triple");
  c_classify->add_option("--triple", triple_text)->required();
  c_classify->add_flag("--exact", exact_flag);
  c_classify->add_option("--eps", eps);
  c_classify->add_option("--witness-budget", budget);
  c_classify->add_option("--seed", seed);
  c_classify->add_option("--out", out_path);

  auto* c_cevians = app.add_subcommand("cevians", "cevian lengths and triangle verdict");
  c_cevians->add_option("--triangle", triangle_text)->required();
  c_cevians->add_option("--triple", triple_text)->required();
  c_cevians->add_option("--eps", eps);
  c_cevians->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify-cone", "sampled cone-invariance check");
  c_verify->add_option("--triple", triple_text)->required();
  c_verify->add_option("--samples", samples);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--out", out_path);

  auto* c_rot = app.add_subcommand("rotation", "exact scaled-rotation identities for a diagonal triple");
  c_rot->add_option("--tau", tau_text)->required();
  c_rot->add_option("--out", out_path);

  auto* c_deg = app.add_subcommand("degenerate", "rank-one case analysis");
  c_deg->add_option("--tau", tau_text)->required();
  c_deg->add_option("--out", out_path);

  auto* c_fam = app.add_subcommand("family4", "line-family diagonalization check");
  c_fam->add_option("--xi", xi_text)->required();
  c_fam->add_option("--out", out_path);

  auto* c_btau = app.add_subcommand("btau", "brute-force level set of the limiting inequalities");
  c_btau->add_option("--tau", tau_text)->required();
  c_btau->add_option("--grid", grid_n);
  c_btau->add_option("--out", out_path);

  auto* c_cross = app.add_subcommand("cross", "cross descriptor for one face and parameter");
  c_cross->add_option("--family", family_tok)->check(CLI::IsMember({8, 9, 10}));
  c_cross->add_option("--t", t_text)->required();
  c_cross->add_option("--tau", tau_text)->required();
  c_cross->add_option("--out", out_path);

  auto* c_ce = app.add_subcommand("counterexample", "witness triangle search for a triple");
  c_ce->add_option("--triple", triple_text)->required();
  c_ce->add_option("--budget", budget);
  c_ce->add_option("--seed", seed);
  c_ce->add_option("--out", out_path);

  auto* c_surface = app.add_subcommand("surface", "boundary surface point cloud for a fixed triangle");
  c_surface->add_option("--triangle", triangle_text)->required();
  c_surface->add_option("--box", box_text);
  c_surface->add_option("--res", res);
  c_surface->add_option("--refine", refine);
  c_surface->add_option("--out", out_path)->required();

  auto* c_fig = app.add_subcommand("figure2", "solution-set curve families dataset");
  c_fig->add_option("--res", res);
  c_fig->add_option("--out", out_path);

  auto* c_self = app.add_subcommand("selftest", "exact identity suite");
  c_self->add_option("--seed", seed);
  c_self->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Timer timer;
  try {
    if (c_classify->parsed()) {
      const TripleArg t = parse_triple(triple_text, exact_flag);
      const Classification cls = t.exact ? classify_exact(t.e) : classify(t.f, eps);
      json j{{"command", "classify"},
             {"triple", {t.f.rho, t.f.sigma, t.f.tau}},
             {"exact", t.exact},
             {"verdict", to_string(cls.verdict)},
             {"branch", cls.branch}};
      if (cls.verdict == Verdict::diagonal || cls.verdict == Verdict::line_family ||
          cls.verdict == Verdict::curve_family) {
        j["xi"] = cls.xi;
        if (cls.exact) j["xi_exact"] = quad_json(cls.xi_exact);
      }
      if (t.exact)
        j["triple_exact"] = {quad_json(t.e.rho), quad_json(t.e.sigma), quad_json(t.e.tau)};
      if (cls.verdict == Verdict::non_member) {
        const WitnessSearch ws = find_witness(t.f, budget, seed);
        j["witness"] = ws.witness ? witness_json(*ws.witness) : json(nullptr);
        j["seed"] = seed;
        j["budget"] = budget;
      }
      j["elapsed_ms"] = timer.ms();
      emit(j, out_path);
      return 0;
    }

    if (c_cevians->parsed()) {
      const Triangle tri = parse_triangle_arg(triangle_text);
      const TripleArg t = parse_triple(triple_text, false);
      const CevianLengths l = cevian_lengths(tri, t.f, eps);
      const TriangleCheck chk = forms_triangle(l.aa, l.bb, l.cc, eps);
      json j{{"command", "cevians"},
             {"triangle", {tri.a, tri.b, tri.c}},
             {"triple", {t.f.rho, t.f.sigma, t.f.tau}},
             {"aa", l.aa},
             {"bb", l.bb},
             {"cc", l.cc},
             {"margin", chk.margin},
             {"verdict", to_string(chk.verdict)},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return 0;
    }

    if (c_verify->parsed()) {
      const TripleArg t = parse_triple(triple_text, false);
      const SamplerReport rep = invariance_sampler(t.f, samples, seed);
      json j{{"command", "verify-cone"},
             {"triple", {t.f.rho, t.f.sigma, t.f.tau}},
             {"samples", rep.samples},
             {"seed", rep.seed},
             {"violations", rep.violations},
             {"worst_margin", rep.worst_margin},
             {"first_violation",
              rep.first_violation
                  ? json::array({rep.first_violation->x, rep.first_violation->y,
                                 rep.first_violation->z})
                  : json(nullptr)},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return rep.violations > 0 ? 1 : 0;
    }

    if (c_rot->parsed()) {
      const Quad tau = parse_one_exact(tau_text);
      const RotationReport<Quad> r = rotation_check(tau);
      json j{{"command", "rotation"},
             {"tau", quad_json(tau)},
             {"scale", quad_json(r.scale)},
             {"scale_str", r.scale.str()},
             {"mtm_ok", r.mtm_ok},
             {"det_ok", r.det_ok},
             {"axis_ok", r.axis_ok},
             {"pass", r.pass()},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return r.pass() ? 0 : 1;
    }

    if (c_deg->parsed()) {
      const Quad tau = parse_one_exact(tau_text);
      const RankOneReport<Quad> r = rank_one_case(tau);
      const bool consistent =
          r.in_intervals == (r.eigvec_in_open_cone && r.eigval.sign() > 0);
      const bool pass = r.null_ok && r.eig_ok && consistent;
      json j{{"command", "degenerate"},
             {"tau", quad_json(tau)},
             {"eigvec",
              {r.eigvec.x.to_double(), r.eigvec.y.to_double(), r.eigvec.z.to_double()}},
             {"eigvec_exact",
              {quad_json(r.eigvec.x), quad_json(r.eigvec.y), quad_json(r.eigvec.z)}},
             {"eigval", r.eigval.to_double()},
             {"eigval_exact", quad_json(r.eigval)},
             {"eigval_str", r.eigval.str()},
             {"null_ok", r.null_ok},
             {"eig_ok", r.eig_ok},
             {"cos_ok", r.cos_ok},
             {"in_intervals", r.in_intervals},
             {"eigvec_in_open_cone", r.eigvec_in_open_cone},
             {"eigvec_on_cone_boundary", r.eigvec_on_cone_boundary},
             {"pass", pass},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return pass ? 0 : 1;
    }

    if (c_fam->parsed()) {
      const Quad xi = parse_one_exact(xi_text);
      const DiagReport r = line_family_diagonalize(xi);
      json j{{"command", "family4"}, {"xi", quad_json(xi)}, {"deferred", r.deferred}};
      if (r.deferred) {
        j["deferred_tau"] = quad_json(r.deferred_tau);
        j["note"] = "excluded parameter: the matrix coincides with the rank-one case";
      } else {
        j["eigenvalues"] = {r.D[0][0].str(), r.D[1][1].str(), r.D[2][2].str()};
        j["similar_ok"] = r.similar_ok;
        j["product_identity"] = r.product_identity;
        j["tail_positive"] = r.tail_positive;
        j["pass"] = r.pass();
      }
      j["elapsed_ms"] = timer.ms();
      emit(j, out_path);
      return (r.deferred || r.pass()) ? 0 : 1;
    }

    if (c_btau->parsed()) {
      const Quad tauq = parse_one_exact(tau_text);
      const double tau = tauq.to_double();
      GridSpec sgrid = kDefaultSGrid;
      sgrid.n = grid_n;
      const auto pts = bruteforce_level_set(tau, kDefaultTGrid, sgrid);
      json arr = json::array();
      for (const auto& p : pts)
        arr.push_back(json{{"rho", p.pt.x},
                           {"sigma", p.pt.y},
                           {"label", p.label},
                           {"special", p.special},
                           {"worst_violation", p.worst_violation}});
      json j{{"command", "btau"},
             {"tau", tau},
             {"grid", sgrid.n},
             {"points", arr},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return 0;
    }

    if (c_cross->parsed()) {
      const double t = parse_one_exact(t_text).to_double();
      const double tau = parse_one_exact(tau_text).to_double();
      const Cross cr = cross_build(*face_from_token(family_tok), t, tau);
      json lines = json::array();
      for (const auto& ln : cr.lines) lines.push_back({{"slope", ln.slope}, {"intercept", ln.intercept}});
      json marks = json::array();
      for (const auto& mk : cr.marks) marks.push_back({mk.x, mk.y});
      json j{{"command", "cross"},
             {"family", family_tok},
             {"t", cr.t},
             {"tau", cr.tau},
             {"coefficients", {{"a", cr.a}, {"b", cr.b}, {"c", cr.c}, {"d", cr.d}, {"g", cr.g}}},
             {"center", {cr.center.x, cr.center.y}},
             {"marks", marks},
             {"lines", lines},
             {"degenerate", cr.degenerate},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return 0;
    }

    if (c_ce->parsed()) {
      const TripleArg t = parse_triple(triple_text, false);
      const WitnessSearch ws = find_witness(t.f, budget, seed);
      json j{{"command", "counterexample"},
             {"triple", {t.f.rho, t.f.sigma, t.f.tau}},
             {"budget", budget},
             {"seed", seed},
             {"evaluations", ws.evaluations},
             {"member", ws.member_short_circuit},
             {"degenerate_point", ws.degenerate_point},
             {"found", ws.witness.has_value()},
             {"witness", ws.witness ? witness_json(*ws.witness) : json(nullptr)},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return 0;
    }

    if (c_surface->parsed()) {
      const Triangle tri = parse_triangle_arg(triangle_text);
      auto box = parse_scalar_list(box_text, 2);
      if (!box) throw domain_error("cli: --box expects 'lo,hi'");
      SurfaceOptions opt;
      opt.lo = (*box)[0].to_double();
      opt.hi = (*box)[1].to_double();
      opt.res = res;
      opt.refine_steps = refine;
      const auto cloud = surface_extract(tri, opt);
      std::ofstream os(out_path);
      if (!os) throw domain_error("cli: cannot open output file " + out_path);
      os << "rho,sigma,tau,margin\n";
      os.precision(17);
      for (const auto& s : cloud)
        os << s.point.rho << "," << s.point.sigma << "," << s.point.tau << "," << s.margin << "\n";
      json j{{"command", "surface"},
             {"triangle", {tri.a, tri.b, tri.c}},
             {"box", {opt.lo, opt.hi}},
             {"res", opt.res},
             {"refine", opt.refine_steps},
             {"points", cloud.size()},
             {"out", out_path},
             {"elapsed_ms", timer.ms()}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (c_fig->parsed()) {
      const SolutionCurves data = figure2_emit(res);
      json polys = json::array();
      for (const auto& pl : data.polylines) {
        json pts = json::array();
        for (const auto& p : pl.pts) pts.push_back({p.rho, p.sigma, p.tau});
        const char* fam = pl.family == FamilyKind::diagonal ? "diagonal"
                          : pl.family == FamilyKind::line   ? "line"
                                                            : "curve";
        polys.push_back({{"family", fam}, {"branch", pl.branch}, {"points", pts}});
      }
      json excluded = json::array();
      for (const auto& g : data.excluded_points)
        excluded.push_back({{"exact", {quad_json(g.rho), quad_json(g.sigma), quad_json(g.tau)}},
                            {"float", {g.rho.to_double(), g.sigma.to_double(), g.tau.to_double()}}});
      json j{{"command", "figure2"},
             {"res", res},
             {"polylines", polys},
             {"punctures",
              {{{"exact", quad_json(data.punctures[0])}, {"float", data.punctures[0].to_double()}},
               {{"exact", quad_json(data.punctures[1])}, {"float", data.punctures[1].to_double()}}}},
             {"excluded_points", excluded},
             {"elapsed_ms", timer.ms()}};
      emit(j, out_path);
      return 0;
    }

    if (c_self->parsed()) return run_selftest(seed, out_path);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

namespace {

int run_selftest(std::uint64_t seed, const std::string& out_path) {
  Timer timer;
  bool all_ok = true;
  json checks = json::array();
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back({{"check", name}, {"pass", ok}});
    all_ok = all_ok && ok;
  };

  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      SampleRng rng(seed, static_cast<std::uint64_t>(i));
      ok = rotation_check(Quad(rng.rational(100, 20))).pass();
    }
    record("rotation identities, 200 random rational tau", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      SampleRng rng(seed, 1000 + static_cast<std::uint64_t>(i));
      const Quad xi(rng.rational(100, 20));
      const DiagReport r = line_family_diagonalize(xi);
      ok = r.deferred || r.pass();
    }
    record("line-family diagonalization, 200 random rational xi", ok);
  }
  {
    bool ok = true;
    for (int ti = 1; ti <= 6 && ok; ++ti)
      for (int taui = -3; taui <= 3 && ok; ++taui) {
        const Quad t(Rational(ti, 2)), tau(Rational(taui, 2));
        for (const Face f : {Face::a_eq_bc, Face::b_eq_ca, Face::c_eq_ab})
          for (int pt = 1; pt <= 4; ++pt) {
            const auto [x, y] = level_point(pt, tau);
            const Quad res =
                boundary_line_residual(cross_coeffs(f, t, tau), designated_line(f, pt), x, y);
            ok = ok && res.is_zero();
          }
      }
    record("distinguished points sit on their designated boundary lines", ok);
  }
  {
    bool ok = true;
    for (const auto& chk : golden_points_consistency()) ok = ok && chk.matches;
    record("six excluded points match the line-family formulas", ok);
  }

  json j{{"command", "selftest"}, {"seed", seed}, {"checks", checks}, {"pass", all_ok},
         {"elapsed_ms", timer.ms()}};
  emit(j, out_path);
  return all_ok ? 0 : 1;
}

}  // namespace
