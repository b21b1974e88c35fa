#include "g2kit/report.hpp"

#include <sstream>

#include "g2kit/io.hpp"

namespace g2kit {

Json to_json(const Rational& q) { return rational_text(q); }

Json to_json(const Form& a) { return to_string(a); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const std::vector<EigenvalueEntry>& spectrum) {
  Json out = Json::array();
  for (const auto& e : spectrum) {
    Json j{{"multiplicity", e.multiplicity}, {"exact", e.exact}};
    if (e.exact)
      j["value"] = to_json(e.value);
    else {
      j["approx"] = sci(e.approx);
      j["error_bound"] = sci(e.error_bound);
    }
    out.push_back(j);
  }
  return out;
}

Json to_json(const ChecklistItem& item) {
  return {{"name", item.name}, {"pass", item.pass}, {"required", item.required}, {"witness", item.witness}};
}

Json to_json(const num::Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(sci(v[i]));
  return out;
}

namespace {

void add_check(Report& r, const std::string& name, bool pass, const std::string& witness = "", bool required = true) {
  r.body["checklist"].push_back(to_json(ChecklistItem{name, pass, witness, required}));
  if (required && !pass) r.pass = false;
}

Json family_json(const Torsion27Family& f) {
  Json j{{"consistent", f.consistent}, {"dimension", f.dimension()}};
  if (f.consistent) {
    j["a"] = to_json(f.a);
    j["b"] = to_json(f.b);
    j["c"] = to_json(f.c);
    j["abc_constant"] = f.abc_constant;
    j["particular"] = to_json(f.particular);
  }
  return j;
}

Json triple_json(const std::array<Rational, 3>& m) { return Json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])}); }

}  // namespace

Report decompose_report(const Form& a) {
  Report r;
  r.body["command"] = "decompose";
  r.body["checklist"] = Json::array();
  const auto& g2 = standard_omega3();
  const auto parts = project3(g2, a);
  r.body["form"] = to_json(a);
  r.body["components"] = {{"1", to_json(parts.part1)}, {"7", to_json(parts.part7)}, {"27", to_json(parts.part27)}};
  r.body["norms2"] = {{"1", to_json(norm2(parts.part1))}, {"7", to_json(norm2(parts.part7))}, {"27", to_json(norm2(parts.part27))}};
  r.body["omega_coefficient"] = to_json(inner(a, g2.omega()) / 7);
  add_check(r, "components sum to the input", parts.part1 + parts.part7 + parts.part27 == a);
  add_check(r, "components pairwise orthogonal",
            sgn(inner(parts.part1, parts.part7)) == 0 && sgn(inner(parts.part1, parts.part27)) == 0 &&
                sgn(inner(parts.part7, parts.part27)) == 0);
  const auto& rep = standard_rep();
  add_check(r, "27-component annihilates psi0", act(rep, parts.part27, g2.psi0()).is_zero());
  return r;
}

Report lemma_report(const EigenTriple& m, const Rational& mu) {
  Report r;
  r.body["command"] = "lemma";
  r.body["checklist"] = Json::array();
  r.body["mu"] = to_json(mu);
  const auto abs = m.absolute(mu);
  r.body["m"] = triple_json(abs);
  const auto fam = solve_family(m, mu);
  r.body["family"] = family_json(fam);
  const Rational a_formula = -(abs[0] - abs[1] + abs[2]) / 4;
  const Rational b_stated = (-abs[0] + abs[1] + abs[2]) / 4;
  const Rational b_relabeled = (abs[0] + abs[1] - abs[2]) / 4;
  r.body["formulas"] = {{"a", to_json(a_formula)}, {"b_stated", to_json(b_stated)}, {"b_relabeled", to_json(b_relabeled)}};
  add_check(r, "dimension 9", fam.dimension() == 9, std::to_string(fam.dimension()));
  add_check(r, "c = 0", fam.consistent && sgn(fam.c) == 0 && fam.abc_constant, fam.consistent ? rational_text(fam.c) : "");
  add_check(r, "a = -(m1 - m2 + m3)/4", fam.consistent && fam.a == a_formula, fam.consistent ? rational_text(fam.a) : "");
  add_check(r, "b = (m1 + m2 - m3)/4", fam.consistent && fam.b == b_relabeled, fam.consistent ? rational_text(fam.b) : "");
  add_check(r, "b = (-m1 + m2 + m3)/4 as labeled", fam.consistent && fam.b == b_stated,
            fam.consistent ? rational_text(fam.b) : "", false);
  const bool same_swapped = same_affine_set(lemma_parameterization(m, mu), solve_family(m.swapped13(), mu));
  const bool same_literal = same_affine_set(lemma_parameterization(m, mu), fam);
  add_check(r, "closed-form parameterization equals the solved family with m1, m3 interchanged", same_swapped);
  add_check(r, "closed-form parameterization equals the solved family as labeled", same_literal, "", false);
  return r;
}

Report values_report(const Rational& mu) {
  Report r;
  r.body["command"] = "values";
  r.body["checklist"] = Json::array();
  r.body["mu"] = to_json(mu);
  const auto roots = eigenvalue_roots(mu);
  r.body["roots"] = Json::array({to_json(roots[0]), to_json(roots[1])});
  const auto en = torsion_value_enumeration(mu);
  Json pats = Json::array();
  bool solved_agree = true;
  for (const auto& p : en.patterns) {
    pats.push_back({{"low", Json::array({p.low[0], p.low[1], p.low[2]})},
                    {"m", triple_json(p.m.absolute(mu))},
                    {"value", to_json(p.value)},
                    {"solved_value", to_json(p.solved_value)},
                    {"solved_constant", p.solved_constant}});
    if (!p.solved_constant || p.solved_value != p.value) solved_agree = false;
  }
  r.body["patterns"] = pats;
  Json fibers = Json::object();
  Json image = Json::array();
  for (const auto& [v, n] : en.fibers) {
    fibers[rational_text(v)] = n;
    image.push_back(to_json(v));
  }
  r.body["fibers"] = fibers;
  r.body["image"] = image;
  const std::map<Rational, int> want{{-mu / 2, 1}, {Rational(0), 3}, {mu / 2, 3}, {mu, 1}};
  add_check(r, "roots are 6mu/7 and -8mu/7", roots[0] == Rational(6, 7) * mu && roots[1] == Rational(-8, 7) * mu);
  add_check(r, "image is {0, mu/2, -mu/2, mu} with fibers 1, 3, 3, 1 by number of -8mu/7 roots", en.fibers == want);
  add_check(r, "solved families give the same constant value", solved_agree);
  return r;
}

Report kernels_report() {
  Report r;
  r.body["command"] = "kernels";
  r.body["checklist"] = Json::array();
  Json dims = Json::object();
  int d[5] = {0, 0, 0, 0, 0};
  for (int k = 1; k <= 4; ++k) {
    d[k] = kernel_dim(k);
    dims[std::to_string(k)] = d[k];
  }
  r.body["kernel_dims"] = dims;
  r.body["interpretation"] = "k = number of leading spinors psi0, psi1, .. annihilated";
  add_check(r, "k = 1: 27", d[1] == 27, std::to_string(d[1]));
  add_check(r, "k = 3: 14", d[3] == 14, std::to_string(d[3]));
  add_check(r, "k = 4: 9", d[4] == 9, std::to_string(d[4]));
  return r;
}

Report det_e2_report(const Rational& b, const Rational& mu) {
  Report r;
  r.body["command"] = "det-e2";
  r.body["checklist"] = Json::array();
  const auto d = det_e2(b, mu);
  r.body["b"] = to_json(b);
  r.body["mu"] = to_json(mu);
  r.body["closed"] = to_json(d.closed);
  r.body["have_member"] = d.have_member;
  if (d.have_member) {
    r.body["member"] = {{"A", to_json(d.member.A)}, {"B", to_json(d.member.B)}, {"C", to_json(d.member.C)},
                        {"D", to_json(d.member.D)}, {"torsion", to_json(d.member.torsion7())}};
    r.body["brute_force"] = to_json(d.brute_force);
    r.body["full_6x6"] = to_json(d.full_6x6);
    add_check(r, "closed form equals the 4x4 determinant on the theta_3-complement in the five-frame",
              d.closed == d.brute_force, rational_text(d.brute_force));
    add_check(r, "closed form equals the 6x6 determinant on the theta_3-complement in R^7", d.closed == d.full_6x6,
              rational_text(d.full_6x6), false);
  } else {
    r.body["note"] = "no family member with this b has |T|^2 = mu^2 and small rational entries";
  }
  return r;
}

Report group_report(const G2Report& g) {
  Report r;
  r.body["command"] = "group-report";
  Json pl = Json::array();
  for (int p : g.placement) pl.push_back(p);
  r.body["placement"] = pl;
  r.body["cocalibrated"] = g.cocalibrated;
  r.body["d_star_omega"] = to_json(g.d_star_omega);
  r.body["d_omega"] = to_json(g.d_omega);
  r.body["mu"] = to_json(g.mu);
  r.body["torsion"] = to_json(g.split.torsion);
  r.body["torsion_parts"] = {{"1", to_json(g.split.t1)}, {"7", to_json(g.split.t7)}, {"27", to_json(g.split.t27)}};
  r.body["norm_t"] = to_json(g.norm_t);
  r.body["norm_d_omega"] = to_json(g.norm_d_omega);
  r.body["checklist"] = Json::array();
  for (const auto& item : g.checklist) r.body["checklist"].push_back(to_json(item));
  if (g.cocalibrated) {
    r.body["omega_parallel"] = g.omega_parallel;
    r.body["ric_nabla"] = to_json(g.ric_nabla);
    r.body["ric_g"] = to_json(g.ric_g);
    r.body["scal_g"] = to_json(g.scal_g);
    Json par = Json::array();
    for (const auto& v : g.parallel) par.push_back(to_json(v));
    r.body["parallel_fields"] = par;
    r.body["holonomy_dim"] = g.holonomy_dim;
    r.body["conditions"] = {{"ricci_flat", g.cond_ricci_flat}, {"torsion_closed_coclosed", g.cond_closed},
                            {"d_star_d_omega", g.cond_d_omega}, {"agree", g.conditions_agree()}};
    r.body["t_theta"] = g.t_theta ? to_json(*g.t_theta) : Json(nullptr);
  }
  r.pass = g.cocalibrated && g.passed();
  return r;
}

namespace {

Json config_json(const num::ChartConfig& c) {
  return {{"a", sci(c.a)},         {"x0", sci(c.x0)},         {"x1", sci(c.x1)},   {"u0", sci(c.u0)},
          {"u1", sci(c.u1)},       {"grid", c.grid},          {"points", c.points}, {"seed", c.seed},
          {"half_width", sci(c.half_width)}, {"h", sci(c.h)}, {"h_outer", sci(c.h_outer)}, {"tol", sci(c.tol)},
          {"norm_tol", sci(c.norm_tol)}};
}

Json kahler_body(const num::ChartConfig& cfg, const num::KahlerRun& run) {
  const auto& s = *run.solution;
  Json j;
  j["config"] = config_json(cfg);
  j["liouville"] = {{"residual", sci(s.residual)},
                    {"iterations", s.iterations},
                    {"concave", s.concave},
                    {"slope", sci(s.slope)},
                    {"refinement_order", sci(run.refinement_order)},
                    {"dense_boundary_error", sci(s.dense_boundary_error)},
                    {"dense_grid_deviation", sci(s.dense_grid_deviation)}};
  Json pts = Json::array();
  for (std::size_t i = 0; i < run.points.size(); ++i)
    pts.push_back({{"point", to_json(run.points[i])}, {"ricci_eigenvalues", to_json(run.eigenvalues[i])}});
  j["samples"] = pts;
  j["eigen_error"] = sci(run.eigen_error);
  j["ricci_asymmetry"] = sci(run.asymmetry);
  j["multiplicities_2_2"] = run.multiplicities_ok;
  return j;
}

}  // namespace

Report kahler_report(const num::ChartConfig& cfg, const num::KahlerRun& run) {
  Report r;
  r.body = kahler_body(cfg, run);
  r.body["command"] = "kahler";
  r.body["checklist"] = Json::array();
  const double k = 4 * cfg.a * cfg.a;
  add_check(r, "Liouville residual < 1e-10", run.solution->residual < 1e-10, sci(run.solution->residual));
  add_check(r, "u concave", run.solution->concave);
  add_check(r, "Ricci eigenvalues {0, 0, 4a^2, 4a^2} within tol", run.eigen_error < cfg.tol,
            sci(run.eigen_error) + " (4a^2 = " + sci(k) + ")");
  add_check(r, "eigenvalue multiplicities (2, 2)", run.multiplicities_ok);
  add_check(r, "Ricci symmetric within 1e-8", run.asymmetry < 1e-8, sci(run.asymmetry));
  add_check(r, "grid refinement order about 2", std::abs(run.refinement_order - 2) < 0.1, sci(run.refinement_order));
  return r;
}

Report theorem1_report(const num::ChartConfig& cfg, const num::Theorem1Run& run) {
  Report r;
  r.body["command"] = "theorem1";
  r.body["base"] = kahler_body(cfg, run.base);
  r.body["checklist"] = Json::array();
  Json hyp = Json::array();
  for (int i = 0; i < 5; ++i)
    hyp.push_back({{"condition", i + 1},
                   {"residual", sci(run.bundle.hypotheses.residual[static_cast<std::size_t>(i)])},
                   {"pass", run.bundle.hypotheses.pass[static_cast<std::size_t>(i)]}});
  r.body["hypotheses"] = hyp;
  const auto& s = run.report;
  Json pts = Json::array();
  for (const auto& p : run.points) pts.push_back(to_json(p));
  r.body["points"] = pts;
  r.body["ric_g_eigenvalues"] = to_json(s.ric_g_eigenvalues);
  add_check(r, "|T|^2 = 4a^2", s.norm_t_error < cfg.norm_tol, sci(s.norm_t_error));
  add_check(r, "dT = 0", s.d_t < cfg.tol, sci(s.d_t));
  add_check(r, "d*T = 0", s.d_star_t < cfg.tol, sci(s.d_star_t));
  add_check(r, "nabla eta = 0", s.nabla_eta < cfg.tol, sci(s.nabla_eta));
  add_check(r, "Ric^nabla = 0", s.ric_nabla < cfg.tol, sci(s.ric_nabla));
  add_check(r, "Ric^g = 1/4 sum T T", s.oneill < cfg.tol, sci(s.oneill));
  add_check(r, "Scal^g = 3/2 |T|^2", s.scal_error < cfg.tol, sci(s.scal_error));
  add_check(r, "Ric^g eigenvalues {0, 0, 2a^2, 2a^2, 2a^2}", s.ric_g_eig_error < cfg.tol, sci(s.ric_g_eig_error));
  add_check(r, "Ric^g symmetric", s.ricci_asymmetry < 1e-8, sci(s.ricci_asymmetry));
  add_check(r, "max |R^nabla| > 0.01", s.max_curvature > 0.01, sci(s.max_curvature));
  return r;
}

namespace {

void render(const Json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render(v, indent + 2, os);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return !x.is_structured(); });
    if (flat) {
      os << pad << j.dump() << "\n";
      return;
    }
    for (const auto& v : j) {
      if (v.is_object() && v.contains("name") && v.contains("pass")) {
        os << pad << (v["pass"].get<bool>() ? "PASS " : (v["required"].get<bool>() ? "FAIL " : "note ")) << v["name"].get<std::string>();
        if (!v["witness"].get<std::string>().empty()) os << "  [" << v["witness"].get<std::string>() << "]";
        os << "\n";
      } else {
        os << pad << "-\n";
        render(v, indent + 2, os);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace g2kit
