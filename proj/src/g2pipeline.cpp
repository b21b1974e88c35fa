#include "g2kit/g2pipeline.hpp"

#include <stdexcept>

namespace g2kit {

namespace {

std::string flag(bool b) { return b ? "0" : "nonzero"; }

Rational quad(const QMatrix& m, const QVector& v) { return dot(v, m * v); }

}  // namespace

bool G2Report::passed() const {
  if (!cocalibrated) return false;
  for (const auto& item : checklist)
    if (item.required && !item.pass) return false;
  return true;
}

LieAlgebra default_example_algebra(const Rational& lambda) {
  return LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, lambda);
}

std::vector<int> default_placement() { return {5, 6, 1, 2, 3, 4, 7}; }

G2Report run_pipeline(const LieAlgebra& algebra, const std::vector<int>& placement) {
  if (algebra.dim() != 7) throw std::invalid_argument("run_pipeline needs a 7-dimensional algebra");
  const LieAlgebra h = algebra.relabeled(placement);
  const auto& g2 = standard_omega3();
  const Form& omega = g2.omega();

  G2Report r;
  r.placement = placement;
  r.d_omega = h.d(omega);
  r.d_star_omega = h.d(g2.star_omega());
  r.cocalibrated = r.d_star_omega.is_zero();
  r.split = char_torsion(g2, r.d_omega);
  r.mu = r.split.mu;
  r.norm_t = norm2(r.split.torsion);
  r.norm_d_omega = norm2(r.d_omega);
  if (!r.cocalibrated) return r;

  const Form& t = r.split.torsion;
  const auto conn = with_torsion(h, t);
  r.omega_parallel = true;
  for (int i = 0; i < 7; ++i)
    if (!conn.covariant_derivative(i, omega).is_zero()) r.omega_parallel = false;

  const auto curv = curvature(conn);
  r.ric_nabla = curv.ric_nabla;
  r.ric_g = curv.ric_g;
  r.scal_g = curv.scal_g;
  const auto pf = parallel_fields(conn);
  r.parallel = pf.basis;
  r.holonomy_dim = holonomy_algebra(conn).dimension();

  const Form dt = h.d(t);
  const Form d_star_t = h.d(hodge(t));
  const Form d_omega_residual = h.d(hodge(r.d_omega)) - r.mu * r.d_omega;
  r.cond_ricci_flat = r.ric_nabla.is_zero();
  r.cond_closed = dt.is_zero() && d_star_t.is_zero();
  r.cond_d_omega = d_omega_residual.is_zero();

  auto add = [&r](std::string name, bool pass, std::string witness, bool required = true) {
    r.checklist.push_back({std::move(name), pass, std::move(witness), required});
  };
  const Rational mu2 = r.mu * r.mu;
  add("T7 = 0", r.split.admissible(), to_string(r.split.t7));
  add("nabla omega = 0", r.omega_parallel, "");
  add("(Ric=0) <=> (dT=0, d*T=0) <=> (d*d omega = mu d omega)", r.conditions_agree(),
      std::string("Ric ") + flag(r.cond_ricci_flat) + ", dT/d*T " + flag(r.cond_closed) + ", d*d omega - mu d omega " +
          to_string(d_omega_residual));
  add("T ^ omega = 0", wedge(t, omega).is_zero(), to_string(wedge(t, omega)));
  add("(*d omega - mu omega) ^ omega = 0", wedge(hodge(r.d_omega) - r.mu * omega, omega).is_zero(), "");
  add("dtheta = theta -| T for parallel theta", pf.d_matches_hook, "");

  if (r.cond_ricci_flat) {
    add("|d omega|^2 = 6 mu^2", r.norm_d_omega == 6 * mu2, to_string(r.norm_d_omega));
    add("|T|^2 = mu^2", r.norm_t == mu2, to_string(r.norm_t));
    add("Scal^g = 3/2 |T|^2", r.scal_g == Rational(3, 2) * r.norm_t, to_string(r.scal_g));
    add("Ric^g = 1/4 T T", r.ric_g == ric_from_torsion(t), "");
    add("delta T = 0", h.codiff(t).is_zero(), to_string(h.codiff(t)));
    bool ric_theta = true, lie_t = true;
    for (const auto& theta : r.parallel) {
      const Form dtheta = h.d(Form::one_form(theta));
      if (quad(r.ric_g, theta) != norm2(dtheta) / 2) ric_theta = false;
      if (!lie_derivative(h, theta, t).is_zero()) lie_t = false;
    }
    add("Ric^g(theta, theta) = 1/2 |dtheta|^2", ric_theta, "");
    add("L_theta T = 0", lie_t, "");
    if (r.holonomy_dim != 0) {
      const auto n = r.parallel.size();
      add("dim P in {0, 1, 3} (non-flat)", n == 0 || n == 1 || n == 3, std::to_string(n));
    }
  }

  // Items for theta = (e_1, e_2, e_7) when these are parallel.
  std::vector<QVector> thetas;
  for (int slot : {1, 2, 7}) {
    QVector v(7);
    v[static_cast<std::size_t>(slot - 1)] = 1;
    thetas.push_back(v);
  }
  auto in_span = [&](const QVector& v) {
    auto span = r.parallel;
    const auto before = span_rank(span);
    span.push_back(v);
    return span_rank(span) == before;
  };
  if (in_span(thetas[0]) && in_span(thetas[1]) && in_span(thetas[2])) {
    const Rational value = t.at({1, 2, 7});
    r.t_theta = value;
    add("omega(theta_1, theta_2, theta_3) = 1", omega.at({1, 2, 7}) == 1, to_string(omega.at({1, 2, 7})));
    const bool allowed = sgn(value) == 0 || value == r.mu || value == r.mu / 2 || value == -r.mu / 2;
    add("T(theta_1, theta_2, theta_3) in {0, +-mu/2, mu}", allowed, to_string(value));
    bool mixed = true;
    for (int i : {1, 2, 7})
      for (int j : {1, 2, 7})
        for (int x : {3, 4, 5, 6})
          if (sgn(t.at({i, j, x})) != 0) mixed = false;
    add("T(theta_i, theta_j, X) = 0", mixed, "");
    Form by_hook(7, 3), by_d(7, 3);
    for (const auto& th : thetas) {
      const Form one = Form::one_form(th);
      by_hook += wedge(hook(th, t), one);
      by_d += wedge(h.d(one), one);
    }
    // The plain sums count the theta_123 component three times; they equal T
    // only when T(theta_1, theta_2, theta_3) = 0.
    const bool zero_value = sgn(value) == 0;
    add("T = sum (theta_i -| T) ^ theta_i", by_hook == t, to_string(by_hook), zero_value);
    add("T = sum dtheta_i ^ theta_i", by_d == t, to_string(by_d), zero_value);
    const Form corrected = by_d - Form::basis(7, {1, 2, 7}, 2 * value);
    add("T = sum dtheta_i ^ theta_i - 2 T(theta_1, theta_2, theta_3) theta_123", corrected == t && by_hook == by_d,
        to_string(corrected));
    const QVector bracket = h.bracket(thetas[0], thetas[1]);
    add("[theta_1, theta_2] = -T(theta_1, theta_2, theta_3) theta_3", bracket == scaled(thetas[2], -value), "");
    if (value == r.mu) {
      const Form pure = Form::basis(7, {1, 2, 7}, r.mu);
      bool t_parallel = true;
      for (int i = 0; i < 7; ++i)
        if (!conn.covariant_derivative(i, t).is_zero()) t_parallel = false;
      add("T = mu theta_123 and nabla T = 0", t == pure && t_parallel, to_string(t));
    }
    add("parallel spinor integrability", integrability_residual(conn, g2.psi0()).vanishes(), "");
  }
  return r;
}

}  // namespace g2kit
