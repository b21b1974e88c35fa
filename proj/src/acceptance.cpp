#include "g2kit/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "g2kit/classifier.hpp"
#include "g2kit/g2pipeline.hpp"
#include "g2kit/io.hpp"
#include "g2kit/numgeom.hpp"
#include "g2kit/random.hpp"

namespace g2kit {

namespace {

const Rational kMu = 7;

CriterionResult start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::string frac(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

CriterionResult spinor_spectrum() {
  auto r = start(1, "spectrum of omega3 on spinors is {-7 x1, +1 x7}");
  const auto& g2 = standard_omega3();
  const auto spec = spectrum(standard_rep(), g2.omega());
  r.pass = spec.size() == 2 && spec[0].exact && spec[0].value == -7 && spec[0].multiplicity == 1 && spec[1].exact &&
           spec[1].value == 1 && spec[1].multiplicity == 7 &&
           act(standard_rep(), g2.omega(), g2.psi0()) == Rational(-7) * g2.psi0();
  std::ostringstream os;
  for (const auto& e : spec) os << to_string(e.value) << " x" << e.multiplicity << " ";
  os << "psi0 = " << to_string(g2.psi0());
  r.detail = os.str();
  return r;
}

CriterionResult projection_ranks() {
  auto r = start(2, "projector ranks (1, 7, 27); Lambda^3_27 annihilates psi0");
  const auto& g2 = standard_omega3();
  const std::size_t r1 = rank(g2.projector(1)), r7 = rank(g2.projector(7)), r27 = rank(g2.projector(27));
  const auto& basis = g2.lambda27_basis();
  std::vector<QVector> vecs;
  int killed = 0;
  for (const auto& f : basis) {
    vecs.push_back(f.to_vector());
    if (act(standard_rep(), f, g2.psi0()).is_zero()) ++killed;
  }
  const std::size_t basis_rank = span_rank(vecs);
  r.pass = r1 == 1 && r7 == 7 && r27 == 27 && basis.size() == 27 && basis_rank == 27 && killed == 27;
  r.detail = "ranks " + std::to_string(r1) + ", " + std::to_string(r7) + ", " + std::to_string(r27) + "; basis rank " +
             std::to_string(basis_rank) + "; annihilating " + frac(killed, static_cast<int>(basis.size()));
  return r;
}

CriterionResult lemma_grid() {
  auto r = start(3, "solve_family: dimension 9, c = 0, a and b formulas on 24 eigentriples");
  const std::vector<Rational> k1{-1, Rational(1, 2), 2}, k2{0, Rational(3, 7)},
      k3{Rational(1, 3), Rational(-5, 4), Rational(6, 7), Rational(-8, 7)};
  int total = 0, dim_ok = 0, c_ok = 0, a_ok = 0, b_lit = 0, b_rel = 0, param_swapped = 0;
  for (const auto& x : k1)
    for (const auto& y : k2)
      for (const auto& z : k3) {
        ++total;
        const EigenTriple m{x, y, z};
        const auto f = solve_family(m, kMu);
        const auto abs = m.absolute(kMu);
        if (f.dimension() == 9) ++dim_ok;
        if (!f.consistent) continue;
        if (sgn(f.c) == 0 && f.abc_constant) ++c_ok;
        if (f.a == -(abs[0] - abs[1] + abs[2]) / 4) ++a_ok;
        if (f.b == (-abs[0] + abs[1] + abs[2]) / 4) ++b_lit;
        if (f.b == (abs[0] + abs[1] - abs[2]) / 4) ++b_rel;
        if (same_affine_set(lemma_parameterization(m, kMu), solve_family(m.swapped13(), kMu))) ++param_swapped;
      }
  const bool rest = dim_ok == total && c_ok == total && a_ok == total;
  r.pass = rest && b_lit == total;
  r.documented_deviation = !r.pass && rest && b_rel == total && param_swapped == total;
  r.detail = "dim 9 " + frac(dim_ok, total) + ", c = 0 " + frac(c_ok, total) + ", a " + frac(a_ok, total) +
             ", b = (-m1+m2+m3)/4 " + frac(b_lit, total) + ", b = (m1+m2-m3)/4 " + frac(b_rel, total) +
             ", closed form = solved family with m1 <-> m3 " + frac(param_swapped, total);
  return r;
}

CriterionResult kernels() {
  auto r = start(4, "kernel dims (27, 14, 9) for k = (1, 3, 4)");
  const int d1 = kernel_dim(1), d2 = kernel_dim(2), d3 = kernel_dim(3), d4 = kernel_dim(4);
  r.pass = d1 == 27 && d3 == 14 && d4 == 9;
  r.detail = "k = 1..4: " + std::to_string(d1) + ", " + std::to_string(d2) + ", " + std::to_string(d3) + ", " +
             std::to_string(d4) + " (prefixes psi0, psi1, psi2, psi3)";
  return r;
}

CriterionResult values() {
  auto r = start(5, "roots {6mu/7, -8mu/7}; values {0, +-mu/2, mu} grouped 1, 3, 3, 1");
  bool ok = true;
  std::string detail;
  for (const Rational& mu : {Rational(7), Rational(-7, 3), Rational(2)}) {
    const auto roots = eigenvalue_roots(mu);
    const auto en = torsion_value_enumeration(mu);
    const std::map<Rational, int> want{{-mu / 2, 1}, {Rational(0), 3}, {mu / 2, 3}, {mu, 1}};
    bool solved = true;
    for (const auto& p : en.patterns)
      if (!p.solved_constant || p.solved_value != p.value) solved = false;
    ok = ok && roots[0] == Rational(6, 7) * mu && roots[1] == Rational(-8, 7) * mu && en.fibers == want && solved;
    if (mu == 7) {
      for (const auto& [v, n] : en.fibers) detail += to_string(v) + ":" + std::to_string(n) + " ";
      detail += "(mu = 7; also checked mu = -7/3, 2)";
    }
  }
  r.pass = ok;
  r.detail = detail;
  return r;
}

CriterionResult det_e2_members() {
  auto r = start(6, "det_E2 closed form vs brute-force determinant on 10 members; zero at b = 5mu/7");
  std::mt19937_64 rng(61);
  int four = 0, six = 0, total = 10;
  for (int i = 0; i < total; ++i) {
    const auto t = random_template(kMu, rng);
    const Rational closed = det_e2_closed(t.b(kMu), kMu);
    if (closed == det_e2_complement(t.torsion7())) ++four;
    if (closed == det_e2_full(t.torsion7())) ++six;
  }
  const auto at_zero = det_e2(Rational(5) * kMu / 7, kMu);
  const bool zero = sgn(at_zero.closed) == 0 && at_zero.have_member && sgn(at_zero.brute_force) == 0;
  r.pass = six == total && zero;
  r.documented_deviation = !r.pass && four == total && zero;
  r.detail = "4x4 on theta_3-complement of the five-frame " + frac(four, total) + ", 6x6 in R^7 " + frac(six, total) +
             ", b = 5mu/7 closed " + to_string(at_zero.closed) + " brute " + to_string(at_zero.brute_force);
  return r;
}

CriterionResult two_field() {
  auto r = start(7, "two-field branches (2mu/7, 5mu/7) and (2mu/7, -2mu/7); T = 0 on the second");
  bool ok = true;
  std::string detail;
  for (const Rational& mu : {Rational(7), Rational(-14, 3)}) {
    const auto rep = two_field_case_analysis(mu);
    const Rational a = Rational(2) * mu / 7;
    bool first = false, second = false;
    for (const auto& br : rep.branches) {
      if (br.a == a && br.b == Rational(5) * mu / 7) first = br.solution_dimension >= 0 && br.matches_template && !br.excluded;
      if (br.a == a && br.b == Rational(-2) * mu / 7) second = br.excluded;
    }
    ok = ok && rep.branches.size() == 2 && first && second && rep.instance_norm_ok;
    if (mu == 7)
      for (const auto& br : rep.branches)
        detail += "(" + to_string(br.a) + ", " + to_string(br.b) + ") dim " + std::to_string(br.solution_dimension) +
                  (br.excluded ? " excluded; " : " realized; ");
  }
  r.pass = ok;
  r.detail = detail + "also mu = -14/3";
  return r;
}

CriterionResult omega_identities() {
  auto r = start(8, "Omega-form identities and ric_from_torsion eigenvalues {0, 0, mu^2/2 x3}");
  std::vector<TorsionTemplate> members{{kMu, 0, 0, 0}, {0, 0, 0, kMu}};
  if (auto t = template_with_b(Rational(5) * kMu / 7, kMu)) members.push_back(*t);
  int good = 0;
  for (const auto& t : members) {
    const auto rep = omega_form_identities(t, kMu);
    if (t.norm2() == kMu * kMu && rep.all() && rep.pairings[2] == kMu) ++good;
  }
  r.pass = good == static_cast<int>(members.size()) && members.size() == 3;
  r.detail = frac(good, static_cast<int>(members.size())) + " members with A + D = mu and |T|^2 = mu^2";
  return r;
}

CriterionResult cartan_schouten() {
  auto r = start(9, "su(2) + R^4 with T = -Cartan form: R = 0, 7 parallel fields");
  bool ok = true;
  std::string detail;
  for (const Rational& lambda : {Rational(1), Rational(-3, 2)}) {
    const auto g = LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, lambda);
    const auto conn = with_torsion(g, -g.cartan_form());
    const auto curv = curvature(conn);
    const auto pf = parallel_fields(conn);
    ok = ok && curv.flat() && pf.basis.size() == 7 && holonomy_algebra(conn).dimension() == 0;
    if (lambda == 1) detail = std::string("flat ") + (curv.flat() ? "yes" : "no") + ", parallel " + std::to_string(pf.basis.size());
  }
  r.pass = ok;
  r.detail = detail + " (lambda = 1, -3/2)";
  return r;
}

const ChecklistItem* item(const G2Report& g, const std::string& name) {
  for (const auto& it : g.checklist)
    if (it.name == name) return &it;
  return nullptr;
}

CriterionResult pipeline() {
  auto r = start(10, "pipeline on R^4 + su(2): norms, Ric = 0, equivalence, T(theta) = mu, reconstruction");
  bool core = true, literal = true, corrected = true;
  std::string detail;
  for (const Rational& lambda : {Rational(1), Rational(2, 3)}) {
    const auto g = run_pipeline(default_example_algebra(lambda), default_placement());
    const Rational mu2 = g.mu * g.mu;
    const bool c = g.cocalibrated && sgn(g.mu) != 0 && g.norm_d_omega == 6 * mu2 && g.norm_t == mu2 &&
                   g.scal_g == Rational(3, 2) * mu2 && g.ric_nabla.is_zero() && g.conditions_agree() && g.t_theta &&
                   *g.t_theta == g.mu;
    const auto* lit = item(g, "T = sum dtheta_i ^ theta_i");
    const auto* cor = item(g, "T = sum dtheta_i ^ theta_i - 2 T(theta_1, theta_2, theta_3) theta_123");
    core = core && c;
    literal = literal && lit && lit->pass;
    corrected = corrected && cor && cor->pass;
    if (lambda == 1)
      detail = "mu = " + to_string(g.mu) + ", |d omega|^2 = " + to_string(g.norm_d_omega) + ", |T|^2 = " +
               to_string(g.norm_t) + ", Scal = " + to_string(g.scal_g) + ", T(theta) = " +
               (g.t_theta ? to_string(*g.t_theta) : "-") + ", sum dtheta_i ^ theta_i = " + (lit ? lit->witness : "-");
  }
  r.pass = core && literal;
  r.documented_deviation = !r.pass && core && corrected;
  r.detail = detail + "; corrected reconstruction " + (corrected ? "holds" : "fails");
  return r;
}

CriterionResult kahler() {
  auto r = start(11, "Kahler example: Liouville residual < 1e-10, Ricci {0, 0, 4a^2, 4a^2} within 1e-6, < 30 s");
  num::ChartConfig cfg;
  const auto run = num::run_kahler(cfg);
  r.pass = run.pass(cfg) && run.seconds < 30;
  r.detail = "residual " + sci(run.solution->residual) + ", eigen error " + sci(run.eigen_error) + ", " +
             std::to_string(run.points.size()) + " points" + (run.seconds < 30 ? ", under 30 s" : ", over 30 s");
  return r;
}

CriterionResult theorem1() {
  auto r = start(12, "line bundle over the Kahler chart: |T|^2 = 4a^2, dT, d*T, nabla eta, Ric^nabla, O'Neill, non-flat");
  num::ChartConfig cfg;
  const auto run = num::run_theorem1(cfg, cfg.a);
  const auto& s = run.report;
  r.pass = s.pass(cfg.norm_tol, cfg.tol);
  r.detail = "|T|^2 err " + sci(s.norm_t_error) + ", dT " + sci(s.d_t) + ", d*T " + sci(s.d_star_t) + ", nabla eta " +
             sci(s.nabla_eta) + ", Ric " + sci(s.ric_nabla) + ", O'Neill " + sci(s.oneill) + ", max|R| " +
             sci(s.max_curvature);
  return r;
}

CriterionResult properties() {
  auto r = start(13, "property suites (>= 100 cases each)");
  std::mt19937_64 rng(1301);
  const int cases = 100;
  int hodge_ok = 0, anti_ok = 0, dd_ok = 0, proj_ok = 0, order_ok = 0;
  std::uniform_int_distribution<int> deg(0, 7);
  for (int i = 0; i < cases; ++i) {
    const int k = deg(rng);
    const Form a = random_form(rng, 7, k), b = random_form(rng, 7, k);
    if (inner(a, b) == inner(hodge(a), hodge(b)) && wedge(a, hodge(b)) == inner(a, b) * Form::volume(7)) ++hodge_ok;
  }
  std::uniform_int_distribution<int> deg_small(1, 4), slot(0, 6);
  for (int i = 0; i < cases; ++i) {
    const int p = deg_small(rng), q = std::min(deg_small(rng), 7 - p);
    const Form a = random_form(rng, 7, p), b = random_form(rng, 7, q);
    const int x = slot(rng);
    const Form lhs = hook_frame(x, wedge(a, b));
    const Form rhs = wedge(hook_frame(x, a), b) + ((p % 2) ? Rational(-1) : Rational(1)) * wedge(a, hook_frame(x, b));
    if (lhs == rhs) ++anti_ok;
  }
  const std::vector<LieAlgebra> algebras{default_example_algebra(1), LieAlgebra::su2_plus_abelian(7, {1, 3, 5}, Rational(-2, 3)),
                                         LieAlgebra(7, {{1, 2, 3, 1}, {4, 5, 6, 1}, {1, 4, 7, 1}})};
  std::uniform_int_distribution<int> deg_d(0, 5);
  for (int i = 0; i < cases; ++i) {
    const auto g = algebras[static_cast<std::size_t>(i) % algebras.size()].rotated(random_orthogonal(rng, 7));
    const Form a = random_form(rng, 7, deg_d(rng), 0.3);
    if (g.d(g.d(a)).is_zero()) ++dd_ok;
  }
  const auto& g2 = standard_omega3();
  for (int i = 0; i < cases; ++i) {
    const Form a = random_form(rng, 7, 3, 0.4);
    const auto p = project3(g2, a);
    const auto p1 = project3(g2, p.part1), p7 = project3(g2, p.part7), p27 = project3(g2, p.part27);
    if (p1.part1 == p.part1 && p1.part7.is_zero() && p1.part27.is_zero() && p7.part7 == p.part7 && p7.part1.is_zero() &&
        p7.part27.is_zero() && p27.part27 == p.part27 && p27.part1.is_zero() && p27.part7.is_zero())
      ++proj_ok;
  }
  num::ChartConfig cfg;
  cfg.grid = 200;
  cfg.points = 1;
  const auto run = num::run_kahler(cfg);
  num::Box box{num::Vec(4), num::Vec(4)};
  box.lo << cfg.x0, -1, -1, -1;
  box.hi << cfg.x1, 1, 1, 1;
  double worst = 1e9;
  for (int i = 0; i < cases; ++i) {
    const double order = num::fd_convergence_order(run.coframe, box.sample(rng), 1e-2);
    worst = std::min(worst, order);
    if (order >= 1.9) ++order_ok;
  }
  r.pass = hodge_ok == cases && anti_ok == cases && dd_ok == cases && proj_ok == cases && order_ok == cases;
  r.detail = "Hodge " + frac(hodge_ok, cases) + ", antiderivation " + frac(anti_ok, cases) + ", d^2 = 0 " +
             frac(dd_ok, cases) + ", projectors " + frac(proj_ok, cases) + ", FD order >= 1.9 " + frac(order_ok, cases) +
             " (min " + sci(worst) + ")";
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = spinor_spectrum(); break;
    case 2: r = projection_ranks(); break;
    case 3: r = lemma_grid(); break;
    case 4: r = kernels(); break;
    case 5: r = values(); break;
    case 6: r = det_e2_members(); break;
    case 7: r = two_field(); break;
    case 8: r = omega_identities(); break;
    case 9: r = cartan_schouten(); break;
    case 10: r = pipeline(); break;
    case 11: r = kahler(); break;
    case 12: r = theorem1(); break;
    case 13: r = properties(); break;
    default: throw std::invalid_argument("no criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::string s = r.pass ? "PASS" : "FAIL";
  s += " " + std::to_string(r.id);
  if (!r.pass && r.documented_deviation) s += " (documented deviation)";
  s += " " + r.title + ": " + r.detail;
  return s;
}

bool acceptable(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass && !r.documented_deviation) return false;
  return true;
}

}  // namespace g2kit
