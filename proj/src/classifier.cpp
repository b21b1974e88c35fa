#include "g2kit/classifier.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "g2kit/liegroup.hpp"

namespace g2kit {

namespace {

constexpr int kDim = 7;

Rational seventh(const Rational& mu) { return mu / 7; }

Form e(std::initializer_list<int> idx, const Rational& c = 1) { return Form::basis(kDim, idx, c); }

// Linear equations on the 35 coefficients of a 3-form in R^7.
class SigmaSystem {
 public:
  SigmaSystem() : masks_(basis_masks(kDim, 3)) {
    for (auto m : masks_) basis_.push_back(Form::from_mask(kDim, m));
  }

  // Adds rows L(Sigma) = rhs for a linear map L from 3-forms to vectors.
  void add(const std::function<QVector(const Form&)>& map, const QVector& rhs) {
    std::vector<QVector> cols;
    for (const auto& f : basis_) cols.push_back(map(f));
    for (std::size_t r = 0; r < rhs.size(); ++r) {
      QVector row;
      for (const auto& c : cols) row.push_back(c[r]);
      rows_.push_back(std::move(row));
      rhs_.push_back(rhs[r]);
    }
  }

  void add_lambda27() {
    const auto& g2 = standard_omega3();
    add([&](const Form& f) { return QVector{inner(f, g2.omega())}; }, QVector{0});
    for (const auto& l7 : g2.lambda7_basis()) add([&](const Form& f) { return QVector{inner(f, l7)}; }, QVector{0});
  }

  void add_eigen(const Spinor& psi, const Rational& m) {
    const auto& rep = standard_rep();
    add([&](const Form& f) { return act(rep, f, psi).components(); }, (m * psi).components());
  }

  AffineSolution solve() const { return solve_affine(QMatrix::from_rows(rows_, masks_.size()), rhs_); }

  Form to_form(const QVector& v) const { return Form::from_vector(kDim, 3, v); }

 private:
  std::vector<IndexMask> masks_;
  std::vector<Form> basis_;
  std::vector<QVector> rows_;
  QVector rhs_;
};

void fill_abc(Torsion27Family& fam) {
  auto abc = [](const Form& f) {
    return std::array<Rational, 3>{f.at({2, 3, 6}) + f.at({2, 4, 5}), f.at({3, 4, 7}) + f.at({5, 6, 7}),
                                   f.at({2, 3, 5}) - f.at({2, 4, 6})};
  };
  auto p = abc(fam.particular);
  fam.a = p[0];
  fam.b = p[1];
  fam.c = p[2];
  fam.abc_constant = true;
  for (const auto& d : fam.directions) {
    auto v = abc(d);
    if (sgn(v[0]) != 0 || sgn(v[1]) != 0 || sgn(v[2]) != 0) fam.abc_constant = false;
  }
}

Torsion27Family family_from(const SigmaSystem& sys, const AffineSolution& sol) {
  Torsion27Family fam;
  fam.consistent = sol.consistent;
  if (!sol.consistent) return fam;
  fam.particular = sys.to_form(sol.particular);
  for (const auto& d : sol.directions) fam.directions.push_back(sys.to_form(d));
  fill_abc(fam);
  return fam;
}

std::vector<QVector> as_vectors(const std::vector<Form>& forms) {
  std::vector<QVector> out;
  for (const auto& f : forms) out.push_back(f.to_vector());
  return out;
}

Form hook_theta(int slot, const Form& a) { return hook_frame(kThetaSlots[static_cast<std::size_t>(slot)] - 1, a); }

Rational pfaffian_free_det(const Form& two_form, const std::vector<int>& frame) {
  const auto n = frame.size();
  QMatrix m(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m(p, q) = two_form.at({frame[p], frame[q]});
  return determinant(m);
}

TorsionTemplate template_of(const Form& t7) {
  return {t7.at({3, 4, 7}), t7.at({3, 5, 7}), t7.at({4, 5, 7}), t7.at({5, 6, 7})};
}

}  // namespace

std::array<Spinor, 4> canonical_spinors() {
  const auto& g2 = standard_omega3();
  const auto& rep = standard_rep();
  std::array<Spinor, 4> out;
  out[0] = g2.psi0();
  for (std::size_t i = 0; i < 3; ++i) out[i + 1] = act(rep, Form::basis(kDim, {kThetaSlots[i]}), g2.psi0());
  return out;
}

Torsion27Family solve_family(const EigenTriple& m, const Rational& mu) {
  const auto psi = canonical_spinors();
  const auto abs = m.absolute(mu);
  SigmaSystem sys;
  sys.add_lambda27();
  for (std::size_t i = 0; i < 3; ++i) sys.add_eigen(psi[i + 1], abs[i]);
  return family_from(sys, sys.solve());
}

Torsion27Family lemma_parameterization(const EigenTriple& m, const Rational& mu) {
  const auto [m1, m2, m3] = m.absolute(mu);
  const Rational a = -(m1 - m2 + m3) / 4;
  const Rational b = (-m1 + m2 + m3) / 4;
  // Free coefficients in this order.
  enum { t156, t146, t145, t256, t235, t236, t245, t246, t347, t457, t467, t567, kParams };
  std::array<Form, kParams> f;
  f[t156] = e({1, 5, 6}) - e({1, 3, 4});
  f[t146] = e({1, 4, 6}) + e({1, 3, 5});
  f[t145] = e({1, 4, 5}) - e({1, 3, 6});
  f[t256] = e({2, 5, 6}) - e({2, 3, 4});
  f[t235] = e({2, 3, 5});
  f[t236] = e({2, 3, 6});
  f[t245] = e({2, 4, 5});
  f[t246] = e({2, 4, 6});
  f[t347] = e({3, 4, 7});
  f[t457] = e({4, 5, 7}) - e({3, 6, 7});
  f[t467] = e({4, 6, 7}) + e({3, 5, 7});
  f[t567] = e({5, 6, 7});
  const Form base = e({1, 2, 7}, -m1 / 2 - b) + e({1, 3, 5}, m1 / 2 + a);

  QMatrix constraints(3, kParams);
  constraints(0, t236) = 1;
  constraints(0, t245) = 1;
  constraints(1, t347) = 1;
  constraints(1, t567) = 1;
  constraints(2, t235) = 1;
  constraints(2, t246) = -1;
  const auto sol = solve_affine(constraints, {a, b, 0});

  auto combine = [&](const QVector& t, Form start) {
    for (std::size_t p = 0; p < kParams; ++p)
      if (sgn(t[p]) != 0) start += t[p] * f[p];
    return start;
  };
  Torsion27Family fam;
  fam.consistent = sol.consistent;
  fam.particular = combine(sol.particular, base);
  for (const auto& d : sol.directions) fam.directions.push_back(combine(d, Form(kDim, 3)));
  fill_abc(fam);
  return fam;
}

bool same_affine_set(const Torsion27Family& x, const Torsion27Family& y) {
  if (!x.consistent || !y.consistent) return x.consistent == y.consistent;
  auto dx = as_vectors(x.directions);
  auto dy = as_vectors(y.directions);
  const auto rx = span_rank(dx);
  if (rx != span_rank(dy)) return false;
  auto both = dx;
  both.insert(both.end(), dy.begin(), dy.end());
  if (span_rank(both) != rx) return false;
  dx.push_back((x.particular - y.particular).to_vector());
  return span_rank(dx) == rx;
}

int kernel_dim(int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("kernel_dim: k must be in 1..4");
  const auto psi = canonical_spinors();
  SigmaSystem sys;
  sys.add_lambda27();
  for (int i = 0; i < k; ++i) sys.add_eigen(psi[static_cast<std::size_t>(i)], 0);
  return sys.solve().dimension();
}

std::array<Rational, 2> eigenvalue_roots(const Rational& mu) {
  const Rational p = Rational(2, 7) * mu;
  const Rational disc = p * p + 4 * Rational(48, 49) * mu * mu;
  Rational root;
  if (!exact_sqrt(disc, root)) throw std::logic_error("eigenvalue_roots: discriminant is not a square");
  if (sgn(mu) < 0) root = -root;
  return {(-p + root) / 2, (-p - root) / 2};
}

ValueEnumeration torsion_value_enumeration(const Rational& mu) {
  ValueEnumeration out;
  out.mu = mu;
  for (int bits = 0; bits < 8; ++bits) {
    ValuePattern vp;
    std::array<Rational, 3> k;
    for (int i = 0; i < 3; ++i) {
      vp.low[static_cast<std::size_t>(i)] = (bits >> (2 - i)) & 1;
      k[static_cast<std::size_t>(i)] = vp.low[static_cast<std::size_t>(i)] ? Rational(-8, 7) : Rational(6, 7);
    }
    vp.m = {k[0], k[1], k[2]};
    const auto abs = vp.m.absolute(mu);
    vp.value = seventh(mu) - (abs[0] + abs[1] + abs[2]) / 4;
    const auto fam = solve_family(vp.m, mu);
    vp.solved_constant = fam.consistent;
    vp.solved_value = fam.consistent ? seventh(mu) + fam.particular.at({1, 2, 7}) : Rational(0);
    for (const auto& d : fam.directions)
      if (sgn(d.at({1, 2, 7})) != 0) vp.solved_constant = false;
    out.fibers[vp.value] += 1;
    out.patterns.push_back(std::move(vp));
  }
  return out;
}

Form TorsionTemplate::torsion5() const {
  Form t(5, 3);
  t += Form::basis(5, {1, 2, 5}, A);
  t += Form::basis(5, {1, 3, 5}, B) + Form::basis(5, {2, 4, 5}, B);
  t += Form::basis(5, {1, 4, 5}, -C) + Form::basis(5, {2, 3, 5}, C);
  t += Form::basis(5, {3, 4, 5}, D);
  return t;
}

Form TorsionTemplate::torsion7() const { return embed_form(torsion5(), kDim, kFiveFrame); }

TorsionTemplate random_template(const Rational& mu, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  Rational p1 = dist(rng), p2 = dist(rng), p3 = dist(rng);
  const Rational s = p1 * p1 + p2 * p2 + p3 * p3;
  const Rational den = s + 1;
  const Rational y1 = 2 * p1 / den, y2 = 2 * p2 / den, y3 = 2 * p3 / den, y4 = (s - 1) / den;
  const Rational P = mu * y3, Q = mu * y4;
  return {mu * y1, (P + Q) / 2, (P - Q) / 2, mu * y2};
}

std::optional<TorsionTemplate> template_with_b(const Rational& b, const Rational& mu) {
  const Rational s = b + Rational(2) * mu / 7;
  const Rational rho = mu * mu / 2 - s * s / 4;
  if (sgn(rho) < 0) return std::nullopt;
  for (long w = 1; w <= 64; ++w) {
    const Rational target = rho * w * w;
    if (target.get_den() != 1) continue;
    const mpz_class n = target.get_num();
    const long bound = static_cast<long>(std::sqrt(n.get_d())) + 1;
    // Prefer points with x != 0 so that A != D.
    for (long x = bound; x >= 0; --x)
      for (long y = 0; y <= bound; ++y) {
        const mpz_class rest = n - x * x - y * y;
        if (rest < 0) break;
        mpz_class z = sqrt(rest);
        if (z * z != rest) continue;
        const Rational xr = Rational(x) / w;
        TorsionTemplate t{s / 2 + xr, Rational(y) / w, Rational(z) / w, s / 2 - xr};
        return t;
      }
  }
  return std::nullopt;
}

Rational det_e2_closed(const Rational& b, const Rational& mu) {
  const Rational inner_term = -b * b - Rational(4, 7) * b * mu + Rational(45, 49) * mu * mu;
  return inner_term * inner_term / 4;
}

Rational det_e2_complement(const Form& t7) { return pfaffian_free_det(hook_theta(2, t7), {3, 4, 5, 6}); }

Rational det_e2_full(const Form& t7) { return pfaffian_free_det(hook_theta(2, t7), {1, 2, 3, 4, 5, 6}); }

DetE2Report det_e2(const Rational& b, const Rational& mu) {
  DetE2Report r;
  r.b = b;
  r.mu = mu;
  r.closed = det_e2_closed(b, mu);
  if (auto t = template_with_b(b, mu)) {
    r.have_member = true;
    r.member = *t;
    r.brute_force = det_e2_complement(t->torsion7());
    r.full_6x6 = det_e2_full(t->torsion7());
    if (r.closed != r.brute_force) throw std::logic_error("det_e2: closed form and brute force disagree");
  }
  return r;
}

TwoFieldReport two_field_case_analysis(const Rational& mu) {
  TwoFieldReport rep;
  rep.mu = mu;
  const auto psi = canonical_spinors();
  const Form omega_part = seventh(mu) * standard_omega3().omega();
  const auto values = torsion_value_enumeration(mu);
  for (const auto& vp : values.patterns) {
    if (sgn(vp.value) != 0) continue;
    const auto abs = vp.m.absolute(mu);
    const auto fam = solve_family(vp.m, mu);
    // theta_2 -| T = 0 fixes t236 = t245 = mu / 7, hence a = 2 mu / 7.
    if (fam.a != Rational(2) * mu / 7) continue;
    TwoFieldBranch br;
    br.m = vp.m;
    br.a = fam.a;
    br.b = fam.b;
    const Rational& b = fam.b;

    SigmaSystem sys;
    sys.add_lambda27();
    for (std::size_t i = 0; i < 3; ++i) sys.add_eigen(psi[i + 1], abs[i]);
    for (int slot = 0; slot < 2; ++slot) {
      const auto rhs = (-hook_theta(slot, omega_part)).to_vector();
      sys.add([slot](const Form& f) { return hook_theta(slot, f).to_vector(); }, rhs);
    }
    const auto sol = sys.solve();
    br.solution_dimension = sol.dimension();
    if (sol.consistent) {
      const Form t0 = omega_part + sys.to_form(sol.particular);
      const auto tp = template_of(t0);
      bool ok = t0 == tp.torsion7() && tp.b(mu) == b;
      for (const auto& d : sol.directions) {
        const Form df = sys.to_form(d);
        const auto td = template_of(df);
        ok = ok && df == td.torsion7() && sgn(td.A + td.D) == 0;
      }
      br.matches_template = ok;
      br.notes.push_back("solutions are the templates with A + D = b + 2 mu / 7");
    } else {
      br.notes.push_back("theta_1 -| T = theta_2 -| T = 0 is inconsistent with these eigenvalues");
    }
    rep.branches.push_back(std::move(br));
  }

  // b = -2 mu / 7 means A + D = 0; check the identities on a basis of that
  // space (linear identity) and on all pairs of it (quadratic identity).
  const std::array<TorsionTemplate, 3> basis{TorsionTemplate{1, 0, 0, -1}, TorsionTemplate{0, 1, 0, 0},
                                             TorsionTemplate{0, 0, 1, 0}};
  const Form f1234 = Form::basis(5, {1, 2, 3, 4});
  rep.star_identity = true;
  rep.quadratic_identity = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Form ti = basis[i].torsion5();
    const Form dti = hook_frame(4, ti);
    if (!(hodge(ti) == -dti) || !(ti == wedge(Form::basis(5, {5}), dti))) rep.star_identity = false;
    for (std::size_t j = i; j < basis.size(); ++j) {
      const Form dtj = hook_frame(4, basis[j].torsion5());
      if (inner(wedge(dti, dtj), f1234) != -inner(dti, dtj)) rep.quadratic_identity = false;
    }
  }
  for (auto& br : rep.branches)
    if (br.b == Rational(-2) * mu / 7) {
      br.excluded = rep.star_identity && rep.quadratic_identity;
      br.notes.push_back("A = -D gives *T = -dtheta_3 and <dtheta_3 ^ dtheta_3, f1234> = -|dtheta_3|^2, so dT = 0 forces T = 0");
    }
  rep.instance = {mu, 0, 0, 0};
  rep.instance_norm_ok = rep.instance.norm2() == mu * mu && rep.instance.b(mu) == Rational(5) * mu / 7;
  return rep;
}

bool OmegaIdentityReport::all() const {
  return omega_definition_ok && sgn(pairings[0]) == 0 && sgn(pairings[1]) == 0 && omega3_formula && d_omega1 &&
         d_omega2 && d_omega3 && lie_omega1 && lie_omega2 && lie_omega3 && ricci_ok;
}

OmegaIdentityReport omega_form_identities(const TorsionTemplate& t, const Rational& mu) {
  if (sgn(mu) == 0) throw std::invalid_argument("omega_form_identities: mu must be nonzero");
  OmegaIdentityReport r;
  const Form t5 = t.torsion5();
  const Form theta3 = Form::basis(5, {5});
  const std::vector<Rational> theta3_vec{0, 0, 0, 0, 1};
  const Form dtheta3 = hook_frame(4, t5);

  const Form reduced = standard_omega3().omega() - e({1, 2, 7});
  const std::array<Form, 3> literal{Form::basis(5, {1, 3}) - Form::basis(5, {2, 4}),
                                    -Form::basis(5, {1, 4}) - Form::basis(5, {2, 3}),
                                    Form::basis(5, {1, 2}) + Form::basis(5, {3, 4})};
  r.omega_definition_ok = true;
  for (int i = 0; i < 3; ++i) {
    r.omega[static_cast<std::size_t>(i)] = restrict_form(hook_theta(i, reduced), kFiveFrame);
    if (!(r.omega[static_cast<std::size_t>(i)] == literal[static_cast<std::size_t>(i)])) r.omega_definition_ok = false;
    r.pairings[static_cast<std::size_t>(i)] = inner(dtheta3, r.omega[static_cast<std::size_t>(i)]);
  }
  const auto& [o1, o2, o3] = r.omega;
  r.omega3_formula = o3 == (hodge(t5) + dtheta3) * (Rational(1) / mu);

  auto d_parallel = [&t5](const Form& f) {
    Form out(f.dim(), std::min(f.degree() + 1, f.dim()));
    if (f.is_zero()) return out;
    for (int j = 0; j < f.dim(); ++j) out += wedge(hook_frame(j, f), hook_frame(j, t5));
    return out;
  };
  for (std::size_t i = 0; i < 3; ++i) r.d_omega[i] = d_parallel(r.omega[i]);
  r.d_omega1 = r.d_omega[0] == mu * wedge(o2, theta3);
  r.d_omega2 = r.d_omega[1] == -mu * wedge(o1, theta3);
  r.d_omega3 = r.d_omega[2].is_zero();
  r.lie_omega1 = lie_derivative(theta3_vec, o1, d_parallel) == mu * o2;
  r.lie_omega2 = lie_derivative(theta3_vec, o2, d_parallel) == -mu * o1;
  r.lie_omega3 = lie_derivative(theta3_vec, o3, d_parallel).is_zero();

  r.ricci = symmetric_spectrum(ric_from_torsion(t5));
  const Rational half = mu * mu / 2;
  r.ricci_ok = r.ricci.size() == 2 && r.ricci[0].exact && r.ricci[1].exact;
  if (r.ricci_ok) {
    const auto& lo = sgn(half) > 0 ? r.ricci[0] : r.ricci[1];
    const auto& hi = sgn(half) > 0 ? r.ricci[1] : r.ricci[0];
    r.ricci_ok = sgn(lo.value) == 0 && lo.multiplicity == 2 && hi.value == half && hi.multiplicity == 3;
  }
  return r;
}

Form restrict_form(const Form& a, const std::vector<int>& frame) {
  const int n = static_cast<int>(frame.size());
  Form out(n, std::min(a.degree(), n));
  if (a.degree() > n) return out;
  for (const auto& [mask, c] : a.terms()) {
    std::vector<int> idx;
    bool inside = true;
    for (int i : mask_indices(mask)) {
      auto it = std::find(frame.begin(), frame.end(), i + 1);
      if (it == frame.end()) {
        inside = false;
        break;
      }
      idx.push_back(static_cast<int>(it - frame.begin()) + 1);
    }
    if (inside) out += Form::basis(n, idx, c);
  }
  return out;
}

Form embed_form(const Form& a, int dim, const std::vector<int>& frame) {
  if (static_cast<int>(frame.size()) != a.dim()) throw std::invalid_argument("embed_form: frame size mismatch");
  Form out(dim, a.degree());
  for (const auto& [mask, c] : a.terms()) {
    std::vector<int> idx;
    for (int i : mask_indices(mask)) idx.push_back(frame[static_cast<std::size_t>(i)]);
    out += Form::basis(dim, idx, c);
  }
  return out;
}

}  // namespace g2kit
