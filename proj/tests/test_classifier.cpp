#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "g2kit/classifier.hpp"
#include "g2kit/random.hpp"
#include "testutil.hpp"

using namespace g2kit;

namespace {

const Rational kMu = 7;

// Floating-point dimension of {Sigma in Lambda^3_27 : Sigma psi_i = m_i psi_i}
// assembled directly from the Clifford matrices.
int numeric_family_dim(const std::vector<std::pair<Spinor, double>>& eigen) {
  const auto& g2 = standard_omega3();
  const auto& rep = standard_rep();
  const auto& masks = basis_masks(7, 3);
  const int rows = 8 + 8 * static_cast<int>(eigen.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, 35);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  for (int c = 0; c < 35; ++c) {
    const Form f = Form::from_mask(7, masks[static_cast<std::size_t>(c)]);
    a(0, c) = inner(f, g2.omega()).get_d();
    for (int i = 0; i < 7; ++i) a(1 + i, c) = inner(f, g2.lambda7_basis()[static_cast<std::size_t>(i)]).get_d();
    for (std::size_t s = 0; s < eigen.size(); ++s) {
      const Eigen::MatrixXd op = testutil::to_eigen(rep.operator_of(f));
      Eigen::VectorXd psi(8);
      for (int k = 0; k < 8; ++k) psi[k] = eigen[s].first[static_cast<std::size_t>(k)].get_d();
      a.block(8 + 8 * static_cast<int>(s), c, 8, 1) = op * psi;
      if (c == 0) rhs.segment(8 + 8 * static_cast<int>(s), 8) = eigen[s].second * psi;
    }
  }
  Eigen::MatrixXd aug(rows, 36);
  aug << a, rhs;
  const int r = testutil::numeric_rank(a), ra = testutil::numeric_rank(aug);
  return r == ra ? 35 - r : -1;
}

}  // namespace

TEST_CASE("canonical spinors") {
  const auto psi = canonical_spinors();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(dot(psi[i], psi[j]) == (i == j ? dot(psi[0], psi[0]) : Rational(0)));
}

TEST_CASE("solve_family has dimension 9 and c = 0 on a grid of eigentriples") {
  const std::vector<Rational> grid{-2, Rational(-8, 7), Rational(-1, 3), 0, Rational(1, 2), Rational(6, 7), 3};
  int n = 0;
  for (const auto& x : grid)
    for (const auto& y : grid)
      for (const auto& z : grid) {
        const EigenTriple m{x, y, z};
        const auto f = solve_family(m, kMu);
        CHECK(f.dimension() == 9);
        CHECK(sgn(f.c) == 0);
        CHECK(f.abc_constant);
        ++n;
      }
  CHECK(n == 343);
}

TEST_CASE("solve_family dimension agrees with a floating-point rank computation") {
  std::mt19937_64 rng(71);
  const auto psi = canonical_spinors();
  for (int t = 0; t < 12; ++t) {
    const EigenTriple m{random_rational(rng, 3, 2), random_rational(rng, 3, 2), random_rational(rng, 3, 2)};
    const auto abs = m.absolute(kMu);
    std::vector<std::pair<Spinor, double>> eig;
    for (std::size_t i = 0; i < 3; ++i) eig.emplace_back(psi[i + 1], abs[i].get_d());
    CHECK(numeric_family_dim(eig) == solve_family(m, kMu).dimension());
  }
}

TEST_CASE("family members satisfy the defining equations") {
  std::mt19937_64 rng(72);
  const auto psi = canonical_spinors();
  const auto& rep = standard_rep();
  const auto& g2 = standard_omega3();
  for (int t = 0; t < 100; ++t) {
    const EigenTriple m{random_rational(rng, 4, 3), random_rational(rng, 4, 3), random_rational(rng, 4, 3)};
    const Rational mu = random_rational(rng, 9, 2);
    if (sgn(mu) == 0) continue;
    const auto f = solve_family(m, mu);
    REQUIRE(f.consistent);
    Form member = f.particular;
    for (const auto& d : f.directions) member += random_rational(rng) * d;
    const auto abs = m.absolute(mu);
    CHECK(project3(g2, member).part27 == member);
    for (std::size_t i = 0; i < 3; ++i) CHECK(act(rep, member, psi[i + 1]) == abs[i] * psi[i + 1]);
    CHECK(f.a == -(abs[0] - abs[1] + abs[2]) / 4);
    CHECK(f.b == (abs[0] + abs[1] - abs[2]) / 4);
  }
}

TEST_CASE("closed-form parameterization is the solved family with m1 and m3 interchanged") {
  std::mt19937_64 rng(73);
  int differs = 0;
  for (int t = 0; t < 100; ++t) {
    const EigenTriple m{random_rational(rng, 4, 3), random_rational(rng, 4, 3), random_rational(rng, 4, 3)};
    const auto lemma = lemma_parameterization(m, kMu);
    CHECK(lemma.dimension() == 9);
    CHECK(same_affine_set(lemma, solve_family(m.swapped13(), kMu)));
    if (m.k1 != m.k3 && !same_affine_set(lemma, solve_family(m, kMu))) ++differs;
  }
  CHECK(differs > 0);
  // m = (1, 2, 3) mu / 7 ... with mu = 7: a = -7/2, b = 0 for the solved family.
  const auto f = solve_family({Rational(1, 7), Rational(2, 7), Rational(3, 7)}, kMu);
  CHECK(f.a == Rational(-1, 2));
  CHECK(f.b == 0);
}

TEST_CASE("kernel dimensions agree with floating-point ranks") {
  const auto psi = canonical_spinors();
  const int want[4] = {27, 20, 14, 9};
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::pair<Spinor, double>> eig;
    for (int i = 0; i < k; ++i) eig.emplace_back(psi[static_cast<std::size_t>(i)], 0.0);
    CHECK(kernel_dim(k) == want[k - 1]);
    CHECK(numeric_family_dim(eig) == want[k - 1]);
  }
  CHECK_THROWS_AS(kernel_dim(5), std::invalid_argument);
}

TEST_CASE("eigenvalue roots solve the quadratic") {
  for (const Rational& mu : {Rational(7), Rational(-7), Rational(14, 3), Rational(1)}) {
    const auto r = eigenvalue_roots(mu);
    const double m = mu.get_d();
    const double disc = std::sqrt(4.0 / 49 * m * m + 4 * 48.0 / 49 * m * m);
    const double x1 = (-2.0 / 7 * m + disc) / 2, x2 = (-2.0 / 7 * m - disc) / 2;
    CHECK(std::max(r[0].get_d(), r[1].get_d()) == doctest::Approx(std::max(x1, x2)));
    CHECK(std::min(r[0].get_d(), r[1].get_d()) == doctest::Approx(std::min(x1, x2)));
    for (const auto& x : r) CHECK(sgn(x * x + Rational(2, 7) * mu * x - Rational(48, 49) * mu * mu) == 0);
  }
}

TEST_CASE("torsion values 0, +-mu/2, mu with fibers 1, 3, 3, 1") {
  const auto en = torsion_value_enumeration(kMu);
  CHECK(en.patterns.size() == 8);
  const std::map<Rational, int> want{{Rational(-7, 2), 1}, {0, 3}, {Rational(7, 2), 3}, {7, 1}};
  CHECK(en.fibers == want);
  for (const auto& p : en.patterns) {
    const int lows = p.low[0] + p.low[1] + p.low[2];
    CHECK(p.value == Rational(lows - 1) * kMu / 2);
    CHECK(p.solved_constant);
    CHECK(p.solved_value == p.value);
  }
}

TEST_CASE("det_E2 closed form against a floating-point Pfaffian") {
  std::mt19937_64 rng(74);
  for (int t = 0; t < 100; ++t) {
    const auto tt = random_template(kMu, rng);
    CHECK(tt.norm2() == kMu * kMu);
    Eigen::Matrix4d w = Eigen::Matrix4d::Zero();
    const double A = tt.A.get_d(), B = tt.B.get_d(), C = tt.C.get_d(), D = tt.D.get_d();
    w(0, 1) = A;
    w(0, 2) = B;
    w(1, 3) = B;
    w(0, 3) = -C;
    w(1, 2) = C;
    w(2, 3) = D;
    w -= Eigen::Matrix4d(w.transpose());
    const Rational closed = det_e2_closed(tt.b(kMu), kMu);
    CHECK(closed == det_e2_complement(tt.torsion7()));
    CHECK(closed.get_d() == doctest::Approx(w.determinant()).epsilon(1e-9));
    CHECK(sgn(det_e2_full(tt.torsion7())) == 0);
  }
}

TEST_CASE("det_E2 vanishes at b = 5mu/7") {
  const auto r = det_e2(Rational(5), kMu);
  CHECK(sgn(r.closed) == 0);
  REQUIRE(r.have_member);
  CHECK(sgn(r.brute_force) == 0);
  CHECK(r.agrees());
  const auto q = det_e2(Rational(1, 2), kMu);
  CHECK(q.agrees());
}

TEST_CASE("two-field case analysis") {
  for (const Rational& mu : {Rational(7), Rational(-21, 2)}) {
    const auto rep = two_field_case_analysis(mu);
    REQUIRE(rep.branches.size() == 2);
    const Rational a = Rational(2) * mu / 7;
    int realized = 0, excluded = 0;
    for (const auto& br : rep.branches) {
      CHECK(br.a == a);
      if (br.b == Rational(5) * mu / 7) {
        CHECK(br.solution_dimension == 3);
        CHECK(br.matches_template);
        CHECK_FALSE(br.excluded);
        ++realized;
      } else {
        CHECK(br.b == Rational(-2) * mu / 7);
        CHECK(br.excluded);
        ++excluded;
      }
    }
    CHECK(realized == 1);
    CHECK(excluded == 1);
    CHECK(rep.star_identity);
    CHECK(rep.quadratic_identity);
    CHECK(rep.instance_norm_ok);
  }
}

TEST_CASE("Omega-form identities on members with A + D = mu") {
  std::vector<TorsionTemplate> members{{kMu, 0, 0, 0}, {0, 0, 0, kMu}};
  if (auto t = template_with_b(Rational(5), kMu)) members.push_back(*t);
  REQUIRE(members.size() == 3);
  for (const auto& t : members) {
    REQUIRE(t.norm2() == kMu * kMu);
    const auto r = omega_form_identities(t, kMu);
    CHECK(r.omega_definition_ok);
    CHECK(r.pairings[2] == kMu);
    CHECK(r.d_omega1);
    CHECK(r.d_omega2);
    CHECK(r.d_omega3);
    CHECK(r.ricci_ok);
    CHECK(r.all());
  }
  // Wrong norm breaks the Ricci eigenvalues.
  const auto bad = omega_form_identities({kMu + 1, 0, 0, -1}, kMu);
  CHECK_FALSE(bad.ricci_ok);
}

TEST_CASE("restrict and embed are inverse on the five-frame") {
  std::mt19937_64 rng(75);
  for (int t = 0; t < 100; ++t) {
    const Form a = random_form(rng, 5, 1 + t % 4);
    CHECK(restrict_form(embed_form(a, 7, kFiveFrame), kFiveFrame) == a);
  }
}
