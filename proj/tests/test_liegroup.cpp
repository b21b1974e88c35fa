#include <doctest.h>

#include <random>

#include "g2kit/g2pipeline.hpp"
#include "g2kit/random.hpp"

using namespace g2kit;

namespace {

LieAlgebra heisenberg_plus_r4() { return LieAlgebra(7, {{1, 2, 3, 1}}); }
LieAlgebra sl2_plus_r4() { return LieAlgebra(7, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}); }
LieAlgebra e2_plus_r4() { return LieAlgebra(7, {{1, 2, 3, 1}, {1, 3, 2, -1}}); }
LieAlgebra solvable_plane() { return LieAlgebra(2, {{1, 2, 2, 1}}); }

std::vector<LieAlgebra> sample_algebras() {
  return {LieAlgebra::abelian(7), default_example_algebra(1), LieAlgebra::su2_plus_abelian(7, {1, 3, 5}, Rational(-2, 3)),
          heisenberg_plus_r4(), sl2_plus_r4(), e2_plus_r4()};
}

// <[X, Y], Z> from the structure constants, independent of the connection code.
Rational bracket_pairing(const LieAlgebra& g, const QVector& x, const QVector& y, const QVector& z) {
  return dot(g.bracket(x, y), z);
}

QVector unit(int n, int i) {
  QVector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace

TEST_CASE("construction validates antisymmetry and Jacobi") {
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 2, 3, 1}, {1, 3, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 2, 3, 1}, {2, 1, 3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 1, 3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 4, 3, 1}}), std::invalid_argument);
  CHECK_NOTHROW(LieAlgebra(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}));
}

TEST_CASE("differential of the su(2) factor") {
  const Rational lambda = 3;
  const auto g = LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, lambda);
  CHECK(g.d(Form::basis(7, {7})) == Form::basis(7, {5, 6}, -lambda));
  CHECK(g.d(Form::basis(7, {5})) == Form::basis(7, {6, 7}, -lambda));
  CHECK(g.d(Form::basis(7, {1})).is_zero());
  CHECK(g.is_unimodular());
  CHECK_FALSE(solvable_plane().is_unimodular());
}

TEST_CASE("d^2 = 0 on random forms of rotated algebras") {
  std::mt19937_64 rng(51);
  const auto algebras = sample_algebras();
  std::uniform_int_distribution<int> deg(0, 6);
  for (int t = 0; t < 120; ++t) {
    const auto g = algebras[static_cast<std::size_t>(t) % algebras.size()].rotated(random_orthogonal(rng, 7));
    const Form a = random_form(rng, 7, deg(rng), 0.3);
    CHECK(g.d(g.d(a)).is_zero());
  }
}

TEST_CASE("d commutes with orthogonal change of basis") {
  std::mt19937_64 rng(52);
  const auto algebras = sample_algebras();
  for (int t = 0; t < 100; ++t) {
    const auto& g = algebras[static_cast<std::size_t>(t) % algebras.size()];
    const QMatrix q = random_orthogonal(rng, 7);
    const Form a = random_form(rng, 7, 1 + t % 4, 0.4);
    CHECK(g.rotated(q).d(rotate_form(a, q)) == rotate_form(g.d(a), q));
  }
  CHECK_THROWS_AS(default_example_algebra().rotated(Rational(2) * QMatrix::identity(7)), std::invalid_argument);
}

TEST_CASE("Levi-Civita connection is metric and torsion free") {
  std::mt19937_64 rng(53);
  for (const auto& g0 : sample_algebras()) {
    const auto g = g0.rotated(random_orthogonal(rng, 7));
    const auto lc = levi_civita(g);
    CHECK(lc.is_metric());
    for (const auto& x : lc.torsion_tensor()) CHECK(sgn(x) == 0);
  }
}

TEST_CASE("bi-invariant su(2): R(X, Y)Z = -1/4 [[X, Y], Z] and Ric = lambda^2 / 2") {
  const Rational lambda = Rational(3, 2);
  const auto g = LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, lambda);
  const auto curv = curvature(levi_civita(g));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        const QVector z = g.bracket(g.bracket(unit(7, i), unit(7, j)), unit(7, k));
        for (int l = 0; l < 7; ++l) {
          // at(i, j)(l, k) is the e_l component of R(e_i, e_j) e_k
          CHECK(curv.at(i, j)(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) == Rational(-1, 4) * z[static_cast<std::size_t>(l)]);
        }
      }
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      const Rational want = (a == b && a >= 4) ? lambda * lambda / 2 : Rational(0);
      CHECK(curv.ric_g(a, b) == want);
    }
  CHECK(curv.scal_g == Rational(3, 2) * lambda * lambda);
}

TEST_CASE("Cartan-Schouten connections are flat with trivial holonomy") {
  for (const Rational& lambda : {Rational(1), Rational(-5, 3)}) {
    const auto g = LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, lambda);
    const Form cartan = g.cartan_form();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
          const Rational want = bracket_pairing(g, unit(7, i), unit(7, j), unit(7, k));
          if (i < j && j < k) CHECK(cartan.at({i + 1, j + 1, k + 1}) == want);
        }
    for (const Form& t : {Rational(-1) * cartan, cartan}) {
      const auto conn = with_torsion(g, t);
      CHECK(conn.is_metric());
      CHECK(curvature(conn).flat());
      CHECK(holonomy_algebra(conn).dimension() == 0);
    }
    const auto pf = parallel_fields(with_torsion(g, -cartan));
    CHECK(pf.basis.size() == 7);
    CHECK(pf.d_matches_hook);
  }
  CHECK_THROWS(sl2_plus_r4().cartan_form());
}

TEST_CASE("torsion of nabla^g + 1/2 T is T") {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 30; ++t) {
    const auto g = sample_algebras()[static_cast<std::size_t>(t) % 6];
    const Form tor = random_form(rng, 7, 3, 0.3);
    const auto conn = with_torsion(g, tor);
    CHECK(conn.is_metric());
    const auto tt = conn.torsion_tensor();
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int k = j + 1; k < 7; ++k) CHECK(tt[static_cast<std::size_t>((i * 7 + j) * 7 + k)] == tor.at({i + 1, j + 1, k + 1}));
  }
  CHECK_THROWS_AS(with_torsion(LieAlgebra::abelian(7), Form::basis(7, {1, 2})), std::invalid_argument);
}

TEST_CASE("ric_from_torsion") {
  const auto r = ric_from_torsion(Form::basis(7, {1, 2, 7}, 2));
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      const bool on = a == b && (a == 0 || a == 1 || a == 6);
      CHECK(r(a, b) == (on ? Rational(2) : Rational(0)));
    }
}

TEST_CASE("Lie derivative of invariant forms") {
  const Rational lambda = 2;
  const auto g = LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, lambda);
  CHECK(lie_derivative(g, unit(7, 4), Form::basis(7, {7})) == Form::basis(7, {6}, -lambda));
  std::mt19937_64 rng(55);
  for (int t = 0; t < 100; ++t) {
    const Form a = random_form(rng, 7, 1 + t % 5, 0.4);
    CHECK(lie_derivative(g, unit(7, t % 4), a).is_zero());
  }
}

TEST_CASE("codifferential") {
  for (const auto& g : sample_algebras()) {
    if (!g.is_unimodular()) continue;
    for (int k = 1; k <= 7; ++k) CHECK(g.codiff(Form::basis(7, {k})).is_zero());
  }
  const auto s = solvable_plane();
  CHECK_FALSE(s.codiff(Form::basis(2, {1})).is_zero());
  CHECK(s.codiff(Form::basis(2, {2})).is_zero());
  CHECK(s.codiff(Form::scalar(2, 1)).is_zero());
}

TEST_CASE("relabeling is a change of basis") {
  const auto g = default_example_algebra(1);
  const auto h = g.relabeled(default_placement());
  // slot 1 holds algebra index 5, slot 2 holds 6, slot 7 holds 7
  CHECK(h.c(0, 1, 6) == 1);
  CHECK_THROWS_AS(g.relabeled({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(g.relabeled({1, 1, 2, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("parallel spinor integrability on the default example") {
  const auto g = default_example_algebra(1).relabeled(default_placement());
  const auto& g2 = standard_omega3();
  const auto r = char_torsion(g2, g.d(g2.omega()));
  const auto conn = with_torsion(g, r.torsion);
  CHECK(integrability_residual(conn, g2.psi0()).vanishes());
}
