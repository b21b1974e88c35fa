#include <doctest.h>

#include <algorithm>
#include <random>

#include "g2kit/g2pipeline.hpp"
#include "g2kit/random.hpp"

using namespace g2kit;

namespace {

const ChecklistItem* find(const G2Report& r, const std::string& name) {
  for (const auto& it : r.checklist)
    if (it.name == name) return &it;
  return nullptr;
}

}  // namespace

TEST_CASE("default example R^4 + su(2)") {
  for (const Rational& lambda : {Rational(1), Rational(-2), Rational(3, 5)}) {
    const auto r = run_pipeline(default_example_algebra(lambda), default_placement());
    REQUIRE(r.cocalibrated);
    const Rational mu = -lambda;
    CHECK(r.mu == mu);
    CHECK(r.split.torsion == Form::basis(7, {1, 2, 7}, mu));
    CHECK(r.norm_t == mu * mu);
    CHECK(r.norm_d_omega == 6 * mu * mu);
    CHECK(r.scal_g == Rational(3, 2) * mu * mu);
    CHECK(r.ric_nabla.is_zero());
    CHECK(r.conditions_agree());
    CHECK(r.cond_ricci_flat);
    REQUIRE(r.t_theta.has_value());
    CHECK(*r.t_theta == mu);
    CHECK(r.parallel.size() == 7);
    CHECK(r.holonomy_dim == 0);
    CHECK(r.passed());
    // |T|^2 = |d omega|^2 - 2 mu (d omega, *omega)... expanded: 6 mu^2 - 12 mu^2 + 7 mu^2
    CHECK(r.norm_d_omega - 2 * r.mu * inner(r.d_omega, standard_omega3().star_omega()) + 7 * r.mu * r.mu == r.norm_t);
  }
}

TEST_CASE("torsion reconstruction on the default example") {
  const auto r = run_pipeline(default_example_algebra(1), default_placement());
  const auto* literal = find(r, "T = sum dtheta_i ^ theta_i");
  const auto* corrected = find(r, "T = sum dtheta_i ^ theta_i - 2 T(theta_1, theta_2, theta_3) theta_123");
  REQUIRE(literal);
  REQUIRE(corrected);
  // T = mu theta_123 and every dtheta_i ^ theta_i contributes mu theta_123.
  CHECK_FALSE(literal->pass);
  CHECK(literal->witness == "-3 e127");
  CHECK_FALSE(literal->required);
  CHECK(corrected->pass);
}

TEST_CASE("abelian R^7 is torsion free and flat") {
  const auto r = run_pipeline(LieAlgebra::abelian(7), {1, 2, 3, 4, 5, 6, 7});
  CHECK(r.cocalibrated);
  CHECK(sgn(r.mu) == 0);
  CHECK(r.split.torsion.is_zero());
  CHECK(r.ric_nabla.is_zero());
  CHECK(r.ric_g.is_zero());
  CHECK(r.passed());
}

TEST_CASE("misplaced omega3 is flagged with the exact residual") {
  const auto r = run_pipeline(default_example_algebra(1), {1, 2, 3, 5, 4, 6, 7});
  CHECK_FALSE(r.cocalibrated);
  CHECK(r.d_star_omega == Form::basis(7, {1, 2, 3, 6, 7}) + Form::basis(7, {1, 2, 4, 5, 7}) - Form::basis(7, {2, 3, 4, 5, 6}));
  CHECK(r.checklist.empty());
  CHECK_FALSE(r.passed());
}

TEST_CASE("the three equivalent conditions agree on every placement sample") {
  std::mt19937_64 rng(61);
  const std::vector<LieAlgebra> algebras{default_example_algebra(1), LieAlgebra(7, {{1, 2, 3, 1}}),
                                         LieAlgebra(7, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}}),
                                         LieAlgebra(7, {{1, 2, 3, 1}, {1, 3, 2, -1}}),
                                         LieAlgebra::su2_plus_abelian(7, {1, 2, 3}, 2)};
  std::vector<int> perm{1, 2, 3, 4, 5, 6, 7};
  int cocal = 0, total = 0;
  for (const auto& g : algebras)
    for (int t = 0; t < 24; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto r = run_pipeline(g, perm);
      ++total;
      if (!r.cocalibrated) continue;
      ++cocal;
      CHECK(r.conditions_agree());
      CHECK(r.split.admissible());
      CHECK(r.omega_parallel);
      const auto* tw = find(r, "T ^ omega = 0");
      REQUIRE(tw);
      CHECK(tw->pass);
    }
  CHECK(total >= 100);
  CHECK(cocal > 0);
}

TEST_CASE("cocalibrated but not Ricci flat") {
  const auto r = run_pipeline(LieAlgebra(7, {{1, 2, 3, 1}}), {1, 2, 4, 5, 6, 7, 3});
  REQUIRE(r.cocalibrated);
  CHECK_FALSE(r.cond_ricci_flat);
  CHECK_FALSE(r.cond_closed);
  CHECK_FALSE(r.cond_d_omega);
  CHECK(r.conditions_agree());
}

TEST_CASE("pipeline rejects the wrong dimension") {
  CHECK_THROWS_AS(run_pipeline(LieAlgebra::abelian(6), {1, 2, 3, 4, 5, 6}), std::invalid_argument);
}
