#include <doctest.h>

#include <random>

#include "g2kit/g2.hpp"
#include "g2kit/random.hpp"
#include "testutil.hpp"

using namespace g2kit;

TEST_CASE("projector ranks and traces") {
  const auto& g2 = standard_omega3();
  const int dims[3] = {1, 7, 27};
  QMatrix sum(35, 35);
  for (int c : dims) {
    const QMatrix p = g2.projector(c);
    CHECK(rank(p) == static_cast<std::size_t>(c));
    CHECK(p.trace() == c);
    CHECK(p * p == p);
    CHECK(p.is_symmetric());
    CHECK(testutil::numeric_rank(testutil::to_eigen(p)) == c);
    sum += p;
  }
  CHECK(sum == QMatrix::identity(35));
}

TEST_CASE("Lambda^3_27 basis annihilates psi0, Lambda^3_7 does not") {
  const auto& g2 = standard_omega3();
  const auto& rep = standard_rep();
  REQUIRE(g2.lambda27_basis().size() == 27);
  std::vector<QVector> v;
  for (const auto& f : g2.lambda27_basis()) {
    CHECK(act(rep, f, g2.psi0()).is_zero());
    CHECK(sgn(inner(f, g2.omega())) == 0);
    v.push_back(f.to_vector());
  }
  CHECK(span_rank(v) == 27);
  for (const auto& f : g2.lambda7_basis()) CHECK_FALSE(act(rep, f, g2.psi0()).is_zero());
}

TEST_CASE("projections are idempotent and complementary on random forms") {
  const auto& g2 = standard_omega3();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Form a = random_form(rng, 7, 3, 0.4);
    const auto p = project3(g2, a);
    CHECK(p.part1 + p.part7 + p.part27 == a);
    CHECK(project3(g2, p.part1).part1 == p.part1);
    CHECK(project3(g2, p.part7).part7 == p.part7);
    CHECK(project3(g2, p.part27).part27 == p.part27);
    CHECK(project3(g2, p.part27).part7.is_zero());
    CHECK(sgn(inner(p.part7, p.part27)) == 0);
    CHECK(p.part1 == (inner(a, g2.omega()) / 7) * g2.omega());
  }
}

TEST_CASE("omega3 and its dual") {
  const auto& g2 = standard_omega3();
  CHECK(g2.star_omega() == hodge(g2.omega()));
  CHECK(wedge(g2.omega(), g2.star_omega()) == Rational(7) * Form::volume(7));
  const auto p = project3(g2, g2.omega());
  CHECK(p.part1 == g2.omega());
  CHECK(p.part7.is_zero());
  CHECK(p.part27.is_zero());
}

TEST_CASE("characteristic torsion of a nearly parallel structure") {
  // d omega = mu0 * omega gives T = -*d omega + mu omega with mu = (d omega, *omega)/6;
  // for d omega = k *omega: mu = 7k/6 and T = (7k/6 - k) omega = k/6 omega.
  const auto& g2 = standard_omega3();
  const Rational k = 6;
  const auto t = char_torsion(g2, k * g2.star_omega());
  CHECK(t.mu == 7);
  CHECK(t.torsion == g2.omega());
  CHECK(t.admissible());
  CHECK(t.t27.is_zero());
}

TEST_CASE("torsion split of a Lambda^3_7 form is not admissible") {
  const auto& g2 = standard_omega3();
  const auto t = torsion_split(g2, g2.lambda7_basis()[0]);
  CHECK_FALSE(t.admissible());
}

TEST_CASE("rejects a 3-form of the wrong norm") {
  CHECK_THROWS(G2Structure(Rational(2) * standard_omega3().omega()));
}
