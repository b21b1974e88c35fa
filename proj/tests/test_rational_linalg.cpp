#include <doctest.h>

#include <random>

#include "g2kit/linalg.hpp"
#include "g2kit/random.hpp"
#include "testutil.hpp"

using namespace g2kit;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  QMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = random_rational(rng, 4, 3);
  return m;
}

// Rank-deficient by construction: product of thin factors.
QMatrix low_rank(std::mt19937_64& rng, int rows, int cols, int r) {
  return random_matrix(rng, rows, r) * random_matrix(rng, r, cols);
}

}  // namespace

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(parse_rational("+2/8") == make_rational(1, 4));
  CHECK(to_string(make_rational(-7, 2)) == "-7/2");
  CHECK(to_string(make_rational(14, 2)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
}

TEST_CASE("exact square roots") {
  Rational root;
  CHECK(exact_sqrt(make_rational(49, 4), root));
  CHECK(root == make_rational(7, 2));
  CHECK_FALSE(exact_sqrt(Rational(2), root));
  CHECK_FALSE(exact_sqrt(Rational(-4), root));
}

TEST_CASE("rank and nullspace agree with floating-point SVD") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> dim(1, 7);
    const int rows = dim(rng), cols = dim(rng), r = std::min({rows, cols, dim(rng)});
    const QMatrix m = low_rank(rng, rows, cols, r);
    const auto rk = static_cast<int>(rank(m));
    CHECK(rk == testutil::numeric_rank(testutil::to_eigen(m)));
    const auto ns = nullspace(m);
    CHECK(static_cast<int>(ns.size()) == cols - rk);
    for (const auto& v : ns) CHECK(is_zero(m * v));
  }
}

TEST_CASE("determinant matches Eigen and inverse is exact") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int n = dim(rng);
    const QMatrix m = random_matrix(rng, n, n);
    const Rational d = determinant(m);
    CHECK(d.get_d() == doctest::Approx(testutil::to_eigen(m).determinant()).epsilon(1e-9));
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (sgn(d) != 0));
    if (inv) CHECK(*inv * m == QMatrix::identity(static_cast<std::size_t>(n)));
  }
}

TEST_CASE("solve_affine returns the full solution set") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const QMatrix a = low_rank(rng, 5, 6, 3);
    QVector x0(6);
    for (auto& q : x0) q = random_rational(rng);
    const QVector b = a * x0;
    const auto sol = solve_affine(a, b);
    REQUIRE(sol.consistent);
    CHECK(a * sol.particular == b);
    CHECK(sol.dimension() == 3);
    // x0 lies in particular + span(directions)
    auto vecs = sol.directions;
    const auto r = span_rank(vecs);
    vecs.push_back(add(x0, scaled(sol.particular, -1)));
    CHECK(span_rank(vecs) == r);
  }
  QMatrix a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  CHECK_FALSE(solve_affine(a, {1, 2}).consistent);
  CHECK(solve_affine(a, {1, 2}).dimension() == -1);
}

TEST_CASE("Cayley transform is exactly orthogonal") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const QMatrix q = random_orthogonal(rng, 7);
    CHECK(q.transpose() * q == QMatrix::identity(7));
  }
}

TEST_CASE("symmetric spectrum recovers rational eigenvalues exactly") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    // Q diag(d) Q^T with exactly orthogonal Q.
    const QMatrix q = random_orthogonal(rng, 4);
    QMatrix d(4, 4);
    std::map<Rational, int> want;
    for (std::size_t i = 0; i < 4; ++i) {
      d(i, i) = random_rational(rng, 3, 2);
      want[d(i, i)] += 1;
    }
    const auto spec = symmetric_spectrum(q * d * q.transpose());
    std::map<Rational, int> got;
    for (const auto& e : spec) {
      CHECK(e.exact);
      got[e.value] += e.multiplicity;
    }
    CHECK(got == want);
  }
}

TEST_CASE("symmetric spectrum reports irrational eigenvalues numerically") {
  QMatrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  const auto spec = symmetric_spectrum(m);
  REQUIRE(spec.size() == 2);
  CHECK_FALSE(spec[0].exact);
  CHECK(spec[0].approx == doctest::Approx((1 - std::sqrt(5.0)) / 2));
  CHECK(spec[1].approx == doctest::Approx((1 + std::sqrt(5.0)) / 2));
}
