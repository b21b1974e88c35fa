#include <doctest.h>

#include <random>
#include <sstream>

#include "g2kit/io.hpp"
#include "g2kit/random.hpp"
#include "g2kit/report.hpp"

using namespace g2kit;

namespace {

bool same_algebra(const LieAlgebra& x, const LieAlgebra& y) {
  if (x.dim() != y.dim()) return false;
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      for (int k = 0; k < x.dim(); ++k)
        if (x.c(i, j, k) != y.c(i, j, k)) return false;
  return true;
}

void expect_error(const std::string& text, int line, int column, const std::string& fragment) {
  try {
    parse_form(text);
    FAIL("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("form parser accepts the documented term syntax") {
  const Form a = parse_form("# omega\n+1 e127 -e146 +3/2e235\n+ e345\n");
  CHECK(a.dim() == 7);
  CHECK(a.degree() == 3);
  CHECK(a.at({1, 2, 7}) == 1);
  CHECK(a.at({1, 4, 6}) == -1);
  CHECK(a.at({2, 3, 5}) == Rational(3, 2));
  CHECK(a.at({3, 4, 5}) == 1);
  const Form b = parse_form("dim 5\ndeg 2\n- 2 e12 + e45\n");
  CHECK(b.dim() == 5);
  CHECK(b.at({1, 2}) == -2);
  CHECK(parse_form("dim 4\ndeg 2\n").is_zero());
}

TEST_CASE("form parser reports line and column") {
  expect_error("e12\n+1/0 e34\n", 2, 1, "zero denominator");
  expect_error("e122\n", 1, 4, "repeated");
  expect_error("dim 3\ne124\n", 2, 4, "exceeds dimension");
  expect_error("- + e12\n", 1, 3, "without basis element");
  expect_error("e12 e123\n", 1, 5, "degree");
  expect_error("e12 +3\n", 1, 5, "without basis element");
  expect_error("\n", 1, 0, "deg");
}

TEST_CASE("form files round-trip") {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 150; ++t) {
    const int dim = 3 + t % 5;
    const int deg = 1 + t % dim;
    const Form a = random_form(rng, dim, deg);
    std::istringstream in(format_form_file(a));
    CHECK(parse_form(in, "round-trip") == a);
  }
}

TEST_CASE("algebra parser and round trip") {
  const LieAlgebra g = parse_algebra("dim 7\n5 6 7 1\n6 7 5 1\n7 5 6 1\n");
  CHECK(same_algebra(g, LieAlgebra::su2_plus_abelian(7, {5, 6, 7}, 1)));
  std::mt19937_64 rng(92);
  for (int t = 0; t < 100; ++t) {
    const LieAlgebra h = LieAlgebra::su2_plus_abelian(4 + t % 4, {1, 2, 3}, random_rational(rng, 5, 3))
                             .rotated(random_orthogonal(rng, 4 + t % 4));
    CHECK(same_algebra(parse_algebra(format_algebra_file(h)), h));
  }
}

TEST_CASE("algebra parser rejects a Jacobi violation with a location") {
  try {
    parse_algebra("dim 3\n1 2 3 1\n1 3 1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() > 0);
  }
  CHECK_THROWS_AS(parse_algebra("dim 3\n1 1 2 1\n"), ParseError);
  CHECK(parse_algebra("1 2 3 1\n").dim() == 3);
}

TEST_CASE("number formatting") {
  CHECK(rational_text(Rational(3)) == "3/1");
  CHECK(rational_text(make_rational(-6, 4)) == "-3/2");
  CHECK(rational_text(Rational(0)) == "0/1");
  CHECK(sci(0.25) == "2.50000000000e-01");
  CHECK(sci(-1234.5) == "-1.23450000000e+03");
}

TEST_CASE("reports are deterministic") {
  CHECK(values_report(7).body.dump() == values_report(7).body.dump());
  CHECK(kernels_report().body.dump() == kernels_report().body.dump());
  num::ChartConfig cfg;
  cfg.points = 3;
  const auto a = kahler_report(cfg, num::run_kahler(cfg));
  const auto b = kahler_report(cfg, num::run_kahler(cfg));
  CHECK(a.body.dump() == b.body.dump());
  CHECK(a.pass);
}

TEST_CASE("report bodies use p/q rationals and checklist items") {
  const auto r = lemma_report({Rational(1, 7), Rational(2, 7), Rational(3, 7)}, 7);
  CHECK(r.pass);
  const auto& checks = r.body.at("checklist");
  REQUIRE(checks.is_array());
  for (const auto& item : checks) {
    CHECK(item.contains("name"));
    CHECK(item.contains("pass"));
    CHECK(item.contains("required"));
    CHECK(item.contains("witness"));
  }
  CHECK(to_json(make_rational(5, 10)) == Json("1/2"));
  const std::string text = render_text(r.body);
  CHECK(text.find("PASS") != std::string::npos);
}
