#include <doctest.h>

#include <algorithm>
#include <random>

#include "g2kit/g2.hpp"
#include "g2kit/random.hpp"

using namespace g2kit;

namespace {

// Sign of the permutation sorting `seq` (distinct entries), by inversion count.
int parity(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

std::vector<int> one_based(IndexMask m) {
  std::vector<int> out;
  for (int i : mask_indices(m)) out.push_back(i + 1);
  return out;
}

Form rotated_form(const Form& a, const QMatrix& q) {
  // e^k -> sum_j q(k, j) e^j
  std::vector<Form> images;
  for (std::size_t k = 0; k < q.rows(); ++k) images.push_back(Form::one_form(q.row(k)));
  return substitute(a, images);
}

}  // namespace

TEST_CASE("wedge on basis elements follows permutation parity") {
  CHECK(wedge(Form::basis(7, {1}), Form::basis(7, {2})) == Form::basis(7, {1, 2}));
  CHECK(wedge(Form::basis(7, {1, 2, 7}), Form::basis(7, {3, 4, 5, 6})) == Form::volume(7));
  const auto& omega = standard_omega3().omega();
  CHECK(wedge(omega, omega).is_zero());
  for (int p = 1; p <= 6; ++p)
    for (IndexMask a : basis_masks(7, p))
      for (int q = 1; p + q <= 7; ++q)
        for (IndexMask b : basis_masks(7, q)) {
          const Form w = wedge(Form::from_mask(7, a), Form::from_mask(7, b));
          if (a & b) {
            CHECK(w.is_zero());
            continue;
          }
          auto seq = one_based(a);
          const auto tail = one_based(b);
          seq.insert(seq.end(), tail.begin(), tail.end());
          CHECK(w == Form::from_mask(7, a | b, parity(seq)));
        }
}

TEST_CASE("unsorted basis tuples are permuted with sign") {
  CHECK(Form::basis(7, {2, 1}) == Form::basis(7, {1, 2}, -1));
  CHECK(Form::basis(7, {7, 2, 1}) == Form::basis(7, {1, 2, 7}, -1));
  CHECK(Form::basis(7, {3, 1, 2}) == Form::basis(7, {1, 2, 3}));
  CHECK(Form::basis(7, {1, 1}).is_zero());
  CHECK_THROWS(Form::basis(7, {8}));
}

TEST_CASE("hook examples") {
  const Form e127 = Form::basis(7, {1, 2, 7});
  CHECK(hook_frame(0, e127) == Form::basis(7, {2, 7}));
  CHECK(hook_frame(2, e127).is_zero());
  CHECK(hook_frame(1, e127) == Form::basis(7, {1, 7}, -1));
  CHECK(hook_frame(0, Form::scalar(7, 5)).is_zero());
}

TEST_CASE("antiderivation law on all basis pairs in dimension 7") {
  for (int p = 1; p <= 6; ++p)
    for (IndexMask a : basis_masks(7, p))
      for (int q = 1; p + q <= 7; ++q)
        for (IndexMask b : basis_masks(7, q)) {
          if (a & b) continue;
          const Form fa = Form::from_mask(7, a), fb = Form::from_mask(7, b);
          for (int x = 0; x < 7; ++x) {
            const Form rhs = wedge(hook_frame(x, fa), fb) + Rational(p % 2 ? -1 : 1) * wedge(fa, hook_frame(x, fb));
            CHECK(hook_frame(x, wedge(fa, fb)) == rhs);
          }
        }
}

TEST_CASE("hodge star examples and involution") {
  CHECK(hodge(Form::scalar(7, 1)) == Form::volume(7));
  CHECK(hodge(Form::basis(7, {1, 2, 7})) == Form::basis(7, {3, 4, 5, 6}));
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    for (int n : {4, 5, 7, 8}) {
      std::uniform_int_distribution<int> deg(0, n);
      const int k = deg(rng);
      const Form a = random_form(rng, n, k);
      const Rational sign = (k * (n - k)) % 2 ? -1 : 1;
      CHECK(hodge(hodge(a)) == sign * a);
    }
  }
}

TEST_CASE("hodge isometry and a ^ *b = (a, b) vol for random forms") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> dim(3, 8);
    const int n = dim(rng);
    std::uniform_int_distribution<int> deg(0, n);
    const int k = deg(rng);
    const Form a = random_form(rng, n, k), b = random_form(rng, n, k);
    CHECK(inner(a, b) == inner(hodge(a), hodge(b)));
    CHECK(wedge(a, hodge(b)) == inner(a, b) * Form::volume(n));
    CHECK(inner(a, b) == inner(b, a));
    if (!a.is_zero()) CHECK(sgn(norm2(a)) > 0);
  }
}

TEST_CASE("inner product examples") {
  CHECK(norm2(standard_omega3().omega()) == 7);
  CHECK(inner(Form::basis(7, {1, 2}), Form::basis(7, {1, 2})) == 1);
  CHECK(sgn(inner(Form::basis(7, {1, 2}), Form::basis(7, {1, 3}))) == 0);
  CHECK(sgn(inner(Form::basis(7, {1, 2}), Form::basis(7, {1, 2, 3}))) == 0);
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::uniform_int_distribution<int> deg(0, 3);
    const int p = deg(rng), q = deg(rng), r = std::min(deg(rng), 7 - p - q);
    const Form a = random_form(rng, 7, p), b = random_form(rng, 7, q), c = random_form(rng, 7, std::max(r, 0));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b) == Rational((p * q) % 2 ? -1 : 1) * wedge(b, a));
  }
  CHECK_THROWS_AS(wedge(Form::basis(7, {1}), Form::basis(6, {1})), std::invalid_argument);
}

TEST_CASE("sigma_T examples") {
  CHECK(sigma_T(Form::basis(7, {1, 2, 3})).is_zero());
  CHECK_THROWS_AS(sigma_T(Form::basis(7, {1, 2})), std::invalid_argument);
  std::mt19937_64 rng(24);
  for (int t = 0; t < 20; ++t) {
    const Form a = random_form(rng, 7, 3);
    const Rational c = random_rational(rng);
    CHECK(sigma_T(c * a) == c * c * sigma_T(a));
  }
}

TEST_CASE("sigma_T is independent of the orthonormal frame") {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const Form a = random_form(rng, 7, 3, 0.3);
    const QMatrix q = random_orthogonal(rng, 7);
    std::vector<QVector> frame;
    for (std::size_t c = 0; c < 7; ++c) frame.push_back(q.col(c));
    CHECK(sigma_T(a, frame) == sigma_T(a));
  }
}

TEST_CASE("sigma_T of omega3 acts as a scalar on psi0") {
  const auto& g2 = standard_omega3();
  const Form s = sigma_T(g2.omega());
  CHECK_FALSE(s.is_zero());
  const Spinor v = act(standard_rep(), s, g2.psi0());
  const Rational lambda = v[0] / g2.psi0()[0];
  CHECK(v == lambda * g2.psi0());
  // Same 4-form from a rotated frame and after rotating both omega and the frame.
  std::mt19937_64 rng(26);
  const QMatrix q = random_orthogonal(rng, 7);
  const Form rot = rotated_form(g2.omega(), q);
  CHECK(norm2(rot) == 7);
  CHECK(norm2(sigma_T(rot)) == norm2(s));
}

TEST_CASE("text form") {
  CHECK(to_string(standard_omega3().omega()) == "+1 e127 +1 e135 -1 e146 -1 e236 -1 e245 +1 e347 +1 e567");
  CHECK(to_string(Form(7, 2)) == "0");
}
