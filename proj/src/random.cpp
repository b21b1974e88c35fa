#include "g2kit/random.hpp"

namespace g2kit {

Rational random_rational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

Form random_form(std::mt19937_64& rng, int dim, int degree, double density) {
  std::bernoulli_distribution keep(density);
  Form out(dim, degree);
  for (IndexMask m : basis_masks(dim, degree))
    if (keep(rng)) out.add_term(m, random_rational(rng));
  return out;
}

QMatrix random_skew(std::mt19937_64& rng, int n, int max_num, int max_den) {
  QMatrix s(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i + 1; j < s.cols(); ++j) {
      s(i, j) = random_rational(rng, max_num, max_den);
      s(j, i) = -s(i, j);
    }
  return s;
}

QMatrix random_orthogonal(std::mt19937_64& rng, int n) { return cayley_orthogonal(random_skew(rng, n)); }

}  // namespace g2kit
