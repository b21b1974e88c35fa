#pragma once

// Seeded generators of exact random inputs for property checks.

#include <random>

#include "g2kit/form.hpp"
#include "g2kit/linalg.hpp"

namespace g2kit {

/// p/q with |p| <= max_num and 1 <= q <= max_den.
Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 5);
/// Each basis term present with probability density.
Form random_form(std::mt19937_64& rng, int dim, int degree, double density = 0.5);
QMatrix random_skew(std::mt19937_64& rng, int n, int max_num = 3, int max_den = 3);
/// Exactly orthogonal rational matrix (Cayley transform of random_skew).
QMatrix random_orthogonal(std::mt19937_64& rng, int n);

}  // namespace g2kit
