#include "g2kit/g2.hpp"

#include <stdexcept>

#include "g2kit/omega3.hpp"

namespace g2kit {

G2Structure::G2Structure(Form omega, const CliffordRep& rep)
    : omega_(std::move(omega)), rep_(&rep) {
  if (omega_.dim() != 7 || omega_.degree() != 3) throw std::invalid_argument("G2 structure needs a 3-form on R^7");
  if (norm2(omega_) != 7) throw std::invalid_argument("G2 3-form must have |omega|^2 = 7");
  star_omega_ = hodge(omega_);
  psi0_ = find_psi0(rep, omega_);

  for (int i = 0; i < 7; ++i) lambda7_.push_back(hodge(wedge(Form::from_mask(7, 1u << i), omega_)));
  QMatrix gram(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) gram(i, j) = inner(lambda7_[i], lambda7_[j]);
  lambda7_gram_inverse_ = *inverse(gram);

  std::vector<QVector> constraints{omega_.to_vector()};
  for (const auto& v : lambda7_) constraints.push_back(v.to_vector());
  for (const auto& coords : nullspace(QMatrix::from_rows(constraints, 35)))
    lambda27_.push_back(Form::from_vector(7, 3, coords));
}

const G2Structure& standard_omega3() {
  static const G2Structure g2(omega3_form());
  return g2;
}

QMatrix G2Structure::projector(int component) const {
  const std::size_t n = 35;
  auto w = omega_.to_vector();
  QMatrix p1(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p1(i, j) = w[i] * w[j] / 7;
  if (component == 1) return p1;

  QMatrix v(n, 7);
  for (std::size_t k = 0; k < 7; ++k) {
    auto col = lambda7_[k].to_vector();
    for (std::size_t i = 0; i < n; ++i) v(i, k) = col[i];
  }
  QMatrix p7 = v * lambda7_gram_inverse_ * v.transpose();
  if (component == 7) return p7;
  if (component == 27) return QMatrix::identity(n) - p1 - p7;
  throw std::invalid_argument("projector: component must be 1, 7 or 27");
}

G2Components project3(const G2Structure& g2, const Form& gamma) {
  if (gamma.dim() != 7 || gamma.degree() != 3) throw std::invalid_argument("project3 needs a 3-form on R^7");
  G2Components out{Form(7, 3), Form(7, 3), Form(7, 3)};
  out.part1 = (inner(gamma, g2.omega()) / 7) * g2.omega();

  const auto& basis = g2.lambda7_basis();
  QVector pairings(7);
  for (std::size_t k = 0; k < 7; ++k) pairings[k] = inner(basis[k], gamma);
  QVector coeffs = g2.lambda7_gram_inverse() * pairings;
  for (std::size_t k = 0; k < 7; ++k) out.part7 += coeffs[k] * basis[k];

  out.part27 = gamma - out.part1 - out.part7;
  return out;
}

TorsionDecomposition torsion_split(const G2Structure& g2, const Form& torsion) {
  auto parts = project3(g2, torsion);
  TorsionDecomposition d;
  d.torsion = torsion;
  d.mu = inner(torsion, g2.omega());
  d.t1 = parts.part1;
  d.t7 = parts.part7;
  d.t27 = parts.part27;
  return d;
}

TorsionDecomposition char_torsion(const G2Structure& g2, const Form& d_omega) {
  if (d_omega.dim() != 7 || d_omega.degree() != 4) throw std::invalid_argument("char_torsion needs d(omega) as a 4-form on R^7");
  Rational mu = inner(d_omega, g2.star_omega()) / 6;
  Form t = mu * g2.omega() - hodge(d_omega);
  auto d = torsion_split(g2, t);
  d.mu = mu;
  return d;
}

}  // namespace g2kit
