#pragma once

// G2-structures on R^7: the splitting Lambda^3 = Lambda^3_1 + Lambda^3_7 +
// Lambda^3_27 and the characteristic torsion of a cocalibrated structure.

#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/linalg.hpp"
#include "g2kit/spin7.hpp"

namespace g2kit {

/// A G2 3-form with its Hodge dual, canonical spinor and the data for the
/// exact orthogonal projections of 3-forms.
class G2Structure {
 public:
  /// Validates |omega|^2 = 7 and the spinor spectrum {-7 x1, +1 x7}.
  explicit G2Structure(Form omega, const CliffordRep& rep = standard_rep());

  const Form& omega() const { return omega_; }
  const Form& star_omega() const { return star_omega_; }
  const Spinor& psi0() const { return psi0_; }
  const CliffordRep& rep() const { return *rep_; }

  /// *(e_i ^ omega), i = 1..7: a basis of Lambda^3_7.
  const std::vector<Form>& lambda7_basis() const { return lambda7_; }
  const QMatrix& lambda7_gram_inverse() const { return lambda7_gram_inverse_; }
  /// An exact basis of the orthogonal complement of Lambda^3_1 + Lambda^3_7.
  const std::vector<Form>& lambda27_basis() const { return lambda27_; }

  /// Orthogonal projector onto Lambda^3_k (k = 1, 7, 27) as a 35x35 matrix in
  /// the lexicographic basis of Lambda^3.
  QMatrix projector(int component) const;

 private:
  Form omega_;
  Form star_omega_;
  Spinor psi0_;
  const CliffordRep* rep_;
  std::vector<Form> lambda7_;
  QMatrix lambda7_gram_inverse_;
  std::vector<Form> lambda27_;
};

/// omega3 = e127 + e135 - e146 - e236 - e245 + e347 + e567 with cached data.
const G2Structure& standard_omega3();

struct G2Components {
  Form part1;
  Form part7;
  Form part27;
};

G2Components project3(const G2Structure& g2, const Form& gamma);

struct TorsionDecomposition {
  Form torsion;
  Rational mu;
  Form t1;
  Form t7;  ///< Must vanish for the torsion of a cocalibrated structure.
  Form t27;
  bool admissible() const { return t7.is_zero(); }
};

/// T = -*d(omega) + mu omega with mu = (d omega, *omega) / 6, then split.
TorsionDecomposition char_torsion(const G2Structure& g2, const Form& d_omega);

/// Splits a 3-form with mu := (T, omega), T1 = (mu / 7) omega.
TorsionDecomposition torsion_split(const G2Structure& g2, const Form& torsion);

}  // namespace g2kit
