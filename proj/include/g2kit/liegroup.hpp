#pragma once

// Exact invariant geometry on a Lie group with a left-invariant metric for
// which the chosen basis e_1..e_n of the Lie algebra is orthonormal.
//
// Conventions: [e_i, e_j] = sum_k c^k_ij e_k; invariant 1-forms satisfy
// d e^k = -1/2 sum_ij c^k_ij e^i ^ e^j; connection coefficients are
// Gamma_ijk = <nabla_{e_i} e_j, e_k>; R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y];
// Ric(Y, Z) = sum_i <R(e_i, Y) Z, e_i>.

#include <array>
#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/linalg.hpp"
#include "g2kit/spin7.hpp"

namespace g2kit {

class LieAlgebra {
 public:
  /// One structure constant: c^k_ij = value (1-based indices).
  struct Entry {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational value;
  };

  /// Builds the algebra, filling c^k_ji = -c^k_ij. Throws std::invalid_argument
  /// on conflicting antisymmetric pairs, nonzero c^k_ii or a Jacobi violation.
  LieAlgebra(int dim, const std::vector<Entry>& entries);

  static LieAlgebra abelian(int dim);
  /// R^{n-3} + su(2) with [e_a, e_b] = lambda e_c and cyclic permutations,
  /// where (a, b, c) are 1-based slots.
  static LieAlgebra su2_plus_abelian(int dim, std::array<int, 3> slots, const Rational& lambda);

  int dim() const { return dim_; }
  /// c^k_ij with 0-based indices.
  const Rational& c(int i, int j, int k) const { return c_[index(i, j, k)]; }
  std::vector<Entry> entries() const;

  QVector bracket(const QVector& x, const QVector& y) const;
  bool is_unimodular() const;

  /// The algebra re-expressed in the basis f_s = e_{placement[s]} (1-based).
  LieAlgebra relabeled(const std::vector<int>& placement) const;
  /// The algebra in the basis f_a = sum_b q(b, a) e_b for orthogonal q.
  LieAlgebra rotated(const QMatrix& q) const;

  /// Chevalley-Eilenberg differential on invariant forms.
  Form d(const Form& a) const;
  /// delta = (-1)^{n(k+1)+1} * d * on k-forms.
  Form codiff(const Form& a) const;
  /// <[X, Y], Z> as a 3-form; throws if it is not totally skew (metric not
  /// bi-invariant).
  Form cartan_form() const;

 private:
  LieAlgebra() = default;
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(k);
  }
  void check_jacobi() const;
  void build_differentials();

  int dim_ = 0;
  std::vector<Rational> c_;
  std::vector<Form> d_basis_;  // d e^k
};

/// Forms transformed with the basis change of LieAlgebra::rotated.
Form rotate_form(const Form& a, const QMatrix& q);

/// Left-invariant metric connection given by its coefficients.
struct InvariantConnection {
  LieAlgebra algebra;
  Form torsion;  ///< The torsion 3-form it was built with (0 for Levi-Civita).
  /// gamma[i](k, j) = Gamma_ijk, i.e. the matrix of nabla_{e_i}.
  std::vector<QMatrix> gamma;

  /// <T(e_i, e_j), e_k> recomputed from the coefficients, as a map i,j,k.
  std::vector<Rational> torsion_tensor() const;
  /// True iff Gamma_ijk = -Gamma_ikj for all indices.
  bool is_metric() const;
  /// nabla_{e_i} a for an invariant form (0-based i).
  Form covariant_derivative(int i, const Form& a) const;
};

/// Koszul formula: Gamma_ijk = 1/2 (c_ijk - c_jki + c_kij), c_ijk = c^k_ij.
InvariantConnection levi_civita(const LieAlgebra& g);
/// nabla = nabla^g + 1/2 T(X, Y, -).
InvariantConnection with_torsion(const LieAlgebra& g, const Form& torsion);

struct CurvatureData {
  int dim = 0;
  std::vector<QMatrix> r;  ///< r[i * n + j] = R(e_i, e_j)
  QMatrix ric_nabla;
  QMatrix ric_g;
  Rational scal_g;

  const QMatrix& at(int i, int j) const { return r[static_cast<std::size_t>(i * dim + j)]; }
  bool flat() const;
};

CurvatureData curvature(const InvariantConnection& conn);

/// Ric(X, Y) = 1/4 sum_ij T(X, e_i, e_j) T(Y, e_i, e_j).
QMatrix ric_from_torsion(const Form& torsion);

struct HolonomyAlgebra {
  std::vector<QMatrix> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Infinitesimal holonomy of an invariant connection: the span of the
/// curvature endomorphisms closed under [nabla_Z, .] and brackets.
HolonomyAlgebra holonomy_algebra(const InvariantConnection& conn);

struct ParallelFields {
  std::vector<QVector> basis;
  /// d theta = theta -| T held exactly for every basis element.
  bool d_matches_hook = true;
};

ParallelFields parallel_fields(const InvariantConnection& conn);

/// L_X a via the Cartan formula with the Chevalley-Eilenberg differential.
Form lie_derivative(const LieAlgebra& g, const QVector& x, const Form& a);

struct IntegrabilityResidual {
  std::vector<Spinor> per_direction;  ///< (e_i -| dT + 2 nabla_{e_i} T) . psi
  Spinor sigma;                       ///< (3 dT - 2 sigma_T) . psi
  Spinor square;                      ///< T . T . psi - |T|^2 psi
  bool vanishes() const;
};

IntegrabilityResidual integrability_residual(const InvariantConnection& conn, const Spinor& psi,
                                             const CliffordRep& rep = standard_rep());

}  // namespace g2kit
