#pragma once

// Real 8-dimensional spin representation of Cl(7) with e_i . e_i = -1.

#include <array>
#include <string>
#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/linalg.hpp"

namespace g2kit {

inline constexpr int kSpinorDim = 8;

class Spinor {
 public:
  Spinor() : c_(kSpinorDim) {}
  explicit Spinor(QVector components);

  const QVector& components() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const { return g2kit::is_zero(c_); }

  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  Spinor& operator*=(const Rational& s);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(const Rational& s, Spinor a) { return a *= s; }
  friend bool operator==(const Spinor& a, const Spinor& b) { return a.c_ == b.c_; }

 private:
  QVector c_;
};

Rational dot(const Spinor& a, const Spinor& b);
std::string to_string(const Spinor& s);

/// Seven anticommuting generators gamma_1..gamma_7, each skew and orthogonal,
/// gamma_i^2 = -Id. The operator of every basis monomial e_I is cached.
class CliffordRep {
 public:
  explicit CliffordRep(std::array<QMatrix, 7> generators);

  const QMatrix& generator(int one_based) const { return gammas_.at(static_cast<std::size_t>(one_based - 1)); }
  const QMatrix& monomial(IndexMask mask) const { return monomials_.at(mask); }

  /// Matrix of the Clifford action of a form on R^8.
  QMatrix operator_of(const Form& a) const;
  QMatrix operator_of(const std::vector<Form>& multivector) const;

 private:
  std::array<QMatrix, 7> gammas_;
  std::vector<QMatrix> monomials_;  // indexed by mask, 128 entries
};

/// Builds the representation as left multiplication by imaginary octonions,
/// the octonion product being defined by the standard 3-form, then fixes the
/// overall sign so that omega3 acts with eigenvalue -7 on a line. Throws
/// std::logic_error if the self-check fails.
CliffordRep build_rep();

/// Shared instance of build_rep().
const CliffordRep& standard_rep();

/// a . psi. Requires dim a = 7.
Spinor act(const CliffordRep& rep, const Form& a, const Spinor& psi);
Spinor act(const CliffordRep& rep, const std::vector<Form>& multivector, const Spinor& psi);

/// Clifford product of two forms, returned as its homogeneous parts indexed by
/// degree 0..n.
std::vector<Form> clifford_product(const Form& a, const Form& b);

/// Clifford sign of e_A . e_B = sign * e_{A xor B}.
int clifford_sign(IndexMask a, IndexMask b);

/// Eigenvalues (with multiplicities) of the action of a form. The operator
/// must be symmetric; std::invalid_argument names the form otherwise.
std::vector<EigenvalueEntry> spectrum(const CliffordRep& rep, const Form& a);

/// Generator of the one-dimensional (-7)-eigenspace of a G2 3-form, scaled so
/// that its first nonzero component is 1. Throws std::invalid_argument when
/// the eigenspace is not a line.
Spinor find_psi0(const CliffordRep& rep, const Form& omega);

}  // namespace g2kit
