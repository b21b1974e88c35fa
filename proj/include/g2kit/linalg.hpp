#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2kit/rational.hpp"

namespace g2kit {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector col(std::size_t c) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;
  Rational trace() const;

  QMatrix& operator+=(const QMatrix& other);
  QMatrix& operator-=(const QMatrix& other);
  QMatrix& operator*=(const Rational& s);

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(Rational s, QMatrix a);
QVector operator*(const QMatrix& a, const QVector& v);
QMatrix commutator(const QMatrix& a, const QMatrix& b);

Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);
QVector scaled(const QVector& v, const Rational& s);
QVector add(const QVector& a, const QVector& b);

struct RowEchelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
/// Basis of {x : m x = 0}; one vector per free column, with that column set to 1.
std::vector<QVector> nullspace(const QMatrix& m);

/// Solution set of A x = b as particular + span(directions).
struct AffineSolution {
  bool consistent = false;
  QVector particular;
  std::vector<QVector> directions;
  /// -1 when the system has no solution.
  int dimension() const { return consistent ? static_cast<int>(directions.size()) : -1; }
};
AffineSolution solve_affine(const QMatrix& a, const QVector& b);

Rational determinant(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);

/// Rank of the span of a list of vectors (all of the same length).
std::size_t span_rank(const std::vector<QVector>& vectors);
/// Linearly independent vectors spanning the same space (rows of the RREF).
std::vector<QVector> span_basis(const std::vector<QVector>& vectors);

/// Cayley transform (I - S)(I + S)^{-1} of a skew matrix: an exactly orthogonal
/// rational matrix.
QMatrix cayley_orthogonal(const QMatrix& skew);

/// One eigenvalue of a symmetric rational matrix. When `exact` is set, `value`
/// is the exact eigenvalue and `multiplicity` was certified by an exact nullity
/// computation; otherwise only `approx` +- `error_bound` is known.
struct EigenvalueEntry {
  bool exact = false;
  Rational value;
  double approx = 0.0;
  double error_bound = 0.0;
  int multiplicity = 0;
};

/// Eigenvalues of a symmetric matrix in ascending order. Rational eigenvalues
/// are recovered exactly; the remainder are reported numerically with a
/// residual-based bound.
std::vector<EigenvalueEntry> symmetric_spectrum(const QMatrix& m);

}  // namespace g2kit
