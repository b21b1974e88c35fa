#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "g2kit/linalg.hpp"

namespace g2kit {

namespace {

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> convergents(double x, long max_den) {
  std::vector<Rational> out;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  out.emplace_back(h, k);
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 40 && frac > 1e-15; ++iter) {
    double inv = 1.0 / frac;
    long a = static_cast<long>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    Rational q(h, k);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::size_t nullity_at(const QMatrix& m, const Rational& lambda) {
  QMatrix shifted = m;
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
  return m.rows() - rank(shifted);
}

}  // namespace

std::vector<EigenvalueEntry> symmetric_spectrum(const QMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("symmetric_spectrum: matrix is not symmetric");
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd values = solver.eigenvalues();
  const Eigen::MatrixXd vectors = solver.eigenvectors();
  const double scale = 1.0 + a.cwiseAbs().maxCoeff();

  std::vector<EigenvalueEntry> out;
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i + 1;
    while (j < n && values(j) - values(j - 1) < 1e-7 * scale) ++j;
    const auto cluster = static_cast<int>(j - i);
    const double center = values.segment(i, cluster).mean();

    bool certified = false;
    for (const auto& candidate : convergents(center, 1000000)) {
      if (std::abs(candidate.get_d() - center) > 1e-6 * scale) continue;
      if (static_cast<int>(nullity_at(m, candidate)) == cluster) {
        EigenvalueEntry e;
        e.exact = true;
        e.value = candidate;
        e.approx = candidate.get_d();
        e.multiplicity = cluster;
        out.push_back(e);
        certified = true;
        break;
      }
    }
    if (!certified) {
      for (Eigen::Index k = i; k < j; ++k) {
        EigenvalueEntry e;
        e.approx = values(k);
        e.error_bound = (a * vectors.col(k) - values(k) * vectors.col(k)).norm() + 1e-14 * scale;
        e.multiplicity = 1;
        out.push_back(e);
      }
    }
    i = j;
  }
  return out;
}

}  // namespace g2kit
