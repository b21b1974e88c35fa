#pragma once

#include <Eigen/Dense>

#include "g2kit/linalg.hpp"

namespace testutil {

inline Eigen::MatrixXd to_eigen(const g2kit::QMatrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return out;
}

inline int numeric_rank(const Eigen::MatrixXd& m, double tol = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * std::max(1.0, s[0])) ++r;
  return r;
}

}  // namespace testutil
