#pragma once

// End-to-end check of a left-invariant G2-structure on a 7-dimensional Lie
// group: cocalibration, characteristic torsion, curvature, parallel fields
// and the consequences of Ric^nabla = 0.

#include <optional>
#include <string>
#include <vector>

#include "g2kit/g2.hpp"
#include "g2kit/liegroup.hpp"

namespace g2kit {

struct ChecklistItem {
  std::string name;
  bool pass = false;
  std::string witness;  ///< exact value or residual form
  bool required = true;  ///< false for statements reported but not asserted
};

struct G2Report {
  std::vector<int> placement;
  bool cocalibrated = false;
  Form d_star_omega;
  Form d_omega;
  Rational mu;
  TorsionDecomposition split;
  Rational norm_t, norm_d_omega;
  bool omega_parallel = false;

  // Only filled for cocalibrated structures.
  QMatrix ric_nabla, ric_g;
  Rational scal_g;
  std::vector<QVector> parallel;
  std::size_t holonomy_dim = 0;
  bool cond_ricci_flat = false;    ///< Ric^nabla = 0
  bool cond_closed = false;        ///< dT = 0 and d*T = 0
  bool cond_d_omega = false;       ///< d*d omega - mu d omega = 0
  std::optional<Rational> t_theta;  ///< T(theta_1, theta_2, theta_3) when e_1, e_2, e_7 are parallel
  std::vector<ChecklistItem> checklist;

  bool conditions_agree() const { return cond_ricci_flat == cond_closed && cond_closed == cond_d_omega; }
  bool passed() const;
};

/// R^4 + su(2)_lambda with [e_5, e_6] = lambda e_7 and cyclic permutations.
LieAlgebra default_example_algebra(const Rational& lambda = 1);
/// Places e_5, e_6 of the algebra at theta_1 = e_1, theta_2 = e_2 and e_7 at theta_3.
std::vector<int> default_placement();

/// placement[s] is the 1-based algebra index sitting in slot s + 1 of the
/// standard omega3 frame.
G2Report run_pipeline(const LieAlgebra& algebra, const std::vector<int>& placement);

}  // namespace g2kit
