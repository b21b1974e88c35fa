#pragma once

// Torsion forms of cocalibrated G2-structures admitting three orthonormal
// parallel fields theta_1 = e_1, theta_2 = e_2, theta_3 = e_7 in the frame of
// the standard omega3. Everything is exact; mu is a rational parameter.

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/g2.hpp"
#include "g2kit/linalg.hpp"
#include "g2kit/spin7.hpp"

namespace g2kit {

/// m_i = k_i * mu; the triple stores the multipliers k_i.
struct EigenTriple {
  Rational k1, k2, k3;
  std::array<Rational, 3> absolute(const Rational& mu) const { return {k1 * mu, k2 * mu, k3 * mu}; }
  EigenTriple swapped13() const { return {k3, k2, k1}; }
};

/// 1-based frame indices of theta_1, theta_2, theta_3.
inline constexpr std::array<int, 3> kThetaSlots{1, 2, 7};
/// f_1..f_5 = e_3..e_7.
inline const std::vector<int> kFiveFrame{3, 4, 5, 6, 7};

/// (Psi_0, theta_1 Psi_0, theta_2 Psi_0, theta_3 Psi_0).
std::array<Spinor, 4> canonical_spinors();

/// Affine set of Sigma in Lambda^3_27 with Sigma Psi_i = m_i Psi_i (i = 1, 2, 3).
struct Torsion27Family {
  bool consistent = false;
  Form particular;
  std::vector<Form> directions;
  Rational a, b, c;          ///< t236 + t245, t347 + t567, t235 - t246
  bool abc_constant = true;  ///< the directions do not move a, b, c
  int dimension() const { return consistent ? static_cast<int>(directions.size()) : -1; }
};

Torsion27Family solve_family(const EigenTriple& m, const Rational& mu);

/// The closed-form parameterization with twelve free coefficients subject to
/// m_1 + 2a + 2b = m_2, -2a + 2b = m_3, c = 0, as an affine set of 3-forms.
/// It coincides with solve_family(m.swapped13(), mu): its m_1 is the
/// eigenvalue on theta_3 Psi_0.
Torsion27Family lemma_parameterization(const EigenTriple& m, const Rational& mu);

/// Exact equality of two affine sets of forms (double inclusion).
bool same_affine_set(const Torsion27Family& x, const Torsion27Family& y);

/// dim {Sigma in Lambda^3_27 : Sigma Psi_i = 0 for the first k canonical spinors}.
int kernel_dim(int k);

/// Roots of m^2 + (2/7) mu m - (48/49) mu^2 = 0, larger first.
std::array<Rational, 2> eigenvalue_roots(const Rational& mu);

struct ValuePattern {
  std::array<bool, 3> low{};  ///< true where m_i = -8 mu / 7
  EigenTriple m;
  Rational value;         ///< mu / 7 - (m_1 + m_2 + m_3) / 4
  Rational solved_value;  ///< T(theta_1, theta_2, theta_3) of the solved family
  bool solved_constant = true;
};

struct ValueEnumeration {
  Rational mu;
  std::vector<ValuePattern> patterns;
  std::map<Rational, int> fibers;
};

ValueEnumeration torsion_value_enumeration(const Rational& mu);

/// T = A f125 + B (f135 + f245) + C (-f145 + f235) + D f345 in the five-frame.
struct TorsionTemplate {
  Rational A, B, C, D;
  Form torsion7() const;  ///< embedded in R^7
  Form torsion5() const;
  Rational b(const Rational& mu) const { return A + D - Rational(2) * mu / 7; }
  Rational norm2() const { return A * A + D * D + 2 * B * B + 2 * C * C; }
};

/// Random template with |T|^2 = mu^2 from a rational point of S^3.
TorsionTemplate random_template(const Rational& mu, std::mt19937_64& rng);
/// A template with |T|^2 = mu^2 and the prescribed b if a small rational
/// point exists on the relevant sphere.
std::optional<TorsionTemplate> template_with_b(const Rational& b, const Rational& mu);

/// 1/4 (-b^2 - (4/7) b mu + (45/49) mu^2)^2
Rational det_e2_closed(const Rational& b, const Rational& mu);
/// det of theta_3 -| T on the vectors orthogonal to theta_1, theta_2, theta_3.
Rational det_e2_complement(const Form& t7);
/// det of theta_3 -| T on all vectors orthogonal to theta_3 (6 x 6).
Rational det_e2_full(const Form& t7);

struct DetE2Report {
  Rational b, mu;
  Rational closed;
  bool have_member = false;
  TorsionTemplate member;
  Rational brute_force;  ///< det_e2_complement of the member
  Rational full_6x6;     ///< det_e2_full of the member
  bool agrees() const { return !have_member || closed == brute_force; }
};

DetE2Report det_e2(const Rational& b, const Rational& mu);

struct TwoFieldBranch {
  EigenTriple m;
  Rational a, b;
  int solution_dimension = -1;  ///< with theta_1 -| T = theta_2 -| T = 0 imposed
  bool matches_template = false;  ///< every solution is a template with A + D = b + 2 mu / 7
  bool excluded = false;          ///< dT = 0 forces T = 0
  std::vector<std::string> notes;
};

struct TwoFieldReport {
  Rational mu;
  std::vector<TwoFieldBranch> branches;
  bool star_identity = false;       ///< *_5 T = -theta_3 -| T when A = -D
  bool quadratic_identity = false;  ///< <dtheta ^ dtheta, f1234> = -|dtheta|^2 when A = -D
  TorsionTemplate instance;         ///< B = C = 0, A = mu, D = 0
  bool instance_norm_ok = false;
};

TwoFieldReport two_field_case_analysis(const Rational& mu);

struct OmegaIdentityReport {
  std::array<Form, 3> omega;  ///< Omega_i in the five-frame
  bool omega_definition_ok = false;
  std::array<Rational, 3> pairings;  ///< (theta_3 -| T, Omega_i)
  bool omega3_formula = false;       ///< Omega_3 = (*_5 T + theta_3 -| T) / mu
  std::array<Form, 3> d_omega;
  bool d_omega1 = false, d_omega2 = false, d_omega3 = false;
  bool lie_omega1 = false, lie_omega2 = false, lie_omega3 = false;
  std::vector<EigenvalueEntry> ricci;
  bool ricci_ok = false;
  bool all() const;
};

/// Identities of the branch-1 template (A + D = mu, |T|^2 = mu^2).
OmegaIdentityReport omega_form_identities(const TorsionTemplate& t, const Rational& mu);

/// Keeps the terms of a supported on the given 1-based frame indices and
/// relabels them 1..frame.size().
Form restrict_form(const Form& a, const std::vector<int>& frame);
/// Inverse of restrict_form.
Form embed_form(const Form& a, int dim, const std::vector<int>& frame);

}  // namespace g2kit
