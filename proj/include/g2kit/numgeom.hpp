#pragma once

// Floating-point Riemannian geometry of explicit orthonormal coframes
// f^i = sum_j A_ij(p) dx^j on a coordinate chart, via Cartan's structure
// equations.
//
// Conventions match the exact Lie-group code: df^i = -1/2 sum c^i_jk f^j ^ f^k,
// Gamma_ijk = <nabla_{e_i} e_j, e_k>, R(i, j, l, q) = <R(e_i, e_j) e_l, e_q>,
// Ric(j, l) = sum_i R(i, j, l, i).

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2kit/form.hpp"

namespace g2kit::num {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

class Tensor3 {
 public:
  explicit Tensor3(int n = 0) : n_(n), v_(static_cast<std::size_t>(n * n * n), 0.0) {}
  int dim() const { return n_; }
  double& operator()(int i, int j, int k) { return v_[static_cast<std::size_t>((i * n_ + j) * n_ + k)]; }
  double operator()(int i, int j, int k) const { return v_[static_cast<std::size_t>((i * n_ + j) * n_ + k)]; }
  double max_abs() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator*=(double s);

 private:
  int n_;
  std::vector<double> v_;
};

/// T(i, j, k) = a(e_i, e_j, e_k) for a 3-form given in the frame.
Tensor3 tensor_of(const RealForm& three_form);

struct CoframeField {
  int dim = 0;
  std::function<Mat(const Vec&)> coefficients;                    ///< A(p)
  std::function<std::vector<Mat>(const Vec&)> closed_derivatives;  ///< [m] = dA/dx^m (optional)
  /// [i](m, j) = coefficient of dx^m ^ dx^j (m, j both summed) in 2 df^i;
  /// overrides the derivative route when set.
  std::function<std::vector<Mat>(const Vec&)> closed_differentials;
  double h = 1e-5;        ///< central-difference step for A
  double h_outer = 1e-3;  ///< fourth-order stencil step for derivatives of Gamma

  Mat at(const Vec& p) const;
  std::vector<Mat> fd_derivatives(const Vec& p, double step) const;
  std::vector<Mat> derivatives(const Vec& p) const;
  std::vector<Mat> differentials(const Vec& p) const;
};

/// c(i, j, k) = c^i_jk at p. Throws on a singular coframe.
Tensor3 structure_functions(const CoframeField& cf, const Vec& p);
/// Gamma(i, j, k) = 1/2 (c_ijk - c_jki + c_kij), c_ijk = c^k_ij.
Tensor3 levi_civita_cartan(const Tensor3& c);
/// max |Gamma_ijk - Gamma_jik - c^k_ij|
double torsion_defect(const Tensor3& gamma, const Tensor3& c);

/// e_i(F) for a function of the chart point (fourth-order stencil).
Vec frame_derivative(const CoframeField& cf, const Vec& p, const std::function<double(const Vec&)>& f);

/// d of a form field given by frame coefficients.
RealForm frame_exterior_derivative(const CoframeField& cf, const Vec& p,
                                   const std::function<RealForm(const Vec&)>& field);

struct Curvature {
  int dim = 0;
  std::vector<double> r;  ///< R(i, j, l, q) at ((i * n + j) * n + l) * n + q
  Mat ricci;
  Vec eigenvalues;  ///< of the symmetric part, ascending
  double asymmetry = 0.0;
  double max_abs = 0.0;
  double at(int i, int j, int l, int q) const { return r[static_cast<std::size_t>(((i * dim + j) * dim + l) * dim + q)]; }
};

/// Curvature of nabla = nabla^g + 1/2 T(X, Y, -) where torsion(p) gives the
/// frame components of T (Levi-Civita when torsion is empty).
Curvature connection_curvature(const CoframeField& cf, const Vec& p,
                               const std::function<Tensor3(const Vec&)>& torsion = {});

/// Riemannian curvature; throws when |Ric - Ric^t| exceeds symmetry_tol.
Curvature riemann_ricci(const CoframeField& cf, const Vec& p, double symmetry_tol = 1e-8);

/// 1/4 sum_ij T(a, i, j) T(b, i, j)
Mat ric_from_torsion(const Tensor3& t);

/// Observed order log2(e(h) / e(h/2)) of the central-difference derivative
/// of A against the closed form.
double fd_convergence_order(const CoframeField& cf, const Vec& p, double step);

// Flat and round test coframes.
CoframeField flat_coframe(int dim);
/// (r dtheta, r sin(theta) dphi) in coordinates (theta, phi).
CoframeField sphere_coframe(double radius);

struct LiouvilleOptions {
  int intervals = 400;
  double tolerance = 1e-10;
  int max_iterations = 50;
  int dense_steps = 4000;
};

/// Solution of u'' = -8 a^2 x e^u on [x0, x1] with Dirichlet data.
class LiouvilleSolution {
 public:
  double a = 0, x0 = 0, x1 = 0, u0 = 0, u1 = 0;
  std::vector<double> x, u;            ///< finite-difference grid solution
  double residual = 0;                 ///< max |u'' + 8 a^2 x e^u| on the grid
  int iterations = 0;
  std::vector<double> newton_trace;
  bool concave = false;
  double slope = 0;                    ///< u'(x0) of the dense solution
  double dense_boundary_error = 0;     ///< |u_dense(x1) - u1|
  double dense_grid_deviation = 0;     ///< max |u_dense - u| on the grid

  /// (u, u', u'') of a smooth solution through (x0, u0) that also meets
  /// u(x1) = u1; valid slightly beyond [x0, x1].
  std::array<double, 3> evaluate(double xv) const;

  void build_dense(int steps);

 private:
  double h_dense_ = 0;
  int extra_ = 0;
  std::vector<std::array<double, 2>> table_;
};

class NewtonFailure : public std::runtime_error {
 public:
  NewtonFailure(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<double>& trace() const { return trace_; }

 private:
  std::vector<double> trace_;
};

LiouvilleSolution solve_liouville(double a, double x0, double x1, double u0, double u1,
                                  const LiouvilleOptions& options = {});

/// log2(max|u_N - u_2N| / max|u_2N - u_4N|) at the common nodes.
double liouville_refinement_order(double a, double x0, double x1, double u0, double u1, int intervals);

/// Coframe of e^u x (dx^2 + dy^2) + x dz^2 + (dt + y dz)^2 / x in chart
/// coordinates (x, y, z, t), with closed-form derivatives.
CoframeField kahler_coframe(std::shared_ptr<const LiouvilleSolution> sol);

/// Closed-form coordinate 2-form of df^4 (2 df^4 as an antisymmetric matrix).
Mat kahler_df4(const Vec& p);

/// Frame components of a 2-form as an antisymmetric matrix W(a, b).
using FrameTwoForm = std::function<Mat(const Vec&)>;

/// Omega = 2a f^1 ^ f^2.
FrameTwoForm kahler_omega(double a);

RealForm two_form_of(const Mat& w);

struct Box {
  Vec lo, hi;
  Vec sample(std::mt19937_64& rng, double margin = 0.05) const;
};

struct HypothesisReport {
  std::array<double, 5> residual{};
  std::array<bool, 5> pass{};
  bool all() const { return pass[0] && pass[1] && pass[2] && pass[3] && pass[4]; }
};

class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(int condition, const std::string& what) : std::runtime_error(what), condition_(condition) {}
  int condition() const { return condition_; }

 private:
  int condition_;
};

struct BundleData {
  CoframeField base;
  FrameTwoForm omega;
  double a = 0;
  Vec base_point;
  CoframeField total;  ///< (f^1, .., f^4, eta) on chart x (s)
  std::function<Vec(const Vec&)> potential;  ///< A with dA = Omega, eta = ds + A
  std::function<Tensor3(const Vec&)> torsion;  ///< frame components of Omega ^ eta
  HypothesisReport hypotheses;
};

/// Radial Poincare potential of a closed 2-form from base_point.
Vec poincare_potential(const CoframeField& base, const FrameTwoForm& omega, const Vec& base_point, const Vec& p);

HypothesisReport check_hypotheses(const CoframeField& base, const FrameTwoForm& omega, double a,
                                  const Vec& base_point, const std::vector<Vec>& points, double tol = 1e-6);

/// Throws HypothesisError naming the first failed condition.
BundleData assemble_N5(const CoframeField& base, const FrameTwoForm& omega, double a, const Vec& base_point,
                       const std::vector<Vec>& points, double tol = 1e-6);

struct StromingerReport {
  double norm_t_error = 0;  ///< max | |T|^2 - 4a^2 |
  double d_t = 0, d_star_t = 0, nabla_eta = 0, ric_nabla = 0, oneill = 0;
  double scal_error = 0;   ///< max |Scal^g - 3/2 |T|^2|
  double ric_g_eig_error = 0;  ///< distance of Ric^g eigenvalues from {0, 0, 2a^2, 2a^2, 2a^2}
  double max_curvature = 0;  ///< max |R^nabla|
  double ricci_asymmetry = 0;
  Vec ric_g_eigenvalues;      ///< at the first sample point
  bool pass(double norm_tol = 1e-8, double tol = 1e-6, double flat_threshold = 0.01) const;
};

StromingerReport strominger_check(const BundleData& b, const std::vector<Vec>& points);

}  // namespace g2kit::num

namespace g2kit::num {

/// Chart, solver and sampling parameters of the Kahler example and its
/// circle bundle. The chart is x in [x0, x1], |y|, |z|, |t| <= half_width
/// (and |s| <= half_width on the bundle).
struct ChartConfig {
  double a = 0.5;
  double x0 = 1, x1 = 2, u0 = 0, u1 = 0;
  int grid = 400;
  int points = 10;
  unsigned long long seed = 20240611ULL;
  double half_width = 1;
  double h = 1e-5, h_outer = 1e-3;
  double tol = 1e-6;
  double norm_tol = 1e-8;
};

struct KahlerRun {
  std::shared_ptr<const LiouvilleSolution> solution;
  CoframeField coframe;
  double refinement_order = 0;
  std::vector<Vec> points;
  std::vector<Vec> eigenvalues;
  double eigen_error = 0;  ///< distance from {0, 0, 4a^2, 4a^2}
  double asymmetry = 0;
  bool multiplicities_ok = true;  ///< (2, 2) under the gap test
  double seconds = 0;
  bool pass(const ChartConfig& cfg) const;
};

KahlerRun run_kahler(const ChartConfig& cfg);

struct Theorem1Run {
  KahlerRun base;
  BundleData bundle;
  std::vector<Vec> points;
  StromingerReport report;
  double seconds = 0;
};

/// Throws HypothesisError when the data fail a hypothesis; omega_a lets
/// Omega = 2 omega_a f^1 ^ f^2 differ from the metric's a.
Theorem1Run run_theorem1(const ChartConfig& cfg, double omega_a);

/// Cluster sizes of ascending values with gaps above threshold.
std::vector<int> multiplicities(const Vec& ascending, double threshold);

}  // namespace g2kit::num
