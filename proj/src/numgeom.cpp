#include "g2kit/numgeom.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <chrono>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

namespace g2kit::num {

double Tensor3::max_abs() const {
  double m = 0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (o.n_ != n_) throw std::invalid_argument("Tensor3: dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(double s) {
  for (double& x : v_) x *= s;
  return *this;
}

Tensor3 tensor_of(const RealForm& a) {
  if (a.degree() != 3) throw std::invalid_argument("tensor_of: need a 3-form");
  const int n = a.dim();
  Tensor3 t(n);
  for (const auto& [m, c] : a.terms()) {
    auto idx = mask_indices(m);
    const int p[3] = {idx[0], idx[1], idx[2]};
    static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int s = 0; s < 6; ++s) t(p[perm[s][0]], p[perm[s][1]], p[perm[s][2]]) = s < 3 ? c : -c;
  }
  return t;
}

Mat CoframeField::at(const Vec& p) const {
  Mat a = coefficients(p);
  if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("coframe: coefficient matrix has wrong size");
  return a;
}

std::vector<Mat> CoframeField::fd_derivatives(const Vec& p, double step) const {
  std::vector<Mat> out;
  for (int m = 0; m < dim; ++m) {
    Vec pp = p, pm = p;
    pp[m] += step;
    pm[m] -= step;
    out.push_back((at(pp) - at(pm)) / (2 * step));
  }
  return out;
}

std::vector<Mat> CoframeField::derivatives(const Vec& p) const {
  if (closed_derivatives) return closed_derivatives(p);
  return fd_derivatives(p, h);
}

std::vector<Mat> CoframeField::differentials(const Vec& p) const {
  if (closed_differentials) return closed_differentials(p);
  auto d = derivatives(p);
  std::vector<Mat> out(static_cast<std::size_t>(dim), Mat::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int m = 0; m < dim; ++m)
      for (int j = 0; j < dim; ++j) out[static_cast<std::size_t>(i)](m, j) = d[static_cast<std::size_t>(m)](i, j) - d[static_cast<std::size_t>(j)](i, m);
  return out;
}

namespace {

Mat inverse_checked(const Mat& a) {
  Eigen::FullPivLU<Mat> lu(a);
  if (!lu.isInvertible()) throw std::runtime_error("coframe is singular at the sample point");
  return lu.inverse();
}

Vec stencil_derivative(const std::function<Vec(const Vec&)>& f, const Vec& p, int m, double h) {
  auto shifted = [&](double s) {
    Vec q = p;
    q[m] += s;
    return f(q);
  };
  return (-shifted(2 * h) + 8 * shifted(h) - 8 * shifted(-h) + shifted(-2 * h)) / (12 * h);
}

/// e_i(F_r) as a matrix (r, i)
Mat frame_jacobian(const CoframeField& cf, const Vec& p, const std::function<Vec(const Vec&)>& f) {
  const Mat b = inverse_checked(cf.at(p));
  const Vec f0 = f(p);
  Mat coord(f0.size(), cf.dim);
  for (int m = 0; m < cf.dim; ++m) coord.col(m) = stencil_derivative(f, p, m, cf.h_outer);
  return coord * b;
}

Vec flatten(const Tensor3& t) {
  const int n = t.dim();
  Vec v(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) v[(i * n + j) * n + k] = t(i, j, k);
  return v;
}

std::vector<IndexMask> masks_of_degree(int n, int k) {
  std::vector<IndexMask> out;
  for (IndexMask m = 0; m < (1u << n); ++m)
    if (mask_size(m) == k) out.push_back(m);
  return out;
}

std::vector<RealForm> differential_images(const Tensor3& c) {
  const int n = c.dim();
  std::vector<RealForm> images;
  for (int k = 0; k < n; ++k) {
    RealForm img(n, 2);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) img.add_term((1u << a) | (1u << b), -c(k, a, b));
    images.push_back(img);
  }
  return images;
}

double max_coeff(const RealForm& a) {
  double m = 0;
  for (const auto& [mask, c] : a.terms()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

Tensor3 structure_functions(const CoframeField& cf, const Vec& p) {
  const int n = cf.dim;
  const Mat b = inverse_checked(cf.at(p));
  const auto f = cf.differentials(p);
  Tensor3 c(n);
  for (int i = 0; i < n; ++i) {
    const Mat m = -b.transpose() * f[static_cast<std::size_t>(i)] * b;
    for (int a = 0; a < n; ++a)
      for (int bb = 0; bb < n; ++bb) c(i, a, bb) = m(a, bb);
  }
  return c;
}

Tensor3 levi_civita_cartan(const Tensor3& c) {
  const int n = c.dim();
  auto cc = [&](int i, int j, int k) { return c(k, i, j); };
  Tensor3 g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) g(i, j, k) = 0.5 * (cc(i, j, k) - cc(j, k, i) + cc(k, i, j));
  return g;
}

double torsion_defect(const Tensor3& gamma, const Tensor3& c) {
  const int n = c.dim();
  double m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m = std::max(m, std::abs(gamma(i, j, k) - gamma(j, i, k) - c(k, i, j)));
  return m;
}

Vec frame_derivative(const CoframeField& cf, const Vec& p, const std::function<double(const Vec&)>& f) {
  Mat j = frame_jacobian(cf, p, [&](const Vec& q) { return Vec::Constant(1, f(q)); });
  return j.row(0).transpose();
}

RealForm frame_exterior_derivative(const CoframeField& cf, const Vec& p,
                                   const std::function<RealForm(const Vec&)>& field) {
  const int n = cf.dim;
  const RealForm a0 = field(p);
  const int k = a0.degree();
  if (k >= n) return RealForm(n, n);
  const auto masks = masks_of_degree(n, k);
  auto coeffs = [&](const Vec& q) {
    RealForm a = field(q);
    Vec v(static_cast<Eigen::Index>(masks.size()));
    for (std::size_t r = 0; r < masks.size(); ++r) v[static_cast<Eigen::Index>(r)] = a.coefficient(masks[r]);
    return v;
  };
  const Mat jac = frame_jacobian(cf, p, coeffs);
  RealForm out(n, k + 1);
  for (std::size_t r = 0; r < masks.size(); ++r) {
    RealForm grad(n, 1);
    for (int i = 0; i < n; ++i) grad.add_term(1u << i, jac(static_cast<Eigen::Index>(r), i));
    out += wedge(grad, RealForm::from_mask(n, masks[r]));
  }
  out += extend_derivation(a0, differential_images(structure_functions(cf, p)), 1);
  return out;
}

Curvature connection_curvature(const CoframeField& cf, const Vec& p, const std::function<Tensor3(const Vec&)>& torsion) {
  const int n = cf.dim;
  auto gamma_at = [&](const Vec& q) {
    Tensor3 g = levi_civita_cartan(structure_functions(cf, q));
    if (torsion) {
      Tensor3 t = torsion(q);
      t *= 0.5;
      g += t;
    }
    return g;
  };
  const Tensor3 c = structure_functions(cf, p);
  const Tensor3 g = gamma_at(p);
  const Mat dg = frame_jacobian(cf, p, [&](const Vec& q) { return flatten(gamma_at(q)); });
  auto e = [&](int i, int j, int l, int q) { return dg((j * n + l) * n + q, i); };

  Curvature out;
  out.dim = n;
  out.r.assign(static_cast<std::size_t>(n * n * n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int q = 0; q < n; ++q) {
          double v = e(i, j, l, q) - e(j, i, l, q);
          for (int s = 0; s < n; ++s) v += g(j, l, s) * g(i, s, q) - g(i, l, s) * g(j, s, q);
          for (int k = 0; k < n; ++k) v -= c(k, i, j) * g(k, l, q);
          out.r[static_cast<std::size_t>(((i * n + j) * n + l) * n + q)] = v;
          out.max_abs = std::max(out.max_abs, std::abs(v));
        }
  out.ricci = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i) out.ricci(j, l) += out.at(i, j, l, i);
  out.asymmetry = (out.ricci - out.ricci.transpose()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (out.ricci + out.ricci.transpose()));
  out.eigenvalues = es.eigenvalues();
  return out;
}

Curvature riemann_ricci(const CoframeField& cf, const Vec& p, double symmetry_tol) {
  Curvature out = connection_curvature(cf, p);
  if (out.asymmetry > symmetry_tol) {
    std::ostringstream os;
    os << "Ricci tensor not symmetric: |Ric - Ric^t| = " << out.asymmetry;
    throw std::runtime_error(os.str());
  }
  return out;
}

Mat ric_from_torsion(const Tensor3& t) {
  const int n = t.dim();
  Mat r = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(a, b) += 0.25 * t(a, i, j) * t(b, i, j);
  return r;
}

double fd_convergence_order(const CoframeField& cf, const Vec& p, double step) {
  if (!cf.closed_derivatives) throw std::invalid_argument("fd_convergence_order: coframe has no closed-form derivatives");
  const auto exact = cf.closed_derivatives(p);
  auto err = [&](double h) {
    auto d = cf.fd_derivatives(p, h);
    double m = 0;
    for (std::size_t k = 0; k < d.size(); ++k) m = std::max(m, (d[k] - exact[k]).cwiseAbs().maxCoeff());
    return m;
  };
  return std::log2(err(step) / err(step / 2));
}

CoframeField flat_coframe(int dim) {
  CoframeField cf;
  cf.dim = dim;
  cf.coefficients = [dim](const Vec&) { return Mat::Identity(dim, dim); };
  cf.closed_derivatives = [dim](const Vec&) { return std::vector<Mat>(static_cast<std::size_t>(dim), Mat::Zero(dim, dim)); };
  return cf;
}

CoframeField sphere_coframe(double radius) {
  CoframeField cf;
  cf.dim = 2;
  cf.coefficients = [radius](const Vec& p) {
    Mat a = Mat::Zero(2, 2);
    a(0, 0) = radius;
    a(1, 1) = radius * std::sin(p[0]);
    return a;
  };
  cf.closed_derivatives = [radius](const Vec& p) {
    std::vector<Mat> d(2, Mat::Zero(2, 2));
    d[0](1, 1) = radius * std::cos(p[0]);
    return d;
  };
  return cf;
}

// Liouville equation

namespace {

using State = std::array<double, 2>;

struct LiouvilleRhs {
  double k;
  void operator()(const State& y, State& dy, double x) const {
    dy[0] = y[1];
    dy[1] = -k * x * std::exp(y[0]);
  }
};

State integrate(const LiouvilleRhs& rhs, State y, double from, double to, int steps) {
  boost::numeric::odeint::runge_kutta4<State> stepper;
  const double h = (to - from) / steps;
  double x = from;
  for (int s = 0; s < steps; ++s, x += h) stepper.do_step(rhs, y, x, h);
  return y;
}

std::vector<double> newton_fd(double a, double x0, double x1, double u0, double u1, int n,
                              const LiouvilleOptions& opt, LiouvilleSolution* sol) {
  const double h = (x1 - x0) / n;
  const double k = 8 * a * a;
  std::vector<double> x(static_cast<std::size_t>(n + 1)), u(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    x[static_cast<std::size_t>(i)] = x0 + i * h;
    u[static_cast<std::size_t>(i)] = u0 + (u1 - u0) * i / n;
  }
  const int m = n - 1;
  auto residual = [&](Vec& r) {
    for (int i = 1; i <= m; ++i) {
      const auto s = static_cast<std::size_t>(i);
      r[i - 1] = (u[s - 1] - 2 * u[s] + u[s + 1]) / (h * h) + k * x[s] * std::exp(u[s]);
    }
    return r.cwiseAbs().maxCoeff();
  };
  Vec r(m);
  std::vector<double> trace;
  double res = residual(r);
  trace.push_back(res);
  int it = 0;
  while (res > opt.tolerance) {
    if (it >= opt.max_iterations) {
      std::ostringstream os;
      os << "Liouville Newton iteration did not converge; residual trace:";
      for (double t : trace) os << ' ' << t;
      throw NewtonFailure(os.str(), trace);
    }
    Eigen::SparseMatrix<double> jac(m, m);
    std::vector<Eigen::Triplet<double>> trip;
    for (int i = 0; i < m; ++i) {
      const auto s = static_cast<std::size_t>(i + 1);
      trip.emplace_back(i, i, -2 / (h * h) + k * x[s] * std::exp(u[s]));
      if (i > 0) trip.emplace_back(i, i - 1, 1 / (h * h));
      if (i + 1 < m) trip.emplace_back(i, i + 1, 1 / (h * h));
    }
    jac.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(jac);
    if (lu.info() != Eigen::Success) throw NewtonFailure("Liouville Newton: singular Jacobian", trace);
    Vec du = lu.solve(-r);
    for (int i = 0; i < m; ++i) u[static_cast<std::size_t>(i + 1)] += du[i];
    res = residual(r);
    trace.push_back(res);
    ++it;
    if (!std::isfinite(res)) throw NewtonFailure("Liouville Newton iteration diverged", trace);
  }
  if (sol) {
    sol->x = x;
    sol->residual = res;
    sol->iterations = it;
    sol->newton_trace = trace;
  }
  return u;
}

}  // namespace

LiouvilleSolution solve_liouville(double a, double x0, double x1, double u0, double u1, const LiouvilleOptions& options) {
  if (!(x1 > x0) || options.intervals < 4) throw std::invalid_argument("solve_liouville: bad interval or grid");
  LiouvilleSolution sol;
  sol.a = a;
  sol.x0 = x0;
  sol.x1 = x1;
  sol.u0 = u0;
  sol.u1 = u1;
  sol.u = newton_fd(a, x0, x1, u0, u1, options.intervals, options, &sol);
  const double h = (x1 - x0) / options.intervals;
  sol.concave = true;
  for (std::size_t i = 1; i + 1 < sol.u.size(); ++i)
    if (sol.u[i - 1] - 2 * sol.u[i] + sol.u[i + 1] >= 0) sol.concave = false;
  const double upp0 = -8 * a * a * x0 * std::exp(u0);
  sol.slope = (sol.u[1] - sol.u[0]) / h - 0.5 * h * upp0;
  sol.build_dense(options.dense_steps);
  return sol;
}

void LiouvilleSolution::build_dense(int steps) {
  const LiouvilleRhs rhs{8 * a * a};
  auto miss = [&](double s) { return integrate(rhs, {u0, s}, x0, x1, steps)[0] - u1; };
  double s0 = slope, s1 = slope + 1e-4;
  double f0 = miss(s0), f1 = miss(s1);
  for (int it = 0; it < 50 && std::abs(f1) > 1e-13; ++it) {
    if (f1 == f0) break;
    const double s2 = s1 - f1 * (s1 - s0) / (f1 - f0);
    s0 = s1;
    f0 = f1;
    s1 = s2;
    f1 = miss(s1);
  }
  slope = s1;
  h_dense_ = (x1 - x0) / steps;
  const int extra = steps / 10 + 2;
  extra_ = extra;
  table_.assign(static_cast<std::size_t>(steps + 1 + 2 * extra), State{});
  State y{u0, slope};
  boost::numeric::odeint::runge_kutta4<State> stepper;
  table_[static_cast<std::size_t>(extra)] = y;
  for (int i = 0; i < steps + extra; ++i) {
    stepper.do_step(rhs, y, x0 + i * h_dense_, h_dense_);
    table_[static_cast<std::size_t>(extra + i + 1)] = y;
  }
  y = {u0, slope};
  for (int i = 0; i < extra; ++i) {
    stepper.do_step(rhs, y, x0 - i * h_dense_, -h_dense_);
    table_[static_cast<std::size_t>(extra - i - 1)] = y;
  }
  dense_boundary_error = std::abs(evaluate(x1)[0] - u1);
  dense_grid_deviation = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    dense_grid_deviation = std::max(dense_grid_deviation, std::abs(evaluate(x[i])[0] - u[i]));
}

std::array<double, 3> LiouvilleSolution::evaluate(double xv) const {
  if (table_.empty()) throw std::logic_error("LiouvilleSolution: dense output not built");
  const int extra = extra_;
  const double pos = (xv - x0) / h_dense_ + extra;
  const long k = std::lround(pos);
  if (k < 0 || k >= static_cast<long>(table_.size())) throw std::out_of_range("LiouvilleSolution: point outside the dense range");
  const double xk = x0 + (static_cast<double>(k) - extra) * h_dense_;
  State y = table_[static_cast<std::size_t>(k)];
  const LiouvilleRhs rhs{8 * a * a};
  if (xv != xk) boost::numeric::odeint::runge_kutta4<State>().do_step(rhs, y, xk, xv - xk);
  return {y[0], y[1], -8 * a * a * xv * std::exp(y[0])};
}

double liouville_refinement_order(double a, double x0, double x1, double u0, double u1, int intervals) {
  LiouvilleOptions opt;
  auto run = [&](int n) { return newton_fd(a, x0, x1, u0, u1, n, opt, nullptr); };
  const auto c = run(intervals), m = run(2 * intervals), f = run(4 * intervals);
  double e1 = 0, e2 = 0;
  for (int i = 0; i <= intervals; ++i) {
    const auto s = static_cast<std::size_t>(i);
    e1 = std::max(e1, std::abs(c[s] - m[2 * s]));
    e2 = std::max(e2, std::abs(m[2 * s] - f[4 * s]));
  }
  return std::log2(e1 / e2);
}

CoframeField kahler_coframe(std::shared_ptr<const LiouvilleSolution> sol) {
  CoframeField cf;
  cf.dim = 4;
  cf.coefficients = [sol](const Vec& p) {
    const double x = p[0], y = p[1];
    const double g = std::exp(0.5 * sol->evaluate(x)[0]) * std::sqrt(x);
    Mat a = Mat::Zero(4, 4);
    a(0, 0) = g;
    a(1, 1) = g;
    a(2, 2) = std::sqrt(x);
    a(3, 2) = y / std::sqrt(x);
    a(3, 3) = 1 / std::sqrt(x);
    return a;
  };
  cf.closed_derivatives = [sol](const Vec& p) {
    const double x = p[0], y = p[1];
    const auto ev = sol->evaluate(x);
    const double g = std::exp(0.5 * ev[0]) * std::sqrt(x);
    std::vector<Mat> d(4, Mat::Zero(4, 4));
    const double gx = g * (0.5 * ev[1] + 0.5 / x);
    d[0](0, 0) = gx;
    d[0](1, 1) = gx;
    d[0](2, 2) = 0.5 / std::sqrt(x);
    d[0](3, 2) = -0.5 * y * std::pow(x, -1.5);
    d[0](3, 3) = -0.5 * std::pow(x, -1.5);
    d[1](3, 2) = 1 / std::sqrt(x);
    return d;
  };
  return cf;
}

Mat kahler_df4(const Vec& p) {
  const double x = p[0], y = p[1];
  Mat f = Mat::Zero(4, 4);
  auto set = [&](int m, int j, double v) {
    f(m, j) = v;
    f(j, m) = -v;
  };
  set(0, 3, -0.5 * std::pow(x, -1.5));
  set(0, 2, -0.5 * y * std::pow(x, -1.5));
  set(1, 2, 1 / std::sqrt(x));
  return f;
}

FrameTwoForm kahler_omega(double a) {
  return [a](const Vec&) {
    Mat w = Mat::Zero(4, 4);
    w(0, 1) = 2 * a;
    w(1, 0) = -2 * a;
    return w;
  };
}

RealForm two_form_of(const Mat& w) {
  const int n = static_cast<int>(w.rows());
  RealForm out(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.add_term((1u << a) | (1u << b), w(a, b));
  return out;
}

Vec Box::sample(std::mt19937_64& rng, double margin) const {
  Vec p(lo.size());
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    const double w = hi[i] - lo[i];
    std::uniform_real_distribution<double> d(lo[i] + margin * w, hi[i] - margin * w);
    p[i] = d(rng);
  }
  return p;
}

// Bundle assembly

namespace {

Mat coordinate_two_form(const CoframeField& base, const FrameTwoForm& omega, const Vec& p) {
  const Mat a = base.at(p);
  return a.transpose() * omega(p) * a;
}

struct SplitProjectors {
  Mat pe, pf;  ///< kernel and image of Omega
  double kernel_size;
};

SplitProjectors split_of(const Mat& w) {
  Eigen::SelfAdjointEigenSolver<Mat> es(w.transpose() * w);
  const int n = static_cast<int>(w.rows());
  Mat ve = es.eigenvectors().leftCols(n - 2);
  Mat vf = es.eigenvectors().rightCols(2);
  return {ve * ve.transpose(), vf * vf.transpose(), std::sqrt(std::max(0.0, es.eigenvalues().head(n - 2).maxCoeff()))};
}

/// max |d beta_k(u, v)| for beta_k the rows of `annihilator`, u, v in the
/// range of `along`.
double frobenius_defect(const CoframeField& cf, const Vec& p, const std::function<Mat(const Vec&)>& annihilator,
                        const Mat& along) {
  const int n = cf.dim;
  Eigen::SelfAdjointEigenSolver<Mat> es(along);
  std::vector<Vec> basis;
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()[i] > 0.5) basis.push_back(es.eigenvectors().col(i));
  double m = 0;
  for (int k = 0; k < n; ++k) {
    auto field = [&](const Vec& q) {
      Mat an = annihilator(q);
      RealForm b(n, 1);
      for (int a = 0; a < n; ++a) b.add_term(1u << a, an(k, a));
      return b;
    };
    RealForm db = frame_exterior_derivative(cf, p, field);
    Mat w = Mat::Zero(n, n);
    for (const auto& [mask, c] : db.terms()) {
      auto idx = mask_indices(mask);
      w(idx[0], idx[1]) = c;
      w(idx[1], idx[0]) = -c;
    }
    for (std::size_t s = 0; s < basis.size(); ++s)
      for (std::size_t t = s + 1; t < basis.size(); ++t) m = std::max(m, std::abs(basis[s].dot(w * basis[t])));
  }
  return m;
}

}  // namespace

Vec poincare_potential(const CoframeField& base, const FrameTwoForm& omega, const Vec& base_point, const Vec& p) {
  const Vec dp = p - base_point;
  auto integrand = [&](double t) -> Vec {
    const Mat w = coordinate_two_form(base, omega, base_point + t * dp);
    return t * (w.transpose() * dp);
  };
  const int n = base.dim;
  Vec out = Vec::Zero(n);
  for (int j = 0; j < n; ++j) {
    auto f = [&](double t) { return integrand(t)[j]; };
    out[j] = boost::math::quadrature::gauss<double, 20>::integrate(f, 0.0, 1.0);
  }
  return out;
}

HypothesisReport check_hypotheses(const CoframeField& base, const FrameTwoForm& omega, double a, const Vec& base_point,
                                  const std::vector<Vec>& points, double tol) {
  HypothesisReport rep;
  const int n = base.dim;
  auto field = [&](const Vec& q) { return two_form_of(omega(q)); };
  for (const auto& p : points) {
    const RealForm om = field(p);
    double r1 = max_coeff(frame_exterior_derivative(base, p, field));
    r1 = std::max(r1, max_coeff(frame_exterior_derivative(base, p, [&](const Vec& q) { return hodge(field(q)); })));
    rep.residual[0] = std::max(rep.residual[0], r1);

    auto pe = [&](const Vec& q) { return split_of(omega(q)).pe; };
    auto pf = [&](const Vec& q) { return split_of(omega(q)).pf; };
    const auto sp = split_of(omega(p));
    rep.residual[1] = std::max({rep.residual[1], frobenius_defect(base, p, pf, sp.pe), frobenius_defect(base, p, pe, sp.pf)});

    double r3 = std::abs(norm2(om) - 4 * a * a);
    r3 = std::max({r3, max_coeff(wedge(om, om)), sp.kernel_size});
    rep.residual[2] = std::max(rep.residual[2], r3);

    const Curvature curv = riemann_ricci(base, p);
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (curv.ricci + curv.ricci.transpose()));
    Vec want = Vec::Zero(n);
    want.tail(2).setConstant(4 * a * a);
    double r4 = (es.eigenvalues() - want).cwiseAbs().maxCoeff();
    Mat vr = es.eigenvectors().rightCols(2);
    r4 = std::max(r4, (vr * vr.transpose() - sp.pf).cwiseAbs().maxCoeff());
    rep.residual[3] = std::max(rep.residual[3], r4);

    const Mat oc = coordinate_two_form(base, omega, p);
    Mat da = Mat::Zero(n, n);
    std::vector<Vec> dpot;
    for (int m = 0; m < n; ++m) {
      Vec pp = p, pm = p;
      pp[m] += base.h;
      pm[m] -= base.h;
      dpot.push_back((poincare_potential(base, omega, base_point, pp) - poincare_potential(base, omega, base_point, pm)) /
                     (2 * base.h));
    }
    for (int m = 0; m < n; ++m)
      for (int j = 0; j < n; ++j)
        da(m, j) = dpot[static_cast<std::size_t>(m)][j] - dpot[static_cast<std::size_t>(j)][m];
    rep.residual[4] = std::max(rep.residual[4], (da - oc).cwiseAbs().maxCoeff());
  }
  for (int i = 0; i < 5; ++i) rep.pass[static_cast<std::size_t>(i)] = rep.residual[static_cast<std::size_t>(i)] < tol;
  return rep;
}

BundleData assemble_N5(const CoframeField& base, const FrameTwoForm& omega, double a, const Vec& base_point,
                       const std::vector<Vec>& points, double tol) {
  BundleData b;
  b.hypotheses = check_hypotheses(base, omega, a, base_point, points, tol);
  static const char* names[5] = {"Omega and *Omega closed, Omega ^ Omega = 0", "E^2 and F^2 integrable",
                                 "Omega = 2a f^1 ^ f^2 on an orthonormal frame of F^2",
                                 "Ric^g = 4a^2 on F^2 and 0 on E^2", "potential satisfies dA = Omega"};
  for (int i = 0; i < 5; ++i)
    if (!b.hypotheses.pass[static_cast<std::size_t>(i)]) {
      std::ostringstream os;
      os << "hypothesis (" << i + 1 << ") fails: " << names[i] << ", residual " << b.hypotheses.residual[static_cast<std::size_t>(i)];
      throw HypothesisError(i + 1, os.str());
    }
  b.base = base;
  b.omega = omega;
  b.a = a;
  b.base_point = base_point;
  const int n = base.dim;
  auto head = [n](const Vec& p) { return Vec(p.head(n)); };
  b.potential = [base, omega, base_point](const Vec& x) { return poincare_potential(base, omega, base_point, x); };
  b.total.dim = n + 1;
  b.total.h = base.h;
  b.total.h_outer = base.h_outer;
  auto pot = b.potential;
  b.total.coefficients = [base, pot, head, n](const Vec& p) {
    const Vec x = head(p);
    Mat m = Mat::Zero(n + 1, n + 1);
    m.topLeftCorner(n, n) = base.at(x);
    m.block(n, 0, 1, n) = pot(x).transpose();
    m(n, n) = 1;
    return m;
  };
  b.total.closed_differentials = [base, omega, head, n](const Vec& p) {
    const Vec x = head(p);
    auto d = base.differentials(x);
    std::vector<Mat> out;
    for (const auto& m : d) {
      Mat e = Mat::Zero(n + 1, n + 1);
      e.topLeftCorner(n, n) = m;
      out.push_back(e);
    }
    Mat e = Mat::Zero(n + 1, n + 1);
    e.topLeftCorner(n, n) = coordinate_two_form(base, omega, x);
    out.push_back(e);
    return out;
  };
  b.torsion = [omega, head, n](const Vec& p) {
    const Mat w = omega(head(p));
    Tensor3 t(n + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        t(i, j, n) = w(i, j);
        t(j, n, i) = w(i, j);
        t(n, i, j) = w(i, j);
      }
    return t;
  };
  return b;
}

bool StromingerReport::pass(double norm_tol, double tol, double flat_threshold) const {
  return norm_t_error < norm_tol && d_t < tol && d_star_t < tol && nabla_eta < tol && ric_nabla < tol && oneill < tol &&
         scal_error < tol && ric_g_eig_error < tol && ricci_asymmetry < tol && max_curvature > flat_threshold;
}

StromingerReport strominger_check(const BundleData& b, const std::vector<Vec>& points) {
  StromingerReport rep;
  const int n = b.total.dim;
  auto tform = [&](const Vec& q) {
    const Tensor3 t = b.torsion(q);
    RealForm f(n, 3);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) f.add_term((1u << i) | (1u << j) | (1u << k), t(i, j, k));
    return f;
  };
  bool first = true;
  for (const auto& p : points) {
    const Tensor3 t = b.torsion(p);
    const RealForm tf = tform(p);
    rep.norm_t_error = std::max(rep.norm_t_error, std::abs(norm2(tf) - 4 * b.a * b.a));
    rep.d_t = std::max(rep.d_t, max_coeff(frame_exterior_derivative(b.total, p, tform)));
    rep.d_star_t = std::max(rep.d_star_t, max_coeff(frame_exterior_derivative(b.total, p, [&](const Vec& q) { return hodge(tform(q)); })));

    const Tensor3 g = levi_civita_cartan(structure_functions(b.total, p));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rep.nabla_eta = std::max(rep.nabla_eta, std::abs(g(i, j, n - 1) + 0.5 * t(i, j, n - 1)));

    const Curvature rn = connection_curvature(b.total, p, b.torsion);
    rep.ric_nabla = std::max(rep.ric_nabla, rn.ricci.cwiseAbs().maxCoeff());
    rep.max_curvature = std::max(rep.max_curvature, rn.max_abs);

    const Curvature rg = connection_curvature(b.total, p);
    rep.ricci_asymmetry = std::max(rep.ricci_asymmetry, rg.asymmetry);
    rep.oneill = std::max(rep.oneill, (rg.ricci - ric_from_torsion(t)).cwiseAbs().maxCoeff());
    rep.scal_error = std::max(rep.scal_error, std::abs(rg.ricci.trace() - 1.5 * norm2(tf)));
    Vec want = Vec::Zero(n);
    want.tail(3).setConstant(2 * b.a * b.a);
    rep.ric_g_eig_error = std::max(rep.ric_g_eig_error, (rg.eigenvalues - want).cwiseAbs().maxCoeff());
    if (first) rep.ric_g_eigenvalues = rg.eigenvalues;
    first = false;
  }
  return rep;
}

}  // namespace g2kit::num


namespace g2kit::num {

std::vector<int> multiplicities(const Vec& v, double threshold) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] - v[i - 1] > threshold)
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

bool KahlerRun::pass(const ChartConfig& cfg) const {
  return solution->residual < 1e-10 && eigen_error < cfg.tol && asymmetry < 1e-8 && multiplicities_ok;
}

namespace {

Box chart_box(const ChartConfig& cfg, int dim) {
  Box b{Vec(dim), Vec(dim)};
  b.lo.setConstant(-cfg.half_width);
  b.hi.setConstant(cfg.half_width);
  b.lo[0] = cfg.x0;
  b.hi[0] = cfg.x1;
  return b;
}

}  // namespace

KahlerRun run_kahler(const ChartConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (!(cfg.x0 > 0)) throw std::invalid_argument("the Kahler chart needs x0 > 0");
  if (!(cfg.tol > 0) || !(cfg.h > 0) || !(cfg.h_outer > 0) || cfg.points < 1)
    throw std::invalid_argument("tolerances, steps and point counts must be positive");
  KahlerRun run;
  LiouvilleOptions opt;
  opt.intervals = cfg.grid;
  run.solution = std::make_shared<LiouvilleSolution>(solve_liouville(cfg.a, cfg.x0, cfg.x1, cfg.u0, cfg.u1, opt));
  run.refinement_order = liouville_refinement_order(cfg.a, cfg.x0, cfg.x1, cfg.u0, cfg.u1, std::max(8, cfg.grid / 8));
  run.coframe = kahler_coframe(run.solution);
  run.coframe.h = cfg.h;
  run.coframe.h_outer = cfg.h_outer;
  std::mt19937_64 rng(cfg.seed);
  const Box box = chart_box(cfg, 4);
  Vec want(4);
  const double k = 4 * cfg.a * cfg.a;
  want << 0, 0, k, k;
  for (int i = 0; i < cfg.points; ++i) {
    const Vec p = box.sample(rng);
    const Curvature c = connection_curvature(run.coframe, p);
    run.points.push_back(p);
    run.eigenvalues.push_back(c.eigenvalues);
    run.eigen_error = std::max(run.eigen_error, (c.eigenvalues - want).cwiseAbs().maxCoeff());
    run.asymmetry = std::max(run.asymmetry, c.asymmetry);
    const double thr = 1e-4 * c.eigenvalues.cwiseAbs().maxCoeff();
    if (multiplicities(c.eigenvalues, thr) != std::vector<int>{2, 2}) run.multiplicities_ok = false;
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

Theorem1Run run_theorem1(const ChartConfig& cfg, double omega_a) {
  const auto start = std::chrono::steady_clock::now();
  Theorem1Run run;
  run.base = run_kahler(cfg);
  Vec base_point = Vec::Zero(4);
  base_point[0] = 0.5 * (cfg.x0 + cfg.x1);
  run.bundle = assemble_N5(run.base.coframe, kahler_omega(omega_a), cfg.a, base_point, run.base.points, cfg.tol);
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_real_distribution<double> fiber(-0.95 * cfg.half_width, 0.95 * cfg.half_width);
  for (const auto& p : run.base.points) {
    Vec q(5);
    q << p, fiber(rng);
    run.points.push_back(q);
  }
  run.report = strominger_check(run.bundle, run.points);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace g2kit::num
