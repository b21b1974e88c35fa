#include "g2kit/liegroup.hpp"

#include <stdexcept>
#include <string>

namespace g2kit {

LieAlgebra::LieAlgebra(int dim, const std::vector<Entry>& entries) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("Lie algebra dimension must be in 1..8");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
  std::vector<bool> set(c_.size(), false);
  for (const auto& e : entries) {
    if (e.i < 1 || e.i > dim || e.j < 1 || e.j > dim || e.k < 1 || e.k > dim)
      throw std::invalid_argument("structure constant index out of range: " + std::to_string(e.i) + " " +
                                  std::to_string(e.j) + " " + std::to_string(e.k));
    if (e.i == e.j) {
      if (sgn(e.value) != 0) throw std::invalid_argument("c^k_ii must vanish (antisymmetry)");
      continue;
    }
    const auto ij = index(e.i - 1, e.j - 1, e.k - 1);
    const auto ji = index(e.j - 1, e.i - 1, e.k - 1);
    if ((set[ij] && c_[ij] != e.value) || (set[ji] && c_[ji] != -e.value))
      throw std::invalid_argument("inconsistent structure constants for [e" + std::to_string(e.i) + ", e" +
                                  std::to_string(e.j) + "] (antisymmetry violated)");
    c_[ij] = e.value;
    c_[ji] = -e.value;
    set[ij] = set[ji] = true;
  }
  check_jacobi();
  build_differentials();
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim, {}); }

LieAlgebra LieAlgebra::su2_plus_abelian(int dim, std::array<int, 3> slots, const Rational& lambda) {
  const auto [a, b, c] = slots;
  return LieAlgebra(dim, {{a, b, c, lambda}, {b, c, a, lambda}, {c, a, b, lambda}});
}

void LieAlgebra::check_jacobi() const {
  const int n = dim_;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = 0;
          for (int m = 0; m < n; ++m)
            s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) + c(k, i, m) * c(m, j, l);
          if (sgn(s) != 0)
            throw std::invalid_argument("Jacobi identity fails for (e" + std::to_string(i + 1) + ", e" +
                                        std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")");
        }
}

void LieAlgebra::build_differentials() {
  d_basis_.clear();
  for (int k = 0; k < dim_; ++k) {
    Form dk(dim_, std::min(2, dim_));
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        if (sgn(c(i, j, k)) != 0) dk.add_term((1u << i) | (1u << j), -c(i, j, k));
    d_basis_.push_back(std::move(dk));
  }
}

std::vector<LieAlgebra::Entry> LieAlgebra::entries() const {
  std::vector<Entry> out;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) out.push_back({i + 1, j + 1, k + 1, c(i, j, k)});
  return out;
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
  QVector out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (sgn(x[static_cast<std::size_t>(i)]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(y[static_cast<std::size_t>(j)]) == 0) continue;
      Rational xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (int k = 0; k < dim_; ++k) out[static_cast<std::size_t>(k)] += xy * c(i, j, k);
    }
  }
  return out;
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 0; i < dim_; ++i) {
    Rational tr = 0;
    for (int j = 0; j < dim_; ++j) tr += c(i, j, j);
    if (sgn(tr) != 0) return false;
  }
  return true;
}

LieAlgebra LieAlgebra::relabeled(const std::vector<int>& placement) const {
  if (static_cast<int>(placement.size()) != dim_) throw std::invalid_argument("placement must list every basis index once");
  std::vector<bool> seen(static_cast<std::size_t>(dim_), false);
  for (int p : placement) {
    if (p < 1 || p > dim_ || seen[static_cast<std::size_t>(p - 1)])
      throw std::invalid_argument("placement must be a permutation of 1.." + std::to_string(dim_));
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
  LieAlgebra out;
  out.dim_ = dim_;
  out.c_.assign(c_.size(), Rational(0));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        out.c_[out.index(i, j, k)] = c(placement[static_cast<std::size_t>(i)] - 1,
                                       placement[static_cast<std::size_t>(j)] - 1,
                                       placement[static_cast<std::size_t>(k)] - 1);
  out.build_differentials();
  return out;
}

LieAlgebra LieAlgebra::rotated(const QMatrix& q) const {
  if (q.rows() != static_cast<std::size_t>(dim_) || !(q.transpose() * q == QMatrix::identity(q.rows())))
    throw std::invalid_argument("rotated: need an orthogonal matrix of the algebra dimension");
  const auto n = static_cast<std::size_t>(dim_);
  LieAlgebra out;
  out.dim_ = dim_;
  out.c_.assign(c_.size(), Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QVector x = q.col(a), y = q.col(b);
      QVector br = bracket(x, y);
      for (std::size_t cc = 0; cc < n; ++cc) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += q(k, cc) * br[k];
        out.c_[out.index(static_cast<int>(a), static_cast<int>(b), static_cast<int>(cc))] = s;
      }
    }
  out.build_differentials();
  return out;
}

Form LieAlgebra::d(const Form& a) const {
  if (a.dim() != dim_) throw std::invalid_argument("d: form dimension differs from the algebra");
  return extend_derivation(a, d_basis_, 1);
}

Form LieAlgebra::codiff(const Form& a) const {
  if (a.degree() == 0) return Form(dim_, 0);
  const int k = a.degree();
  Form out = hodge(d(hodge(a)));
  if ((dim_ * (k + 1) + 1) % 2 != 0) out *= Rational(-1);
  return out;
}

Form LieAlgebra::cartan_form() const {
  Form out(dim_, std::min(3, dim_));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(i, k, j))
          throw std::invalid_argument("metric is not bi-invariant: <[X,Y],Z> is not a 3-form");
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) out.add_term((1u << i) | (1u << j) | (1u << k), c(i, j, k));
  return out;
}

Form rotate_form(const Form& a, const QMatrix& q) {
  std::vector<Form> images;
  for (std::size_t k = 0; k < q.rows(); ++k) images.push_back(Form::one_form(q.row(k)));
  return substitute(a, images);
}

std::vector<Rational> InvariantConnection::torsion_tensor() const {
  const int n = algebra.dim();
  std::vector<Rational> t(static_cast<std::size_t>(n * n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        t[static_cast<std::size_t>((i * n + j) * n + k)] =
            gamma[static_cast<std::size_t>(i)](static_cast<std::size_t>(k), static_cast<std::size_t>(j)) -
            gamma[static_cast<std::size_t>(j)](static_cast<std::size_t>(k), static_cast<std::size_t>(i)) -
            algebra.c(i, j, k);
  return t;
}

bool InvariantConnection::is_metric() const {
  for (const auto& g : gamma)
    if (!g.is_skew()) return false;
  return true;
}

Form InvariantConnection::covariant_derivative(int i, const Form& a) const {
  const int n = algebra.dim();
  const auto& g = gamma.at(static_cast<std::size_t>(i));
  std::vector<Form> images;
  for (int k = 0; k < n; ++k) {
    Form img(n, 1);
    for (int j = 0; j < n; ++j) img.add_term(1u << j, -g(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
    images.push_back(std::move(img));
  }
  return extend_derivation(a, images, 0);
}

InvariantConnection levi_civita(const LieAlgebra& g) {
  const int n = g.dim();
  InvariantConnection conn{g, Form(n, std::min(3, n)), {}};
  for (int i = 0; i < n; ++i) {
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = (g.c(i, j, k) - g.c(j, k, i) + g.c(k, i, j)) / 2;
    conn.gamma.push_back(std::move(m));
  }
  return conn;
}

InvariantConnection with_torsion(const LieAlgebra& g, const Form& torsion) {
  if (torsion.degree() != 3 || torsion.dim() != g.dim()) throw std::invalid_argument("with_torsion: need a 3-form on the algebra");
  auto conn = levi_civita(g);
  conn.torsion = torsion;
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        conn.gamma[static_cast<std::size_t>(i)](static_cast<std::size_t>(k), static_cast<std::size_t>(j)) +=
            torsion.at({i + 1, j + 1, k + 1}) / 2;
  return conn;
}

bool CurvatureData::flat() const {
  for (const auto& m : r)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

std::vector<QMatrix> curvature_endomorphisms(const InvariantConnection& conn) {
  const int n = conn.algebra.dim();
  std::vector<QMatrix> r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& gi = conn.gamma[static_cast<std::size_t>(i)];
      const auto& gj = conn.gamma[static_cast<std::size_t>(j)];
      QMatrix m = gi * gj - gj * gi;
      for (int k = 0; k < n; ++k)
        if (sgn(conn.algebra.c(i, j, k)) != 0) m -= conn.algebra.c(i, j, k) * conn.gamma[static_cast<std::size_t>(k)];
      r.push_back(std::move(m));
    }
  return r;
}

QMatrix ricci_of(const std::vector<QMatrix>& r, int n) {
  QMatrix ric(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z)
      for (int i = 0; i < n; ++i)
        ric(static_cast<std::size_t>(y), static_cast<std::size_t>(z)) +=
            r[static_cast<std::size_t>(i * n + y)](static_cast<std::size_t>(i), static_cast<std::size_t>(z));
  return ric;
}

QVector flatten(const QMatrix& m) {
  QVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

QMatrix unflatten(const QVector& v, std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace

CurvatureData curvature(const InvariantConnection& conn) {
  const int n = conn.algebra.dim();
  CurvatureData out;
  out.dim = n;
  out.r = curvature_endomorphisms(conn);
  out.ric_nabla = ricci_of(out.r, n);
  out.ric_g = ricci_of(curvature_endomorphisms(levi_civita(conn.algebra)), n);
  out.scal_g = out.ric_g.trace();
  return out;
}

QMatrix ric_from_torsion(const Form& torsion) {
  const int n = torsion.dim();
  std::vector<Form> hooks;
  for (int i = 0; i < n; ++i) hooks.push_back(hook_frame(i, torsion));
  QMatrix ric(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      ric(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
          inner(hooks[static_cast<std::size_t>(a)], hooks[static_cast<std::size_t>(b)]) / 2;
  return ric;
}

HolonomyAlgebra holonomy_algebra(const InvariantConnection& conn) {
  const auto n = static_cast<std::size_t>(conn.algebra.dim());
  std::vector<QVector> span;
  for (const auto& m : curvature_endomorphisms(conn)) span.push_back(flatten(m));
  span = span_basis(span);
  std::size_t previous = 0;
  while (span.size() != previous) {
    previous = span.size();
    std::vector<QVector> grown = span;
    std::vector<QMatrix> current;
    for (const auto& v : span) current.push_back(unflatten(v, n));
    for (const auto& a : current) {
      for (const auto& g : conn.gamma) grown.push_back(flatten(commutator(g, a)));
      for (const auto& b : current) grown.push_back(flatten(commutator(a, b)));
    }
    span = span_basis(grown);
  }
  HolonomyAlgebra h;
  for (const auto& v : span) h.basis.push_back(unflatten(v, n));
  return h;
}

ParallelFields parallel_fields(const InvariantConnection& conn) {
  const auto n = static_cast<std::size_t>(conn.algebra.dim());
  QMatrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) stacked(i * n + k, j) = conn.gamma[i](k, j);
  ParallelFields out;
  out.basis = nullspace(stacked);
  for (const auto& theta : out.basis) {
    Form t = Form::one_form(theta);
    if (!(conn.algebra.d(t) == hook(theta, conn.torsion))) out.d_matches_hook = false;
  }
  return out;
}

Form lie_derivative(const LieAlgebra& g, const QVector& x, const Form& a) {
  return lie_derivative(x, a, [&g](const Form& f) { return g.d(f); });
}

bool IntegrabilityResidual::vanishes() const {
  for (const auto& s : per_direction)
    if (!s.is_zero()) return false;
  return sigma.is_zero() && square.is_zero();
}

IntegrabilityResidual integrability_residual(const InvariantConnection& conn, const Spinor& psi,
                                             const CliffordRep& rep) {
  const int n = conn.algebra.dim();
  if (n != 7) throw std::invalid_argument("integrability_residual needs a 7-dimensional algebra");
  const Form& t = conn.torsion;
  const Form dt = conn.algebra.d(t);
  IntegrabilityResidual out;
  for (int i = 0; i < n; ++i) {
    Form term = hook_frame(i, dt) + Rational(2) * conn.covariant_derivative(i, t);
    out.per_direction.push_back(act(rep, term, psi));
  }
  out.sigma = act(rep, Rational(3) * dt - Rational(2) * sigma_T(t), psi);
  out.square = act(rep, t, act(rep, t, psi)) - norm2(t) * psi;
  return out;
}

}  // namespace g2kit
