#include "g2kit/spin7.hpp"

#include <stdexcept>

#include "g2kit/omega3.hpp"

namespace g2kit {

Spinor::Spinor(QVector components) : c_(std::move(components)) {
  if (c_.size() != kSpinorDim) throw std::invalid_argument("spinor needs 8 components");
}

Spinor& Spinor::operator+=(const Spinor& o) {
  for (std::size_t i = 0; i < kSpinorDim; ++i) c_[i] += o.c_[i];
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  for (std::size_t i = 0; i < kSpinorDim; ++i) c_[i] -= o.c_[i];
  return *this;
}

Spinor& Spinor::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Rational dot(const Spinor& a, const Spinor& b) { return dot(a.components(), b.components()); }

std::string to_string(const Spinor& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < kSpinorDim; ++i) {
    if (i) out += ", ";
    out += s[i].get_str();
  }
  return out + ")";
}

int clifford_sign(IndexMask a, IndexMask b) {
  int count = std::popcount(a & b);
  for (int idx : mask_indices(b)) count += std::popcount(a >> (idx + 1));
  return (count % 2) ? -1 : 1;
}

CliffordRep::CliffordRep(std::array<QMatrix, 7> generators) : gammas_(std::move(generators)) {
  monomials_.resize(1u << 7);
  monomials_[0] = QMatrix::identity(kSpinorDim);
  for (IndexMask m = 1; m < (1u << 7); ++m) {
    // e_I = e_{i1} . e_{rest}, and i1 is the smallest index so no reordering.
    int first = std::countr_zero(m);
    monomials_[m] = gammas_[static_cast<std::size_t>(first)] * monomials_[m & (m - 1)];
  }
}

QMatrix CliffordRep::operator_of(const Form& a) const {
  if (a.dim() != 7) throw std::invalid_argument("Clifford action needs a form on R^7");
  QMatrix out(kSpinorDim, kSpinorDim);
  for (const auto& [m, c] : a.terms()) out += c * monomials_[m];
  return out;
}

QMatrix CliffordRep::operator_of(const std::vector<Form>& multivector) const {
  QMatrix out(kSpinorDim, kSpinorDim);
  for (const auto& part : multivector) out += operator_of(part);
  return out;
}

namespace {

// Left multiplication by e_i on the octonions R + Im O, basis (1, e_1..e_7),
// with e_i e_j = -delta_ij + sum_k omega(e_i, e_j, e_k) e_k.
std::array<QMatrix, 7> octonion_left_multiplication(const Form& omega) {
  std::array<QMatrix, 7> gammas;
  for (int i = 1; i <= 7; ++i) {
    QMatrix g(kSpinorDim, kSpinorDim);
    g(static_cast<std::size_t>(i), 0) = 1;
    for (int j = 1; j <= 7; ++j) {
      if (i == j) {
        g(0, static_cast<std::size_t>(j)) = -1;
        continue;
      }
      for (int k = 1; k <= 7; ++k) g(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = omega.at({i, j, k});
    }
    gammas[static_cast<std::size_t>(i - 1)] = std::move(g);
  }
  return gammas;
}

bool has_g2_spectrum(const std::vector<EigenvalueEntry>& spec, int sign) {
  if (spec.size() != 2) return false;
  const auto& lo = spec[0];
  const auto& hi = spec[1];
  if (!lo.exact || !hi.exact) return false;
  if (sign < 0) return lo.value == -7 && lo.multiplicity == 1 && hi.value == 1 && hi.multiplicity == 7;
  return lo.value == -1 && lo.multiplicity == 7 && hi.value == 7 && hi.multiplicity == 1;
}

void self_check(const CliffordRep& rep) {
  const auto id = QMatrix::identity(kSpinorDim);
  for (int i = 1; i <= 7; ++i) {
    const auto& gi = rep.generator(i);
    if (!gi.is_skew()) throw std::logic_error("Clifford generator is not skew");
    if (!(gi.transpose() * gi == id)) throw std::logic_error("Clifford generator is not orthogonal");
    for (int j = 1; j <= 7; ++j) {
      QMatrix anti = gi * rep.generator(j) + rep.generator(j) * gi;
      QMatrix expected = i == j ? Rational(-2) * id : QMatrix(kSpinorDim, kSpinorDim);
      if (!(anti == expected)) throw std::logic_error("Clifford relation fails");
    }
  }
}

}  // namespace

CliffordRep build_rep() {
  const Form omega = omega3_form();
  auto gammas = octonion_left_multiplication(omega);
  CliffordRep rep(gammas);
  self_check(rep);
  auto spec = symmetric_spectrum(rep.operator_of(omega));
  if (has_g2_spectrum(spec, +1)) {
    for (auto& g : gammas) g *= Rational(-1);
    rep = CliffordRep(gammas);
    spec = symmetric_spectrum(rep.operator_of(omega));
  }
  if (!has_g2_spectrum(spec, -1)) throw std::logic_error("omega3 does not act with spectrum {-7 x1, +1 x7}");
  return rep;
}

const CliffordRep& standard_rep() {
  static const CliffordRep rep = build_rep();
  return rep;
}

Spinor act(const CliffordRep& rep, const Form& a, const Spinor& psi) {
  if (a.dim() != 7) throw std::invalid_argument("act: form must live on R^7");
  QVector out(kSpinorDim);
  for (const auto& [m, c] : a.terms()) {
    QVector part = rep.monomial(m) * psi.components();
    for (std::size_t i = 0; i < kSpinorDim; ++i) out[i] += c * part[i];
  }
  return Spinor(std::move(out));
}

Spinor act(const CliffordRep& rep, const std::vector<Form>& multivector, const Spinor& psi) {
  Spinor out;
  for (const auto& part : multivector) out += act(rep, part, psi);
  return out;
}

std::vector<Form> clifford_product(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("clifford_product: dimension mismatch");
  std::vector<Form> parts;
  for (int k = 0; k <= a.dim(); ++k) parts.emplace_back(a.dim(), k);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      IndexMask m = ma ^ mb;
      Rational v = ca * cb;
      if (clifford_sign(ma, mb) < 0) v = -v;
      parts[static_cast<std::size_t>(mask_size(m))].add_term(m, v);
    }
  return parts;
}

std::vector<EigenvalueEntry> spectrum(const CliffordRep& rep, const Form& a) {
  QMatrix op = rep.operator_of(a);
  if (!op.is_symmetric())
    throw std::invalid_argument("Clifford operator of '" + to_string(a) + "' is not symmetric");
  return symmetric_spectrum(op);
}

Spinor find_psi0(const CliffordRep& rep, const Form& omega) {
  if (omega.degree() != 3) throw std::invalid_argument("find_psi0: omega must be a 3-form");
  QMatrix shifted = rep.operator_of(omega);
  for (std::size_t i = 0; i < kSpinorDim; ++i) shifted(i, i) += 7;
  auto kernel = nullspace(shifted);
  if (kernel.size() != 1)
    throw std::invalid_argument("(-7)-eigenspace of '" + to_string(omega) + "' has dimension " +
                                std::to_string(kernel.size()) + ", not 1: not a G2 3-form");
  QVector v = kernel.front();
  for (const auto& x : v)
    if (sgn(x) != 0) {
      v = scaled(v, 1 / Rational(x));
      break;
    }
  return Spinor(std::move(v));
}

}  // namespace g2kit
