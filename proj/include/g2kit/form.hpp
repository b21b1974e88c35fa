#pragma once

// Exterior algebra over an oriented orthonormal frame e_1..e_n of R^n (n <= 8).
//
// Conventions (fixed for the whole library):
//   * orientation is the ascending frame order, vol = e_1 ^ ... ^ e_n;
//   * basis tuples e_{i1..ik} with i1 < ... < ik are orthonormal;
//   * (X -| a)(Y_1, ...) = a(X, Y_1, ...);
//   * Hodge star satisfies a ^ *b = (a, b) vol.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2kit/rational.hpp"

namespace g2kit {

inline constexpr int kMaxDim = 8;

/// Bit i set <=> frame index i (0-based) present in the tuple.
using IndexMask = std::uint32_t;

inline int mask_size(IndexMask m) { return std::popcount(m); }

/// 0-based ascending indices of a mask.
inline std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

/// Sign of e_A ^ e_B relative to e_{A u B}; 0 if A and B intersect.
inline int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int idx : mask_indices(b)) inversions += std::popcount(a >> (idx + 1));
  return (inversions % 2) ? -1 : 1;
}

/// Sign picked up by moving e_i (0-based) to the front of e_A, i in A.
inline int hook_sign(int i, IndexMask a) {
  return (std::popcount(a & ((1u << i) - 1u)) % 2) ? -1 : 1;
}

/// Lexicographically ordered basis tuples of Lambda^k(R^n).
const std::vector<IndexMask>& basis_masks(int dim, int degree);

/// Position of a mask in basis_masks(dim, popcount(mask)).
std::size_t basis_position(int dim, IndexMask mask);

/// "127" for the tuple {0, 1, 6}.
std::string mask_label(IndexMask m);

template <class S>
class BasicForm {
 public:
  using Scalar = S;

  BasicForm() = default;
  BasicForm(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("form dimension out of range");
    if (degree < 0 || degree > dim) throw std::invalid_argument("form degree out of range");
  }

  /// e_{i1} ^ ... ^ e_{ik} from 1-based indices in any order; repeated
  /// indices give the zero form.
  static BasicForm basis(int dim, const std::vector<int>& one_based, S coeff = S(1)) {
    BasicForm f(dim, static_cast<int>(one_based.size()));
    IndexMask mask = 0;
    int sign = 1;
    for (int idx : one_based) {
      if (idx < 1 || idx > dim) throw std::invalid_argument("basis index out of range");
      IndexMask bit = 1u << (idx - 1);
      if (mask & bit) return f;
      sign *= (std::popcount(mask >> idx) % 2) ? -1 : 1;
      mask |= bit;
    }
    f.add_term(mask, sign > 0 ? coeff : S(-coeff));
    return f;
  }
  static BasicForm basis(int dim, std::initializer_list<int> one_based, S coeff = S(1)) {
    return basis(dim, std::vector<int>(one_based), coeff);
  }
  static BasicForm from_mask(int dim, IndexMask mask, S coeff = S(1)) {
    BasicForm f(dim, mask_size(mask));
    f.add_term(mask, coeff);
    return f;
  }
  static BasicForm scalar(int dim, S value) { return from_mask(dim, 0u, value); }
  static BasicForm volume(int dim) { return from_mask(dim, (1u << dim) - 1u); }
  static BasicForm one_form(const std::vector<S>& coeffs) {
    BasicForm f(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(1u << i, coeffs[i]);
    return f;
  }
  /// Coordinates in the basis_masks(dim, degree) order.
  static BasicForm from_vector(int dim, int degree, const std::vector<S>& coords) {
    BasicForm f(dim, degree);
    const auto& masks = basis_masks(dim, degree);
    if (coords.size() != masks.size()) throw std::invalid_argument("form coordinate length mismatch");
    for (std::size_t i = 0; i < masks.size(); ++i) f.add_term(masks[i], coords[i]);
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::map<IndexMask, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(IndexMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// a(e_{i1}, ..., e_{ik}) for 1-based indices in any order.
  S at(const std::vector<int>& one_based) const {
    if (static_cast<int>(one_based.size()) != degree_) return S(0);
    auto e = basis(dim_, one_based);
    if (e.is_zero()) return S(0);
    const auto& [mask, sign] = *e.terms_.begin();
    S c = coefficient(mask);
    return sign > S(0) ? c : S(-c);
  }

  std::vector<S> to_vector() const {
    const auto& masks = basis_masks(dim_, degree_);
    std::vector<S> out(masks.size(), S(0));
    for (const auto& [mask, c] : terms_) out[basis_position(dim_, mask)] = c;
    return out;
  }

  void add_term(IndexMask mask, const S& c) {
    if (mask_size(mask) != degree_) throw std::invalid_argument("term degree mismatch");
    if (mask >> dim_) throw std::invalid_argument("term index exceeds dimension");
    if (c == S(0)) return;
    auto [it, inserted] = terms_.try_emplace(mask, c);
    if (!inserted) {
      it->second += c;
      if (it->second == S(0)) terms_.erase(it);
    }
  }

  BasicForm& operator+=(const BasicForm& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicForm& operator-=(const BasicForm& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, S(-c));
    return *this;
  }
  BasicForm& operator*=(const S& s) {
    if (s == S(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
  friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
  friend BasicForm operator-(BasicForm a) { return a *= S(-1); }
  friend BasicForm operator*(const S& s, BasicForm a) { return a *= s; }
  friend BasicForm operator*(BasicForm a, const S& s) { return a *= s; }
  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_space(const BasicForm& o) const {
    if (o.dim_ != dim_ || o.degree_ != degree_)
      throw std::invalid_argument("form sum: dimension or degree mismatch");
  }

  int dim_ = 0;
  int degree_ = 0;
  std::map<IndexMask, S> terms_;
};

using Form = BasicForm<Rational>;
using RealForm = BasicForm<double>;

/// Exterior product; the zero form of degree min(k+l, n) when k + l > n is
/// represented with degree n.
template <class S>
BasicForm<S> wedge(const BasicForm<S>& a, const BasicForm<S>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  const int deg = std::min(a.degree() + b.degree(), a.dim());
  BasicForm<S> out(a.dim(), deg);
  if (a.degree() + b.degree() > a.dim()) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      S prod = ca * cb;
      out.add_term(ma | mb, s > 0 ? prod : S(-prod));
    }
  return out;
}

/// Interior product X -| a with X given by frame components; degree-0 input
/// gives the zero 0-form.
template <class S>
BasicForm<S> hook(const std::vector<S>& x, const BasicForm<S>& a) {
  if (static_cast<int>(x.size()) != a.dim()) throw std::invalid_argument("hook: dimension mismatch");
  if (a.degree() == 0) return BasicForm<S>(a.dim(), 0);
  BasicForm<S> out(a.dim(), a.degree() - 1);
  for (const auto& [m, c] : a.terms())
    for (int i = 0; i < a.dim(); ++i) {
      if (!(m & (1u << i)) || x[i] == S(0)) continue;
      S v = c * x[i];
      out.add_term(m & ~(1u << i), hook_sign(i, m) > 0 ? v : S(-v));
    }
  return out;
}

/// Interior product with a 1-form identified with a vector by the metric.
template <class S>
BasicForm<S> hook(const BasicForm<S>& x, const BasicForm<S>& a) {
  if (x.degree() != 1) throw std::invalid_argument("hook: first argument must be a 1-form");
  return hook(x.to_vector(), a);
}

/// Interior product with the frame vector e_i (0-based).
template <class S>
BasicForm<S> hook_frame(int i, const BasicForm<S>& a) {
  std::vector<S> x(static_cast<std::size_t>(a.dim()), S(0));
  x[static_cast<std::size_t>(i)] = S(1);
  return hook(x, a);
}

template <class S>
BasicForm<S> hodge(const BasicForm<S>& a) {
  const IndexMask full = (1u << a.dim()) - 1u;
  BasicForm<S> out(a.dim(), a.dim() - a.degree());
  for (const auto& [m, c] : a.terms()) {
    IndexMask comp = full & ~m;
    out.add_term(comp, wedge_sign(m, comp) > 0 ? c : S(-c));
  }
  return out;
}

/// Induced inner product; 0 for forms of different dimension or degree.
template <class S>
S inner(const BasicForm<S>& a, const BasicForm<S>& b) {
  S s(0);
  if (a.dim() != b.dim() || a.degree() != b.degree()) return s;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

template <class S>
S norm2(const BasicForm<S>& a) {
  return inner(a, a);
}

/// Replaces each basis 1-form e_i by images[i] and expands multiplicatively.
template <class S>
BasicForm<S> substitute(const BasicForm<S>& a, const std::vector<BasicForm<S>>& images) {
  if (static_cast<int>(images.size()) != a.dim()) throw std::invalid_argument("substitute: need one image per frame index");
  const int dim = images.front().dim();
  BasicForm<S> out(dim, std::min(a.degree(), dim));
  for (const auto& [m, c] : a.terms()) {
    BasicForm<S> term = BasicForm<S>::scalar(dim, c);
    for (int idx : mask_indices(m)) term = wedge(term, images[static_cast<std::size_t>(idx)]);
    out += term;
  }
  return out;
}

/// sigma_T = 1/2 sum_i (v_i -| T) ^ (v_i -| T) over an orthonormal frame v_i.
template <class S>
BasicForm<S> sigma_T(const BasicForm<S>& t, const std::vector<std::vector<S>>& frame) {
  if (t.degree() != 3) throw std::invalid_argument("sigma_T: torsion must be a 3-form");
  BasicForm<S> out(t.dim(), std::min(4, t.dim()));
  for (const auto& v : frame) {
    auto h = hook(v, t);
    out += wedge(h, h);
  }
  out *= S(1) / S(2);
  return out;
}

template <class S>
BasicForm<S> sigma_T(const BasicForm<S>& t) {
  std::vector<std::vector<S>> frame;
  for (int i = 0; i < t.dim(); ++i) {
    std::vector<S> e(static_cast<std::size_t>(t.dim()), S(0));
    e[static_cast<std::size_t>(i)] = S(1);
    frame.push_back(std::move(e));
  }
  return sigma_T(t, frame);
}

/// Extends a map on basis 1-forms, e^k -> images[k] (all of degree 1 + shift,
/// shift in {-1, 0, 1}), to a (graded) derivation of degree `shift`:
/// D(e^{i1} ^ ... ^ e^{ik}) = sum_p (-1)^{(p-1) shift} e^{i1} ^ .. D(e^{ip}) .. ^ e^{ik}.
template <class S>
BasicForm<S> extend_derivation(const BasicForm<S>& a, const std::vector<BasicForm<S>>& images, int shift) {
  const int n = a.dim();
  const int deg = std::clamp(a.degree() + shift, 0, n);
  BasicForm<S> out(n, deg);
  if (a.degree() + shift < 0 || a.degree() + shift > n) return out;
  for (const auto& [m, c] : a.terms()) {
    const auto idx = mask_indices(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const auto& img = images[static_cast<std::size_t>(idx[p])];
      if (img.is_zero()) continue;
      IndexMask before = 0, after = 0;
      for (std::size_t q = 0; q < idx.size(); ++q) {
        if (q < p) before |= 1u << idx[q];
        if (q > p) after |= 1u << idx[q];
      }
      S coeff = ((static_cast<int>(p) * shift) % 2 != 0) ? S(-c) : c;
      auto term = wedge(wedge(BasicForm<S>::from_mask(n, before, coeff), img), BasicForm<S>::from_mask(n, after));
      out += term;
    }
  }
  return out;
}

/// L_X a = d(X -| a) + X -| d a for any exterior derivative `d` on the frame.
template <class S, class Derivative>
BasicForm<S> lie_derivative(const std::vector<S>& x, const BasicForm<S>& a, Derivative&& d) {
  BasicForm<S> out(a.dim(), a.degree());
  if (a.degree() == 0) return out;
  out += d(hook(x, a));
  auto da = d(a);
  if (!da.is_zero()) out += hook(x, da);
  return out;
}

/// Text form "+1 e127 +1 e135 -1 e146", lexicographic tuple order; "0" for
/// the zero form.
std::string to_string(const Form& a);

}  // namespace g2kit
