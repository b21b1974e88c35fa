#include "g2kit/form.hpp"

#include <array>
#include <mutex>

namespace g2kit {

namespace {

void collect(int dim, int degree, int start, IndexMask acc, std::vector<IndexMask>& out) {
  if (degree == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= dim - degree; ++i) collect(dim, degree - 1, i + 1, acc | (1u << i), out);
}

struct BasisTable {
  std::array<std::array<std::vector<IndexMask>, kMaxDim + 1>, kMaxDim + 1> masks;
  std::array<std::vector<std::size_t>, kMaxDim + 1> position;  // by dim, indexed by mask
  BasisTable() {
    for (int n = 1; n <= kMaxDim; ++n) {
      position[static_cast<std::size_t>(n)].assign(std::size_t{1} << n, 0);
      for (int k = 0; k <= n; ++k) {
        auto& list = masks[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        collect(n, k, 0, 0u, list);
        for (std::size_t p = 0; p < list.size(); ++p) position[static_cast<std::size_t>(n)][list[p]] = p;
      }
    }
  }
};

const BasisTable& table() {
  static const BasisTable t;
  return t;
}

}  // namespace

const std::vector<IndexMask>& basis_masks(int dim, int degree) {
  if (dim < 1 || dim > kMaxDim || degree < 0 || degree > dim) throw std::invalid_argument("basis_masks: out of range");
  return table().masks[static_cast<std::size_t>(dim)][static_cast<std::size_t>(degree)];
}

std::size_t basis_position(int dim, IndexMask mask) {
  return table().position[static_cast<std::size_t>(dim)][mask];
}

std::string mask_label(IndexMask m) {
  std::string s;
  for (int i : mask_indices(m)) s += static_cast<char>('1' + i);
  return s;
}

std::string to_string(const Form& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (IndexMask m : basis_masks(a.dim(), a.degree())) {
    auto it = a.terms().find(m);
    if (it == a.terms().end()) continue;
    if (!out.empty()) out += ' ';
    const Rational& c = it->second;
    out += sgn(c) > 0 ? "+" : "";
    out += c.get_str();
    out += " e";
    out += mask_label(m);
  }
  return out;
}

}  // namespace g2kit
