#pragma once

// Text formats.
//
// Form files: optional `dim N` (default 7) and `deg k` lines, then terms
// such as `+1 e127`, `-e146`, `+3/2 e235`, any number per line. Indices are
// single digits 1..N; unsorted tuples are permuted with the matching sign.
//
// Algebra files: optional `dim N`, then lines `i j k p/q` meaning
// c^k_ij = p/q, i.e. [e_i, e_j] has e_k-component p/q.
//
// `#` starts a comment in both formats.

#include <istream>
#include <stdexcept>
#include <string>

#include "g2kit/form.hpp"
#include "g2kit/liegroup.hpp"

namespace g2kit {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

Form parse_form(std::istream& in, const std::string& source = "<input>");
Form parse_form(const std::string& text);
Form read_form_file(const std::string& path);

LieAlgebra parse_algebra(std::istream& in, const std::string& source = "<input>");
LieAlgebra parse_algebra(const std::string& text);
LieAlgebra read_algebra_file(const std::string& path);

/// Inverse of parse_form.
std::string format_form_file(const Form& a);
/// Inverse of parse_algebra (entries with i < j only).
std::string format_algebra_file(const LieAlgebra& g);

/// Always "p/q", also for integers.
std::string rational_text(const Rational& q);
/// 12 significant digits, scientific.
std::string sci(double x);

}  // namespace g2kit
