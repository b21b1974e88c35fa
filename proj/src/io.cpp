#include "g2kit/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace g2kit {

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t end = std::min(line.find('#'), line.size());
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < end && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_int(const std::string& source, int line, const Token& t, int lo, int hi, const char* what) {
  int v = 0;
  if (t.text.empty() || t.text.size() > 3) throw ParseError(source, line, t.column, std::string("expected ") + what);
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(source, line, t.column, std::string("expected ") + what);
    v = v * 10 + (c - '0');
  }
  if (v < lo || v > hi)
    throw ParseError(source, line, t.column,
                     std::string(what) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

Rational parse_coeff(const std::string& source, int line, int column, const std::string& text) {
  if (text == "+") return Rational(1);
  if (text == "-") return Rational(-1);
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line, column, e.what());
  }
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return in;
}

}  // namespace

Form parse_form(std::istream& in, const std::string& source) {
  int dim = 7;
  std::optional<int> degree;
  bool seen_term = false;
  struct Term {
    std::vector<int> idx;
    Rational c;
    int line, column;
  };
  std::vector<Term> terms;
  std::string text;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    auto toks = tokenize(text);
    if (toks.empty()) continue;
    if (toks[0].text == "dim" || toks[0].text == "deg") {
      const bool is_dim = toks[0].text == "dim";
      if (seen_term) throw ParseError(source, lineno, toks[0].column, "'" + toks[0].text + "' must precede all terms");
      if (toks.size() != 2) throw ParseError(source, lineno, toks[0].column, "expected '" + toks[0].text + " <n>'");
      if (is_dim)
        dim = parse_int(source, lineno, toks[1], 1, 9, "dimension");
      else
        degree = parse_int(source, lineno, toks[1], 0, 9, "degree");
      continue;
    }
    std::optional<Rational> pending;
    bool pending_sign = false;
    int pending_col = 0;
    for (const auto& t : toks) {
      const auto epos = t.text.find('e');
      if (epos == std::string::npos) {
        const bool bare_sign = t.text == "+" || t.text == "-";
        if (pending && !(pending_sign && !bare_sign))
          throw ParseError(source, lineno, t.column, "coefficient without basis element");
        const Rational q = parse_coeff(source, lineno, t.column, t.text);
        pending = pending ? *pending * q : q;
        if (!pending_sign) pending_col = t.column;
        pending_sign = bare_sign;
        continue;
      }
      Rational c(1);
      if (epos > 0) {
        if (pending) throw ParseError(source, lineno, t.column, "two coefficients for one basis element");
        c = parse_coeff(source, lineno, t.column, t.text.substr(0, epos));
      } else if (pending) {
        c = *pending;
      }
      pending.reset();
      pending_sign = false;
      std::vector<int> idx;
      const std::string digits = t.text.substr(epos + 1);
      if (digits.empty()) throw ParseError(source, lineno, t.column + static_cast<int>(epos) + 1, "empty index tuple");
      for (std::size_t k = 0; k < digits.size(); ++k) {
        const int col = t.column + static_cast<int>(epos + 1 + k);
        const char ch = digits[k];
        if (ch < '1' || ch > '9') throw ParseError(source, lineno, col, std::string("bad index '") + ch + "'");
        const int v = ch - '0';
        if (v > dim) throw ParseError(source, lineno, col, "index " + std::to_string(v) + " exceeds dimension " + std::to_string(dim));
        for (int prev : idx)
          if (prev == v) throw ParseError(source, lineno, col, "repeated index " + std::to_string(v));
        idx.push_back(v);
      }
      if (degree && static_cast<int>(idx.size()) != *degree)
        throw ParseError(source, lineno, t.column, "term degree " + std::to_string(idx.size()) + " does not match deg " + std::to_string(*degree));
      if (!degree) degree = static_cast<int>(idx.size());
      seen_term = true;
      terms.push_back({idx, c, lineno, t.column});
    }
    if (pending) throw ParseError(source, lineno, pending_col, "coefficient without basis element");
  }
  if (!degree) throw ParseError(source, lineno, 0, "empty form needs a 'deg' line");
  if (*degree > dim) throw ParseError(source, lineno, 0, "degree exceeds dimension");
  Form out(dim, *degree);
  for (const auto& t : terms) out += Form::basis(dim, t.idx, t.c);
  return out;
}

Form parse_form(const std::string& text) {
  std::istringstream in(text);
  return parse_form(in);
}

Form read_form_file(const std::string& path) {
  auto in = open_file(path);
  return parse_form(in, path);
}

LieAlgebra parse_algebra(std::istream& in, const std::string& source) {
  std::optional<int> dim;
  int max_index = 0;
  std::vector<LieAlgebra::Entry> entries;
  std::string text;
  int lineno = 0;
  while (std::getline(in, text)) {
    ++lineno;
    auto toks = tokenize(text);
    if (toks.empty()) continue;
    if (toks[0].text == "dim") {
      if (!entries.empty() || dim) throw ParseError(source, lineno, toks[0].column, "'dim' must come first and only once");
      if (toks.size() != 2) throw ParseError(source, lineno, toks[0].column, "expected 'dim <n>'");
      dim = parse_int(source, lineno, toks[1], 1, 64, "dimension");
      continue;
    }
    if (toks.size() != 4) throw ParseError(source, lineno, toks[0].column, "expected 'i j k p/q'");
    LieAlgebra::Entry e;
    const int hi = dim ? *dim : 64;
    e.i = parse_int(source, lineno, toks[0], 1, hi, "index");
    e.j = parse_int(source, lineno, toks[1], 1, hi, "index");
    e.k = parse_int(source, lineno, toks[2], 1, hi, "index");
    if (e.i == e.j) throw ParseError(source, lineno, toks[1].column, "bracket of an element with itself");
    e.value = parse_coeff(source, lineno, toks[3].column, toks[3].text);
    max_index = std::max({max_index, e.i, e.j, e.k});
    entries.push_back(e);
  }
  const int n = dim ? *dim : max_index;
  if (n == 0) throw ParseError(source, lineno, 0, "empty algebra needs a 'dim' line");
  try {
    return LieAlgebra(n, entries);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lineno, 0, e.what());
  }
}

LieAlgebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

LieAlgebra read_algebra_file(const std::string& path) {
  auto in = open_file(path);
  return parse_algebra(in, path);
}

std::string format_form_file(const Form& a) {
  std::string out = "dim " + std::to_string(a.dim()) + "\ndeg " + std::to_string(a.degree()) + "\n";
  for (IndexMask m : basis_masks(a.dim(), a.degree())) {
    auto it = a.terms().find(m);
    if (it == a.terms().end()) continue;
    out += (sgn(it->second) > 0 ? "+" : "") + it->second.get_str() + " e" + mask_label(m) + "\n";
  }
  return out;
}

std::string format_algebra_file(const LieAlgebra& g) {
  std::string out = "dim " + std::to_string(g.dim()) + "\n";
  for (const auto& e : g.entries())
    if (e.i < e.j) out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.k) + " " + e.value.get_str() + "\n";
  return out;
}

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

}  // namespace g2kit
