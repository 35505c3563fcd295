#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "persymm/bigint.hpp"

// Symbolic exponential polynomials in k, l, i: every closed-form rank count
// is a sum of terms c * 2^(a*k + b*l + d*i + e).

namespace persymm {

// value = kMul*k + lMul*l + iMul*i + offset
struct LinExpr {
  int kMul = 0, lMul = 0, iMul = 0, offset = 0;

  long eval(int k, int l, int i) const {
    return static_cast<long>(kMul) * k + static_cast<long>(lMul) * l +
           static_cast<long>(iMul) * i + offset;
  }
  bool operator==(const LinExpr&) const = default;
};

struct SymTerm {
  BigInt coef;
  LinExpr exp;

  BigInt eval(int k, int l, int i) const {
    const long e = exp.eval(k, l, i);
    if (e < 0)
      throw std::logic_error("SymTerm: negative exponent 2^" + std::to_string(e) +
                             " (registry encoding error)");
    return coef * pow2(e);
  }
};

struct KBound {
  bool strict = true;  // k > bound vs k >= bound
  LinExpr bound;

  bool holds(int k, int l, int i) const {
    const long b = bound.eval(k, l, i);
    return strict ? k > b : k >= b;
  }
};

// One case line of a piecewise table: a rank selector (fixed or a range
// with bounds linear in l), an optional l-validity window, a k-validity
// predicate, and the term sum.
struct FormulaPiece {
  LinExpr rank_lo, rank_hi;          // selector: rank_lo <= i <= rank_hi
  std::optional<int> l_min, l_max;   // piece applies only for l in window
  KBound k_validity;
  std::vector<SymTerm> terms;

  bool selects(int k, int l, int i) const {
    if (l_min && l < *l_min) return false;
    if (l_max && l > *l_max) return false;
    if (i < rank_lo.eval(k, l, 0) || i > rank_hi.eval(k, l, 0)) return false;
    return k_validity.holds(k, l, i);
  }

  BigInt eval(int k, int l, int i) const {
    BigInt v = 0;
    for (const auto& t : terms) v += t.eval(k, l, i);
    return v;
  }
};

namespace fml {

// --- tiny parsers for the registry text format ---

inline void skip_ws(const std::string& s, std::size_t& p) {
  while (p < s.size() && (s[p] == ' ' || s[p] == '\t')) ++p;
}

inline long parse_int(const std::string& s, std::size_t& p) {
  skip_ws(s, p);
  bool neg = false;
  if (p < s.size() && (s[p] == '-' || s[p] == '+')) neg = s[p++] == '-';
  if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
    throw std::invalid_argument("formula: expected integer in \"" + s + "\"");
  long v = 0;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
    v = v * 10 + (s[p++] - '0');
  return neg ? -v : v;
}

// linear expression over k,l,i: e.g. "2k+2i-11", "4l+7", "i", "8"
inline LinExpr parse_lin(const std::string& s) {
  LinExpr e;
  std::size_t p = 0;
  int sign = 1;
  while (true) {
    skip_ws(s, p);
    if (p >= s.size()) break;
    if (s[p] == '+') { sign = 1; ++p; continue; }
    if (s[p] == '-') { sign = -1; ++p; continue; }
    int mul = 1;
    if (std::isdigit(static_cast<unsigned char>(s[p]))) mul = static_cast<int>(parse_int(s, p));
    skip_ws(s, p);
    if (p < s.size() && (s[p] == 'k' || s[p] == 'l' || s[p] == 'i')) {
      (s[p] == 'k' ? e.kMul : s[p] == 'l' ? e.lMul : e.iMul) += sign * mul;
      ++p;
    } else {
      e.offset += sign * mul;
    }
    sign = 1;
  }
  return e;
}

// term sum: e.g. "3*2^(2k+5) + 105*2^(k+13) - 1417*2^(4l+28) + 30"
inline std::vector<SymTerm> parse_terms(const std::string& s) {
  std::vector<SymTerm> terms;
  std::size_t p = 0;
  while (true) {
    skip_ws(s, p);
    if (p >= s.size()) break;
    int sign = 1;
    if (s[p] == '+') { ++p; }
    else if (s[p] == '-') { sign = -1; ++p; }
    skip_ws(s, p);
    BigInt coef = 1;
    bool have_coef = false;
    if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
      const std::size_t start = p;
      std::string digits;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) digits += s[p++];
      if (p < s.size() && s[p] == '^' && digits == "2") {
        p = start;  // bare power "2^(...)", not a coefficient
      } else {
        coef = BigInt(digits);
        have_coef = true;
        skip_ws(s, p);
        if (p < s.size() && s[p] == '*') { ++p; skip_ws(s, p); }
      }
    }
    LinExpr exp;
    if (p + 1 < s.size() && s[p] == '2' && s[p + 1] == '^') {
      p += 2;
      if (p >= s.size() || s[p] != '(')
        throw std::invalid_argument("formula: expected '(' after 2^ in \"" + s + "\"");
      const auto close = s.find(')', p);
      if (close == std::string::npos)
        throw std::invalid_argument("formula: unbalanced parens in \"" + s + "\"");
      exp = parse_lin(s.substr(p + 1, close - p - 1));
      p = close + 1;
    } else if (!have_coef) {
      throw std::invalid_argument("formula: expected term at pos " + std::to_string(p) +
                                  " in \"" + s + "\"");
    }
    terms.push_back({sign * coef, exp});
  }
  if (terms.empty()) throw std::invalid_argument("formula: empty term list in \"" + s + "\"");
  return terms;
}

}  // namespace fml
}  // namespace persymm
