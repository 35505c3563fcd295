#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "persymm/gf2.hpp"

// Stacked-block matrix shapes: a column count k and an ordered list of
// persymmetric blocks (constant anti-diagonals) and free blocks
// (unconstrained rows). Grammar: "[" block (";" block)* "]" "x" k where a
// block is an integer, a sum "a+b" (persymmetric, rows = a+b), or "(r)"
// (free, r rows).

namespace persymm {

enum class BlockKind { Persymmetric, Free };

struct BlockSpec {
  BlockKind kind;
  int rows;

  bool operator==(const BlockSpec&) const = default;
};

struct StackedShape {
  int cols = 1;
  std::vector<BlockSpec> blocks;

  int total_rows() const {
    int r = 0;
    for (const auto& b : blocks) r += b.rows;
    return r;
  }

  // parameters: rows+cols-1 per persymmetric block, rows*cols per free block
  int free_param_count() const {
    int n = 0;
    for (const auto& b : blocks)
      n += b.kind == BlockKind::Persymmetric ? b.rows + cols - 1 : b.rows * cols;
    return n;
  }

  int max_rank() const { return std::min(cols, total_rows()); }

  bool operator==(const StackedShape&) const = default;
};

inline StackedShape parse_shape(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("parse_shape: " + msg + " in \"" + text + "\"");
  };
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto integer = [&]() -> long {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos;
    }
    return v;
  };

  StackedShape shape;
  expect('[');
  while (true) {
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      long r = integer();
      expect(')');
      if (r < 1) fail("free block needs rows >= 1");
      shape.blocks.push_back({BlockKind::Free, static_cast<int>(r)});
    } else {
      long r = integer();
      while (pos < s.size() && s[pos] == '+') {  // "a+b" sugar, e.g. 2+3 -> 5 rows
        ++pos;
        r += integer();
      }
      if (r < 1) fail("persymmetric block needs rows >= 1");
      shape.blocks.push_back({BlockKind::Persymmetric, static_cast<int>(r)});
    }
    if (pos < s.size() && s[pos] == ';') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) fail("expected 'x'");
  ++pos;
  long k = integer();
  if (pos != s.size()) fail("trailing characters");
  if (k < 1) fail("k must be >= 1");
  if (k > kMaxCols) fail("k exceeds 64 columns");
  shape.cols = static_cast<int>(k);
  return shape;
}

inline std::string canonical_string(const StackedShape& shape) {
  std::string out = "[";
  bool first = true;
  for (const auto& b : shape.blocks) {
    if (!first) out += ';';
    first = false;
    if (b.kind == BlockKind::Free)
      out += "(" + std::to_string(b.rows) + ")";
    else
      out += std::to_string(b.rows);
  }
  out += "]x" + std::to_string(shape.cols);
  return out;
}

// Per-row realization plan: row i of the matrix is (bits >> shift[i]) & mask.
// Persymmetric block row r reads the block's anti-diagonal parameters
// r..r+k-1; a free block row reads its own k bits.
struct RealizePlan {
  std::vector<int> shifts;
  std::uint64_t mask = 0;
  // rows [0, split_rows) read only state bits [0, split_params): the first
  // block's rows and parameters. Rows past split_rows read bits above.
  int split_rows = 0;
  int split_params = 0;

  explicit RealizePlan(const StackedShape& shape) {
    const int k = shape.cols;
    mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    int offset = 0;
    for (const auto& b : shape.blocks) {
      if (b.kind == BlockKind::Persymmetric) {
        for (int r = 0; r < b.rows; ++r) shifts.push_back(offset + r);
        offset += b.rows + k - 1;
      } else {
        for (int r = 0; r < b.rows; ++r) shifts.push_back(offset + r * k);
        offset += b.rows * k;
      }
      if (split_rows == 0) {
        split_rows = b.rows;
        split_params = offset;
      }
    }
  }
};

struct ParamAssignment {
  const StackedShape* shape;
  std::uint64_t bits;
};

inline GF2Matrix realize(const ParamAssignment& p) {
  const StackedShape& shape = *p.shape;
  if (shape.free_param_count() > 64)
    throw std::domain_error("realize: more than 64 free parameters");
  RealizePlan plan(shape);
  GF2Matrix m(shape.cols);
  for (int s : plan.shifts) m.push_row((p.bits >> s) & plan.mask);
  return m;
}

}  // namespace persymm
