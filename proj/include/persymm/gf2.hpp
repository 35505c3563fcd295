#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// Bit-packed linear algebra over F2. One row is one 64-bit word,
// coordinate j stored in bit j; matrices are capped at 64 columns.

namespace persymm {

inline constexpr int kMaxCols = 64;

struct GF2Vector {
  int width = 0;
  std::uint64_t bits = 0;

  GF2Vector() = default;
  GF2Vector(int w, std::uint64_t b) : width(w), bits(b) {
    if (w < 1 || w > kMaxCols) throw std::invalid_argument("GF2Vector: width out of range");
    if (w < 64 && (b >> w) != 0) throw std::invalid_argument("GF2Vector: set bit beyond width");
  }
  bool get(int j) const { return (bits >> j) & 1u; }
};

class GF2Matrix {
 public:
  explicit GF2Matrix(int cols) : cols_(cols) {
    if (cols < 1 || cols > kMaxCols) throw std::invalid_argument("GF2Matrix: cols out of range");
  }
  GF2Matrix(int cols, std::vector<std::uint64_t> rows) : GF2Matrix(cols) {
    for (auto r : rows) push_row(r);
  }

  int cols() const { return cols_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  std::uint64_t row(int i) const { return rows_[i]; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  void push_row(std::uint64_t bits) {
    if (cols_ < 64 && (bits >> cols_) != 0)
      throw std::invalid_argument("GF2Matrix: row wider than cols");
    rows_.push_back(bits);
  }

  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }

  GF2Matrix transpose() const {
    GF2Matrix t(row_count() == 0 ? 1 : row_count());
    for (int j = 0; j < cols_; ++j) {
      std::uint64_t r = 0;
      for (int i = 0; i < row_count(); ++i)
        if (get(i, j)) r |= std::uint64_t{1} << i;
      t.push_row(r);
    }
    return t;
  }

  bool operator==(const GF2Matrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

 private:
  std::vector<std::uint64_t> rows_;
  int cols_;
};

// Rank of a set of row words by forward elimination, pivot = lowest set bit.
// basis[] is indexed by pivot position and must hold >= cols zeroed slots.
inline int rank_rows(const std::uint64_t* rows, int nrows, std::uint64_t* basis) {
  int r = 0;
  for (int i = 0; i < nrows; ++i) {
    std::uint64_t w = rows[i];
    while (w) {
      int b = __builtin_ctzll(w);
      if (!basis[b]) {
        basis[b] = w;
        ++r;
        break;
      }
      w ^= basis[b];
    }
  }
  return r;
}

inline int rank(const GF2Matrix& m) {
  std::uint64_t basis[kMaxCols] = {0};
  return rank_rows(m.rows().data(), m.row_count(), basis);
}

// Row-echelon form (pivot columns increasing left to right) plus rank.
inline std::pair<GF2Matrix, int> echelonize(const GF2Matrix& m) {
  std::uint64_t basis[kMaxCols] = {0};
  int r = rank_rows(m.rows().data(), m.row_count(), basis);
  // back-substitute so each pivot column appears in exactly one row
  for (int b = 0; b < m.cols(); ++b) {
    if (!basis[b]) continue;
    for (int b2 = 0; b2 < b; ++b2)
      if (basis[b2] && ((basis[b2] >> b) & 1u)) basis[b2] ^= basis[b];
  }
  GF2Matrix e(m.cols());
  for (int b = 0; b < m.cols(); ++b)
    if (basis[b]) e.push_row(basis[b]);
  for (int i = e.row_count(); i < m.row_count(); ++i) e.push_row(0);
  return {e, r};
}

}  // namespace persymm
