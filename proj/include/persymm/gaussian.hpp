#pragma once

#include "persymm/bigint.hpp"

namespace persymm {

// Gaussian binomial [n,d] at q=2: the number of d-dimensional subspaces
// of F2^n. Pascal recurrence [n,d] = [n-1,d-1] + 2^d*[n-1,d].
inline BigInt gaussian_binomial(int n, int d) {
  if (n < 0) throw std::invalid_argument("gaussian_binomial: n < 0");
  if (d < 0 || d > n) return 0;
  std::vector<BigInt> row{1};  // row m holds [m,0..m]
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1);
    next[0] = 1;
    next[m] = 1;
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + (row[j] << j);
    row = std::move(next);
  }
  return row[d];
}

}  // namespace persymm
