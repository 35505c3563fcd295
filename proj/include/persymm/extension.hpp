#pragma once

#include <algorithm>
#include <stdexcept>

#include "persymm/distribution.hpp"
#include "persymm/gaussian.hpp"

namespace persymm {

// Distribution of a shape after appending t unconstrained rows, from the
// distribution of the base shape with k columns:
//
//   Gamma'_i = sum over d of [t,d] * 2^((i-d)(t-d))
//              * prod_{a=0..d-1} (2^k - 2^(i-d+a)) * Gamma_{i-d}
//
// d counts how much the new rows raise the rank. The d-th product is the
// number of ways the new rows leave the old row space; empty products are 1
// and Gamma with negative index is 0. The t=1 case is the familiar
// 2^i*Gamma_i + (2^k - 2^(i-1))*Gamma_{i-1} two-term rule.
inline RankDistribution extend_free_rows(const RankDistribution& base, int t, int k) {
  if (t < 0) throw std::invalid_argument("extend_free_rows: t < 0");
  if (t == 0) return base;
  const int base_max = static_cast<int>(base.counts.size()) - 1;
  const int new_max = std::min(base_max + t, k);

  RankDistribution out;
  out.source = DistSource::Extension;
  out.counts.assign(static_cast<std::size_t>(new_max) + 1, 0);
  for (int i = 0; i <= new_max; ++i) {
    BigInt acc = 0;
    for (int d = 0; d <= std::min(t, i); ++d) {
      const int j = i - d;  // base rank
      if (j > base_max) continue;
      BigInt prod = 1;  // j+a < i <= k, so every factor is >= 0
      for (int a = 0; a < d; ++a) prod *= pow2(k) - pow2(j + a);
      acc += gaussian_binomial(t, d) * pow2(static_cast<long>(j) * (t - d)) * prod *
             base.counts[j];
    }
    out.counts[i] = acc;
  }
  return out;
}

}  // namespace persymm
