#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "persymm/distribution.hpp"
#include "persymm/gf2.hpp"
#include "persymm/shape.hpp"

// Ground-truth enumeration: walk all 2^free_param_count parameter
// assignments of a shape, rank each realized matrix, and tally the exact
// rank distribution. The parameter space is split by its top chunk_bits
// bits into disjoint ranges; workers tally private histograms that are
// merged by summation, so the result is independent of scheduling.

namespace persymm {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WidthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerationBudget {
  std::uint64_t max_states = std::uint64_t{1} << 34;
  int workers = 0;  // 0 = hardware concurrency
  int chunk_bits = 8;
  bool force = false;
};

namespace detail {

// Histogram of ranks over one contiguous state range. The first block's
// rows read only the low split_params bits of the state, the remaining
// rows only the bits above, so the upper rows are eliminated once per
// high-state and the inner loop only inserts the first block's rows into
// a copy of that basis.
inline void enumerate_range(const RealizePlan& plan, std::uint64_t lo, std::uint64_t hi,
                            int cols, std::uint64_t* hist) {
  const int nrows = static_cast<int>(plan.shifts.size());
  const std::uint64_t mask = plan.mask;
  const int* shifts = plan.shifts.data();
  const int split = plan.split_params;
  const int lrows = plan.split_rows;
  std::uint64_t hbasis[kMaxCols], basis[kMaxCols];
  std::uint64_t state = lo;
  while (state < hi) {
    const std::uint64_t high = split < 64 ? state >> split : 0;
    for (int b = 0; b < cols; ++b) hbasis[b] = 0;
    int hr = 0;
    for (int i = lrows; i < nrows; ++i) {
      std::uint64_t w = (state >> shifts[i]) & mask;  // depends on high bits only
      while (w) {
        int b = __builtin_ctzll(w);
        if (!hbasis[b]) {
          hbasis[b] = w;
          ++hr;
          break;
        }
        w ^= hbasis[b];
      }
    }
    std::uint64_t lim = hi;
    if (split < 64) lim = std::min(hi, (high + 1) << split);
    for (; state < lim; ++state) {
      for (int b = 0; b < cols; ++b) basis[b] = hbasis[b];
      int r = hr;
      for (int i = 0; i < lrows; ++i) {
        std::uint64_t w = (state >> shifts[i]) & mask;
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
      ++hist[r];
    }
  }
}

}  // namespace detail

inline RankDistribution enumerate_rank_distribution(const StackedShape& shape,
                                                    const EnumerationBudget& budget = {}) {
  const int nparams = shape.free_param_count();
  if (shape.cols > kMaxCols) throw WidthExceeded("shape wider than 64 columns");
  if (nparams > 63)
    throw BudgetExceeded("state space 2^" + std::to_string(nparams) + " cannot be enumerated");
  const std::uint64_t states = std::uint64_t{1} << nparams;
  if (!budget.force && states > budget.max_states)
    throw BudgetExceeded("state space 2^" + std::to_string(nparams) +
                         " exceeds budget (use force to override)");

  // block order does not affect the distribution; putting the smallest
  // block first minimizes the per-state work of the split-basis loop
  StackedShape enum_shape = shape;
  std::stable_sort(enum_shape.blocks.begin(), enum_shape.blocks.end(),
                   [](const BlockSpec& a, const BlockSpec& b) { return a.rows < b.rows; });
  const RealizePlan plan(enum_shape);
  const int maxr = shape.max_rank();
  int workers = budget.workers > 0 ? budget.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  int chunk_bits = std::min(budget.chunk_bits, nparams);
  if ((std::uint64_t{1} << chunk_bits) < static_cast<std::uint64_t>(workers))
    chunk_bits = std::min(nparams, 12);
  const std::uint64_t nchunks = std::uint64_t{1} << chunk_bits;
  const std::uint64_t chunk_size = states >> chunk_bits;

  std::vector<std::vector<std::uint64_t>> hists(
      workers, std::vector<std::uint64_t>(static_cast<std::size_t>(maxr) + 1, 0));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = static_cast<std::uint64_t>(w); c < nchunks;
           c += static_cast<std::uint64_t>(workers)) {
        detail::enumerate_range(plan, c * chunk_size, (c + 1) * chunk_size, shape.cols,
                                hists[w].data());
      }
    });
  }
  for (auto& t : pool) t.join();

  RankDistribution dist;
  dist.shape = canonical_string(shape);
  dist.source = DistSource::Oracle;
  dist.counts.assign(static_cast<std::size_t>(maxr) + 1, 0);
  for (const auto& h : hists)
    for (int i = 0; i <= maxr; ++i) dist.counts[i] += h[i];
  dist.check(nparams);
  return dist;
}

}  // namespace persymm
