#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "persymm/distribution.hpp"
#include "persymm/oracle.hpp"
#include "persymm/shape.hpp"

// Solution counts R_q of the bilinear polynomial systems over F2[T]
// attached to a shape: unknowns Y_1..Y_q of degree < k, and one
// constraint polynomial family per persymmetric block (degree < rows)
// resp. per free-block row (degree 0), with equations
// sum_j Y_j * W_j = 0 per family. Two independent paths: the
// rank-distribution formula and brute-force tuple enumeration.

namespace persymm {

struct DivisibilityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EquationSystemSpec {
  StackedShape shape;
  int q = 1;

  struct ConstraintFamily {
    std::string name;
    int deg_bound;  // coefficients 0..deg_bound
  };

  // persymmetric block with r rows -> one family of degree <= r-1;
  // free block with r rows -> r families of degree 0
  std::vector<ConstraintFamily> families() const {
    static const char* names[] = {"Z", "U", "V", "W", "S", "R"};
    std::vector<ConstraintFamily> out;
    std::size_t n = 0;
    for (const auto& b : shape.blocks) {
      if (b.kind == BlockKind::Persymmetric) {
        out.push_back({n < 6 ? names[n] : "W" + std::to_string(n), b.rows - 1});
        ++n;
      } else {
        for (int r = 0; r < b.rows; ++r) {
          out.push_back({n < 6 ? names[n] : "W" + std::to_string(n), 0});
          ++n;
        }
      }
    }
    return out;
  }

  // one bit per polynomial coefficient over all Y_j and all family members
  int coeff_bits() const { return q * (shape.cols + shape.total_rows()); }
};

// R_q = 2^E * sum_i Gamma_i * 2^(-iq) with E = (k + total_rows)q - #params.
// Computed over a common denominator; non-divisibility means the supplied
// distribution cannot belong to the shape.
inline BigInt count_solutions(const EquationSystemSpec& spec, const RankDistribution& dist) {
  const int q = spec.q;
  if (q < 1) throw std::invalid_argument("count_solutions: q must be >= 1");
  const long E = static_cast<long>(spec.shape.cols + spec.shape.total_rows()) * q -
                 spec.shape.free_param_count();
  long M = 0;
  for (std::size_t i = 0; i < dist.counts.size(); ++i)
    M = std::max(M, static_cast<long>(i) * q - E);
  BigInt num = 0;
  for (std::size_t i = 0; i < dist.counts.size(); ++i)
    num += dist.counts[i] * pow2(M + E - static_cast<long>(i) * q);
  if (M > 0 && (num & (pow2(M) - 1)) != 0)
    throw DivisibilityViolation("count_solutions: sum_i Gamma_i*2^(E-iq) is not an integer for " +
                                dist.shape + ", q=" + std::to_string(q));
  return num >> M;
}

namespace detail {

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (a) {
    const int s = __builtin_ctzll(a);
    r ^= b << s;
    a &= a - 1;
  }
  return r;
}

struct TupleLayout {
  int q, k;
  std::vector<int> fam_width;   // deg_bound + 1 per family
  std::vector<int> fam_offset;  // first bit of family f's member j=0
  int total_bits;

  explicit TupleLayout(const EquationSystemSpec& spec) : q(spec.q), k(spec.shape.cols) {
    int off = q * k;  // Y_1..Y_q first
    for (const auto& f : spec.families()) {
      fam_width.push_back(f.deg_bound + 1);
      fam_offset.push_back(off);
      off += q * (f.deg_bound + 1);
    }
    total_bits = off;
  }
};

inline std::uint64_t count_tuples_range(const TupleLayout& lay, std::uint64_t lo,
                                        std::uint64_t hi) {
  const std::uint64_t ymask = lay.k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lay.k) - 1;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> y(lay.q);
  for (std::uint64_t state = lo; state < hi; ++state) {
    for (int j = 0; j < lay.q; ++j) y[j] = (state >> (j * lay.k)) & ymask;
    bool ok = true;
    for (std::size_t f = 0; f < lay.fam_width.size() && ok; ++f) {
      const int w = lay.fam_width[f];
      const std::uint64_t wmask = (std::uint64_t{1} << w) - 1;
      std::uint64_t acc = 0;
      for (int j = 0; j < lay.q; ++j)
        acc ^= clmul(y[j], (state >> (lay.fam_offset[f] + j * w)) & wmask);
      ok = acc == 0;
    }
    count += ok;
  }
  return count;
}

}  // namespace detail

inline BigInt oracle_count_solutions(const EquationSystemSpec& spec,
                                     const EnumerationBudget& budget = {}) {
  if (spec.q < 1) throw std::invalid_argument("oracle_count_solutions: q must be >= 1");
  const detail::TupleLayout lay(spec);
  if (lay.total_bits > 62 ||
      (std::uint64_t{1} << lay.total_bits) > budget.max_states)
    throw BudgetExceeded("tuple space 2^" + std::to_string(lay.total_bits) + " exceeds budget");
  const std::uint64_t states = std::uint64_t{1} << lay.total_bits;

  int workers = budget.workers > 0 ? budget.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  int chunk_bits = std::min(budget.chunk_bits, lay.total_bits);
  if ((std::uint64_t{1} << chunk_bits) < static_cast<std::uint64_t>(workers))
    chunk_bits = std::min(lay.total_bits, 12);
  const std::uint64_t nchunks = std::uint64_t{1} << chunk_bits;
  const std::uint64_t chunk_size = states >> chunk_bits;

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = static_cast<std::uint64_t>(w); c < nchunks;
           c += static_cast<std::uint64_t>(workers))
        partial[w] += detail::count_tuples_range(lay, c * chunk_size, (c + 1) * chunk_size);
    });
  }
  for (auto& t : pool) t.join();

  BigInt total = 0;
  for (auto p : partial) total += p;
  return total;
}

// Coefficient-level view: substituting Y_j = x_a + x_{a+1}T + ... turns
// each polynomial equation into one quadratic equation over F2 per
// coefficient of T. Variables are numbered Y-coefficients first, then the
// constraint families in order.
inline std::vector<std::string> quadratic_system_expansion(const EquationSystemSpec& spec) {
  const detail::TupleLayout lay(spec);
  const auto fams = spec.families();
  std::vector<std::string> eqs;
  int max_c = 0;
  for (int w : lay.fam_width) max_c = std::max(max_c, lay.k - 1 + w - 1);
  for (int c = 0; c <= max_c; ++c) {
    for (std::size_t f = 0; f < fams.size(); ++f) {
      const int w = lay.fam_width[f];
      if (c > lay.k - 1 + w - 1) continue;
      std::string eq;
      for (int j = 0; j < lay.q; ++j) {
        for (int a = 0; a < lay.k; ++a) {
          const int b = c - a;
          if (b < 0 || b >= w) continue;
          if (!eq.empty()) eq += " + ";
          eq += "x" + std::to_string(j * lay.k + a + 1) + "*x" +
                std::to_string(lay.fam_offset[f] + j * w + b + 1);
        }
      }
      eqs.push_back(eq + " = 0");
    }
  }
  return eqs;
}

}  // namespace persymm
