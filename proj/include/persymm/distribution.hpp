#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "persymm/bigint.hpp"
#include "persymm/shape.hpp"

namespace persymm {

enum class DistSource { Oracle, ClosedForm, Extension, Reduction };

inline const char* to_string(DistSource s) {
  switch (s) {
    case DistSource::Oracle: return "oracle";
    case DistSource::ClosedForm: return "closed-form";
    case DistSource::Extension: return "extension";
    case DistSource::Reduction: return "reduction";
  }
  return "?";
}

// Exact counts Gamma_0..Gamma_maxrank for one shape. The total always
// equals 2^free_param_count; that identity is asserted at construction.
struct RankDistribution {
  std::string shape;
  std::vector<BigInt> counts;
  DistSource source = DistSource::Oracle;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
  }

  void check(int free_param_count) const {
    if (counts.empty() || counts[0] != 1)
      throw std::logic_error("RankDistribution: Gamma_0 != 1 for " + shape);
    for (const auto& c : counts)
      if (c < 0) throw std::logic_error("RankDistribution: negative count for " + shape);
    if (total() != pow2(free_param_count))
      throw std::logic_error("RankDistribution: checksum != 2^" +
                             std::to_string(free_param_count) + " for " + shape);
  }
};

}  // namespace persymm
