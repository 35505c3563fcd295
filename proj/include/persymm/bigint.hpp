#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace persymm {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(long e) {
  BigInt r = 1;
  return r << e;
}

}  // namespace persymm
