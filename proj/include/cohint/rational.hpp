#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cohint {

// Exact scalar types used throughout the engine. All linear algebra is over
// arbitrary-precision rationals; lattice data (cocharacters, weights, Weyl
// matrices) stays integral.
using Q = mpq_class;
using Z = long long;

using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

inline Q q_of(Z n) { return Q(static_cast<long>(n)); }

inline std::string to_string(const Q& q) {
  std::string s = q.get_str();
  return s;
}

}  // namespace cohint
