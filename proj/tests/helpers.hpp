#pragma once

#include <algorithm>
#include <cmath>

#include "horoclif/multivector.hpp"

namespace testutil {

inline double rel_diff(const horoclif::Multivector& a,
                       const horoclif::Multivector& b) {
  return horoclif::frobenius(a - b) /
         std::max({1.0, horoclif::frobenius(a), horoclif::frobenius(b)});
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testutil
