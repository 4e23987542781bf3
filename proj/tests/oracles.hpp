// Independent reference implementations used only by the tests. These follow
// the definitions directly (generator lists, bubble-sort reordering, long
// Taylor series) and deliberately share no code with the library paths they
// check.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "horoclif/multivector.hpp"

namespace oracle {

// Product of two basis blades as explicit generator sequences: concatenate,
// bubble-sort with a sign flip per transposition, then contract equal
// neighbours using the metric (0-based generator g squares to +1 iff g < p).
inline std::pair<int, std::uint32_t> blade_product(std::uint32_t a,
                                                   std::uint32_t b, int p) {
  std::vector<int> gens;
  for (int j = 0; j < 32; ++j)
    if (a >> j & 1u) gens.push_back(j);
  for (int j = 0; j < 32; ++j)
    if (b >> j & 1u) gens.push_back(j);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
      if (gens[i] > gens[i + 1]) {
        std::swap(gens[i], gens[i + 1]);
        sign = -sign;
        moved = true;
      }
    }
  }
  std::vector<int> reduced;
  for (int g : gens) {
    if (!reduced.empty() && reduced.back() == g) {
      reduced.pop_back();
      if (g >= p) sign = -sign;
    } else {
      reduced.push_back(g);
    }
  }
  std::uint32_t mask = 0;
  for (int g : reduced) mask |= 1u << g;
  return {sign, mask};
}

// Full geometric product assembled monomial by monomial from blade_product.
inline horoclif::Multivector product(const horoclif::Multivector& x,
                                     const horoclif::Multivector& y) {
  horoclif::Multivector out{x.sig};
  for (std::uint32_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0.0) continue;
      const auto [sign, mask] = blade_product(i, j, x.sig.p);
      out[mask] += sign * x[i] * y[j];
    }
  }
  return out;
}

// Reference exponential: halve until small, run a long Taylor series on the
// oracle product, square back up (again with the oracle product).
inline horoclif::Multivector exp_reference(const horoclif::Multivector& x) {
  horoclif::Multivector small = x;
  int halvings = 0;
  while (horoclif::frobenius(small) > 0.25 && halvings < 64) {
    small = small * 0.5;
    ++halvings;
  }
  horoclif::Multivector sum = horoclif::Multivector::scalar(x.sig, 1.0);
  horoclif::Multivector term = horoclif::Multivector::scalar(x.sig, 1.0);
  for (int k = 1; k <= 30; ++k) {
    term = product(term, small) * (1.0 / k);
    sum = sum + term;
  }
  for (int k = 0; k < halvings; ++k) sum = product(sum, sum);
  return sum;
}

// Involution signs straight from the degree rules.
inline int grade_sign(int degree) { return degree % 2 == 0 ? 1 : -1; }
inline int reverse_sign(int degree) {
  return (degree * (degree - 1) / 2) % 2 == 0 ? 1 : -1;
}
inline int conjugate_sign(int degree) {
  return (degree * (degree + 1) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace oracle
