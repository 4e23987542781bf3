#pragma once

#include <utility>
#include <vector>

#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"

namespace horoclif {

// Membership in the group-with-zero generated by invertible paravectors:
// x * conj(x) must be fully real and nonzero, and x V reverse(x) must stay a
// paravector for each basis paravector V in {1, i1, ..., in}. Zero is admitted
// (the monoid adjoins 0).
bool is_lipschitz(const Multivector& x, double tol = 1e-9);
bool is_lipschitz_or_zero(const Multivector& x, double tol = 1e-9);

// A pair over Cl(0,n). Used both for validated two-component spinors and for
// plain tangent/coefficient pairs; make_spinor is the validating entry point.
struct Spinor {
  Multivector xi, eta;
  int n() const { return xi.n(); }
};

// Validates: matching signatures with p = 0, components in the Lipschitz
// monoid, not both zero, xi*conj(eta) a paravector. Throws InvalidSpinor.
Spinor make_spinor(const Multivector& xi, const Multivector& eta);
void check_spinor(const Spinor& k);

Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a);
Spinor operator*(const Spinor& a, double s);
Spinor operator*(double s, const Spinor& a);
// Componentwise right multiplication (xi*m, eta*m).
Spinor operator*(const Spinor& a, const Multivector& m);

// A point of the paravector sphere: a paravector or the point at infinity.
struct ParavectorPoint {
  bool infinite = false;
  Multivector value;  // valid when finite

  static ParavectorPoint inf(int n_dims);
  static ParavectorPoint finite(const Multivector& v);
};

bool points_equal(const ParavectorPoint& a, const ParavectorPoint& b, double tol = 1e-9);

// xi * eta^{-1}, or infinity when eta = 0.
ParavectorPoint ratio(const Spinor& k);

// {D1, D2} = reverse(x1) y2 - reverse(y1) x2.
Multivector bracket(const Spinor& a, const Spinor& b);

// <D1, D2> = conj(x1) x2 + conj(y1) y2.
Multivector hermitian_form(const Spinor& a, const Spinor& b);

// (D1 | D2) = Re <D1, D2>.
double inner_product(const Spinor& a, const Spinor& b);

// |k|^2 = (k | k).
double norm2(const Spinor& k);

// D-check = (y', -x'). Satisfies {k, check(k)} = -|k|^2 and check^2 = -id.
Spinor complement(const Spinor& k);

// Coefficients (x, y) with (a, b) = k x + check(k) y.
std::pair<Multivector, Multivector> decompose(const Spinor& k, const Spinor& ab);

// z = xi + i_{n+1} eta, an element of Cl(0, n+1).
Multivector cayley_lift(const Spinor& k);

// Split z over Cl(0, n+1) into (u, v) over Cl(0, n) with z = u + i_{n+1} v.
std::pair<Multivector, Multivector> cayley_split(const Multivector& z);

// Pair components of conj(z1) * z2; equals (hermitian_form, bracket).
std::pair<Multivector, Multivector> cayley_embed(const Spinor& k1, const Spinor& k2);

// Product of 1..n+1 standard-normal invertible paravectors (norms below 1e-3
// rejected), so membership holds by construction.
Multivector random_paravector(int n_dims, Rng& rng);
Multivector random_invertible_paravector(int n_dims, Rng& rng);
Multivector random_lipschitz(int n_dims, Rng& rng);
Spinor random_spinor(int n_dims, Rng& rng);

}  // namespace horoclif
