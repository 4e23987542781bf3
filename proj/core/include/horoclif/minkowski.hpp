#pragma once

#include <vector>

#include "horoclif/matrix.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/spinor.hpp"

namespace horoclif {

// Point of the (1, n+2) signature space in coordinates (T, Z; X0..Xn), with a
// lossless dual representation as the 2x2 matrix (1/2)[[T+Z, X], [conj(X), T-Z]].
struct MinkowskiPoint {
  double T = 0.0;
  double Z = 0.0;
  std::vector<double> X;  // n+1 entries

  int n() const { return static_cast<int>(X.size()) - 1; }
};

MinkowskiPoint operator+(const MinkowskiPoint& a, const MinkowskiPoint& b);
MinkowskiPoint operator-(const MinkowskiPoint& a, const MinkowskiPoint& b);
MinkowskiPoint operator*(const MinkowskiPoint& a, double s);
MinkowskiPoint operator*(double s, const MinkowskiPoint& a);

// Flattened (T, Z, X0..Xn), the coordinate vector in R^{n+3}.
std::vector<double> coords(const MinkowskiPoint& p);
double euclidean_norm(const MinkowskiPoint& p);

CliffordMatrix to_matrix(const MinkowskiPoint& p);

// Checks the entries form a conjugate-symmetric paravector matrix; throws
// DomainError otherwise.
MinkowskiPoint from_matrix(const CliffordMatrix& m);

// phi_1: outer product k k-dagger. Lands on the positive light cone.
MinkowskiPoint basepoint(const Spinor& k);

// Derivative of the outer product at k in direction v: k v-dagger + v k-dagger.
// Extracts (T, Z; X) from the scalar/paravector parts; tangency of v is the
// caller's concern.
MinkowskiPoint dphi1(const Spinor& k, const Spinor& v);

// Computed from the matrix entries; equals T1 T2 - Z1 Z2 - X1.X2.
double minkowski_inner(const MinkowskiPoint& p, const MinkowskiPoint& q);
// T1 T2 + Z1 Z2 + X1.X2, also from the matrix entries.
double euclidean_inner(const MinkowskiPoint& p, const MinkowskiPoint& q);

bool on_light_cone(const MinkowskiPoint& p, double tol = 1e-9);

// Null base point plus n mutually orthogonal tangent flag vectors.
struct Multiflag {
  MinkowskiPoint base;
  std::vector<MinkowskiPoint> vectors;
};

// Base phi_1(k), vectors dphi1(k, check(k) i_j) for j = 1..n.
Multiflag multiflag(const Spinor& k);

// Base on the cone with T > 0, vectors pairwise Minkowski-orthogonal,
// {base, vectors} linearly independent. Throws DomainError.
void check_multiflag(const Multiflag& mf, double tol = 1e-9);

// Conjugation action S -> A S A-dagger on points, applied to base and vectors
// alike for multiflags. Preserves Minkowski inner products for SL matrices.
MinkowskiPoint act_minkowski(const CliffordMatrix& A, const MinkowskiPoint& p);
Multiflag act_multiflag(const CliffordMatrix& A, const Multiflag& mf);

// Boundary ray normalized to T = 1, plus n+1 mutually orthogonal tangent-class
// representatives (zero-T lifts), all of Minkowski norm K = -4 T0^2.
struct DecoratedIdealPoint {
  MinkowskiPoint ray;
  std::vector<MinkowskiPoint> frame;
  double K = 0.0;
};

// Rescales flag vectors to Minkowski norm -4 T0^2, completes the remaining
// orthogonal frame direction with a fixed orientation convention (the one the
// derivative images realize), and records ray and scale.
DecoratedIdealPoint to_decorated_ideal(const Multiflag& mf);

// Recovers T0 from K and returns the flag part of the frame.
Multiflag from_decorated_ideal(const DecoratedIdealPoint& dip);

// True iff each pair of flag vectors spans the same oriented 2-plane through
// the common base ray: the projection of one onto span{base, other} must leave
// residual < tol with a positive coefficient on the non-base direction.
// Throws DomainError when the base rays differ.
bool flags_equal(const Multiflag& a, const Multiflag& b, double tol = 1e-8);

}  // namespace horoclif
