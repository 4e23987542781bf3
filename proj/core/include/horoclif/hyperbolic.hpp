#pragma once

#include <vector>

#include "horoclif/matrix.hpp"
#include "horoclif/minkowski.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/spinor.hpp"

namespace horoclif {

// Ball model point (w; y0..yn), w^2 + |y|^2 <= 1, boundary allowed.
struct BallPoint {
  double w = 0.0;
  std::vector<double> y;  // n+1 entries

  int n() const { return static_cast<int>(y.size()) - 1; }
};

// Upper half-space point: Finite(z >= 0; x0..xn) or the point at infinity.
struct UpperHalfPoint {
  bool infinite = false;
  double z = 0.0;
  std::vector<double> x;  // n+1 entries when finite

  static UpperHalfPoint inf(int n);
  static UpperHalfPoint finite(double z, std::vector<double> x);
  int n() const { return static_cast<int>(x.size()) - 1; }
};

// Hyperboloid -> ball: (Z; X) / (1 + T). Requires unit Minkowski norm, T > 0.
BallPoint pi1(const MinkowskiPoint& p);
// Light cone -> unit sphere: (Z; X) / T. Image has unit Euclidean norm.
BallPoint pi1_boundary(const MinkowskiPoint& p);

// Ball -> upper half-space: (1 - |W|^2; 2 y0..2 yn) / (1 - 2w + |W|^2).
// The pole w = 1 maps to infinity.
UpperHalfPoint pi2(const BallPoint& W);
// Boundary sphere -> boundary of the half-space: y / (1 - w), pole to infinity.
UpperHalfPoint pi2_boundary(const BallPoint& W);

// pi2_boundary(pi1_boundary(basepoint(k))), checked against ratio(k).
UpperHalfPoint boundary_center(const Spinor& k);

enum class HorosphereKind { Plane, Sphere };

// Horizontal plane at height > 0, or a sphere tangent to the boundary, plus
// n mutually orthogonal unit paravector decorations.
struct DecoratedHorosphere {
  HorosphereKind kind = HorosphereKind::Plane;
  double height = 0.0;      // plane only
  Multivector center;       // sphere only, paravector
  double diameter = 0.0;    // sphere only
  std::vector<Multivector> decorations;
};

// eta = 0: plane of height |xi|^2, decorations xi i_j xi-reverse, normalized.
// eta != 0: sphere at xi eta^-1 of diameter |eta|^-2, decorations from
// eta-grade-involute i_j eta-conjugate, normalized.
DecoratedHorosphere horosphere(const Spinor& k);

// How the three group generators move a unit decoration vector:
// translations fix it, the inversion sends D to -conj(D), dilation-rotations
// send D to a D a-reverse; results renormalized.
Multivector transform_decoration(const SlGenerator& gen, const Multivector& D);

// Signed distance along the common perpendicular, via
// e^d = minkowski_inner(basepoint(k1), basepoint(k2)) / 2.
double horosphere_distance(const Spinor& k1, const Spinor& k2);

// Oriented boundary geodesic, from -> to, endpoints distinct.
struct Geodesic {
  ParavectorPoint from;
  ParavectorPoint to;
};

// Throws DomainError when the endpoints coincide.
Geodesic make_geodesic(const ParavectorPoint& from, const ParavectorPoint& to);

// Boundary Mobius action on an upper half-space boundary point.
UpperHalfPoint mobius_boundary(const CliffordMatrix& A, const UpperHalfPoint& p);

UpperHalfPoint to_upper_half(const ParavectorPoint& p);
ParavectorPoint to_paravector_point(const UpperHalfPoint& p, int n);

}  // namespace horoclif
