#include "horoclif/hyperbolic.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

#include "horoclif/errors.hpp"

namespace horoclif {

namespace {

Multivector normalize(const Multivector& v) {
  const double len = frobenius(v);
  return v * (1.0 / len);
}

double ball_norm2(const BallPoint& W) {
  double s = W.w * W.w;
  for (double t : W.y) s += t * t;
  return s;
}

}  // namespace

UpperHalfPoint UpperHalfPoint::inf(int n) {
  UpperHalfPoint p;
  p.infinite = true;
  p.x.assign(static_cast<std::size_t>(n) + 1, 0.0);
  return p;
}

UpperHalfPoint UpperHalfPoint::finite(double z, std::vector<double> x) {
  UpperHalfPoint p;
  p.z = z;
  p.x = std::move(x);
  return p;
}

BallPoint pi1(const MinkowskiPoint& p) {
  const double resid = std::abs(minkowski_inner(p, p) - 1.0);
  if (resid > 1e-9 * std::max(1.0, euclidean_inner(p, p)) || p.T <= 0.0)
    throw DomainError("point not on the upper hyperboloid sheet", resid);
  BallPoint b;
  const double f = 1.0 / (1.0 + p.T);
  b.w = p.Z * f;
  b.y.resize(p.X.size());
  for (std::size_t i = 0; i < p.X.size(); ++i) b.y[i] = p.X[i] * f;
  return b;
}

BallPoint pi1_boundary(const MinkowskiPoint& p) {
  const double resid = std::abs(minkowski_inner(p, p));
  if (resid > 1e-9 * std::max(1.0, euclidean_inner(p, p)) || p.T <= 0.0)
    throw DomainError("point not on the positive light cone", resid);
  BallPoint b;
  const double f = 1.0 / p.T;
  b.w = p.Z * f;
  b.y.resize(p.X.size());
  for (std::size_t i = 0; i < p.X.size(); ++i) b.y[i] = p.X[i] * f;
  return b;
}

UpperHalfPoint pi2(const BallPoint& W) {
  const double n2 = ball_norm2(W);
  if (n2 > 1.0 + 1e-9)
    throw DomainError("point outside the closed ball", n2 - 1.0);
  const double den = 1.0 - 2.0 * W.w + n2;
  if (std::abs(den) <= 1e-12) return UpperHalfPoint::inf(W.n());
  UpperHalfPoint u;
  u.z = (1.0 - n2) / den;
  u.x.resize(W.y.size());
  for (std::size_t i = 0; i < W.y.size(); ++i) u.x[i] = 2.0 * W.y[i] / den;
  return u;
}

UpperHalfPoint pi2_boundary(const BallPoint& W) {
  const double n2 = ball_norm2(W);
  if (std::abs(n2 - 1.0) > 1e-9)
    throw DomainError("point not on the boundary sphere", std::abs(n2 - 1.0));
  if (std::abs(1.0 - W.w) <= 1e-12) return UpperHalfPoint::inf(W.n());
  UpperHalfPoint u;
  u.z = 0.0;
  u.x.resize(W.y.size());
  for (std::size_t i = 0; i < W.y.size(); ++i) u.x[i] = W.y[i] / (1.0 - W.w);
  return u;
}

UpperHalfPoint to_upper_half(const ParavectorPoint& p) {
  if (p.infinite) return UpperHalfPoint::inf(p.value.n());
  return UpperHalfPoint::finite(0.0, paravector_components(p.value));
}

ParavectorPoint to_paravector_point(const UpperHalfPoint& p, int n) {
  if (p.infinite) return ParavectorPoint::inf(n);
  return ParavectorPoint::finite(make_paravector(n, p.x));
}

UpperHalfPoint boundary_center(const Spinor& k) {
  const UpperHalfPoint via_cone = pi2_boundary(pi1_boundary(basepoint(k)));
  const ParavectorPoint direct = ratio(k);
  if (via_cone.infinite != direct.infinite)
    throw DomainError("boundary pipeline disagrees with the component ratio", 1.0);
  if (!via_cone.infinite) {
    const Multivector diff =
        make_paravector(k.n(), via_cone.x) - direct.value;
    const double resid = frobenius(diff) / std::max(1.0, frobenius(direct.value));
    if (resid > 1e-9)
      throw DomainError("boundary pipeline disagrees with the component ratio", resid);
  }
  return via_cone;
}

DecoratedHorosphere horosphere(const Spinor& k) {
  DecoratedHorosphere h;
  const int n = k.n();
  const Signature sig = k.xi.sig;
  if (frobenius(k.eta) <= 1e-12) {
    h.kind = HorosphereKind::Plane;
    h.height = norm(k.xi);
    for (int j = 1; j <= n; ++j) {
      const Multivector ij = Multivector::generator(sig, j);
      h.decorations.push_back(normalize(k.xi * ij * reverse(k.xi)));
    }
  } else {
    h.kind = HorosphereKind::Sphere;
    const Multivector c = k.xi * inverse(k.eta);
    h.center = grade_project(c, 0) + grade_project(c, 1);
    h.diameter = 1.0 / norm(k.eta);
    const Multivector gi = grade_involution(k.eta);
    const Multivector cj = conjugate(k.eta);
    for (int j = 1; j <= n; ++j) {
      const Multivector ij = Multivector::generator(sig, j);
      h.decorations.push_back(normalize(gi * ij * cj));
    }
  }
  return h;
}

Multivector transform_decoration(const SlGenerator& gen, const Multivector& D) {
  switch (gen.kind) {
    case 1:
      return D;
    case 2:
      return normalize(conjugate(D) * -1.0);
    default:
      return normalize(gen.param * D * reverse(gen.param));
  }
}

double horosphere_distance(const Spinor& k1, const Spinor& k2) {
  if (points_equal(ratio(k1), ratio(k2)))
    throw SharedCenter("horospheres share a center", 0.0);
  const double inner = minkowski_inner(basepoint(k1), basepoint(k2));
  if (!(inner > 0.0))
    throw SharedCenter("horospheres share a center", inner);
  return std::log(0.5 * inner);
}

Geodesic make_geodesic(const ParavectorPoint& from, const ParavectorPoint& to) {
  if (points_equal(from, to))
    throw DomainError("geodesic endpoints coincide", 0.0);
  return Geodesic{from, to};
}

UpperHalfPoint mobius_boundary(const CliffordMatrix& A, const UpperHalfPoint& p) {
  return to_upper_half(mobius_apply(A, to_paravector_point(p, A.n())));
}

}  // namespace horoclif
