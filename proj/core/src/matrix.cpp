#include "horoclif/matrix.hpp"

#include <cmath>

#include "horoclif/errors.hpp"

namespace horoclif {

Multivector pseudo_determinant(const CliffordMatrix& m) {
  return reverse(m.a) * m.d - reverse(m.c) * m.b;
}

CliffordMatrix identity_matrix(int n_dims) {
  Signature s{0, n_dims};
  return {Multivector::scalar(s, 1.0), Multivector(s), Multivector(s),
          Multivector::scalar(s, 1.0)};
}

CliffordMatrix matmul(const CliffordMatrix& A, const CliffordMatrix& B) {
  return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
          A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d};
}

CliffordMatrix dagger(const CliffordMatrix& m) {
  return {conjugate(m.a), conjugate(m.c), conjugate(m.b), conjugate(m.d)};
}

// The group's pairing conditions are a b*, c d*, c* a, d* b all paravectors.
// Rows therefore pair as x y* and columns as y* x; for an invertible Lipschitz
// partner the column form is equivalent to x conj(y) being a paravector, so
// columns are spinors in the usual sense.
static bool pairing_ok(const Multivector& x, const Multivector& y, bool column,
                       bool allow_zero, double* resid_out) {
  *resid_out = 0.0;
  if (x.is_zero() && y.is_zero()) return allow_zero;
  Multivector cross = column ? reverse(y) * x : x * reverse(y);
  Multivector junk = cross - grade_project(cross, 0) - grade_project(cross, 1);
  *resid_out = frobenius(junk);
  return is_paravector(cross);
}

void check_matrix(const CliffordMatrix& m, MatrixFlavor flavor) {
  const Multivector* entries[4] = {&m.a, &m.b, &m.c, &m.d};
  const char* names[4] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i)
    if (!is_lipschitz_or_zero(*entries[i]))
      throw InvalidMatrix(std::string("entry ") + names[i] + " not in the Lipschitz monoid", 0.0);

  bool allow_zero = flavor == MatrixFlavor::GLZ;
  struct { const Multivector *x, *y; bool column; const char* what; } pairs[4] = {
      {&m.a, &m.b, false, "row (a,b)"}, {&m.c, &m.d, false, "row (c,d)"},
      {&m.a, &m.c, true, "column (a,c)"}, {&m.b, &m.d, true, "column (b,d)"}};
  for (auto& pr : pairs) {
    double resid = 0.0;
    if (!pairing_ok(*pr.x, *pr.y, pr.column, allow_zero, &resid))
      throw InvalidMatrix(std::string(pr.what) + " fails the paravector pairing", resid);
  }

  // Residual tolerances are relative to the magnitude of the products that
  // feed the pseudo-determinant, so validation never fails from float error
  // on large-entry matrices while real violations stay O(scale).
  double scale = std::max(1.0, frobenius(m.a) * frobenius(m.d) + frobenius(m.c) * frobenius(m.b));
  Multivector pd = pseudo_determinant(m);
  Multivector nonscalar = pd - grade_project(pd, 0);
  double ns_resid = frobenius(nonscalar);
  if (ns_resid > 1e-9 * scale)
    throw InvalidMatrix("pseudo-determinant not a real scalar", ns_resid);
  double s = real_part(pd);
  switch (flavor) {
    case MatrixFlavor::GLZ:
      break;
    case MatrixFlavor::GL:
      if (std::abs(s) <= 1e-12) throw InvalidMatrix("pseudo-determinant is zero", std::abs(s));
      break;
    case MatrixFlavor::SL: {
      Signature sg = m.a.sig;
      Multivector one = Multivector::scalar(sg, 1.0);
      double r0 = frobenius(pd - one);
      if (r0 > 1e-9 * scale) throw InvalidMatrix("pseudo-determinant is not 1", r0);
      // variant identities of the unit pseudo-determinant
      double r1 = frobenius(m.a * reverse(m.d) - m.b * reverse(m.c) - one);
      double r2 = frobenius(m.d * reverse(m.a) - m.c * reverse(m.b) - one);
      double r3 = frobenius(reverse(m.d) * m.a - reverse(m.b) * m.c - one);
      double worst = std::max({r1, r2, r3});
      if (worst > 1e-9 * scale) throw InvalidMatrix("variant determinant identity violated", worst);
      break;
    }
  }
}

CliffordMatrix make_matrix(const Multivector& a, const Multivector& b,
                           const Multivector& c, const Multivector& d,
                           MatrixFlavor flavor) {
  CliffordMatrix m{a, b, c, d};
  check_matrix(m, flavor);
  return m;
}

static Multivector paravector_part(const Multivector& a) {
  return grade_project(a, 0) + grade_project(a, 1);
}

ParavectorPoint mobius_apply(const CliffordMatrix& A, const ParavectorPoint& v) {
  if (v.infinite) {
    if (frobenius(A.c) <= 1e-12) return ParavectorPoint::inf(A.n());
    return ParavectorPoint::finite(paravector_part(A.a * inverse(A.c)));
  }
  Multivector den = A.c * v.value + A.d;
  if (frobenius(den) <= 1e-12) return ParavectorPoint::inf(A.n());
  Multivector num = A.a * v.value + A.b;
  return ParavectorPoint::finite(paravector_part(num * inverse(den)));
}

Spinor act_on_spinor(const CliffordMatrix& A, const Spinor& k) {
  return {A.a * k.xi + A.b * k.eta, A.c * k.xi + A.d * k.eta};
}

CliffordMatrix parabolic_translation(const Spinor& k, const Multivector& V) {
  Signature s = k.xi.sig;
  Multivector one = Multivector::scalar(s, 1.0);
  Multivector xs = reverse(k.xi), es = reverse(k.eta);
  return {one - k.xi * V * es, k.xi * V * xs,
          -(k.eta * V * es), one + k.eta * V * xs};
}

CliffordMatrix sl_from_spinor(const Spinor& k) {
  double n2 = norm2(k);
  if (n2 <= 1e-12) throw DomainError("sl_from_spinor needs a nonzero spinor", n2);
  Spinor second = complement(k) * (-1.0 / n2);
  return {k.xi, second.xi, k.eta, second.eta};
}

CliffordMatrix sl_inverse(const CliffordMatrix& A) {
  return {reverse(A.d), -reverse(A.b), -reverse(A.c), reverse(A.a)};
}

CliffordMatrix generator_matrix(const SlGenerator& g, int n_dims) {
  Signature s{0, n_dims};
  Multivector one = Multivector::scalar(s, 1.0);
  Multivector zero(s);
  switch (g.kind) {
    case 1:
      return {one, g.param, zero, one};
    case 2:
      return {zero, -one, one, zero};
    case 3:
      return {g.param, zero, zero, inverse(reverse(g.param))};
    default:
      throw DomainError("unknown generator kind", g.kind);
  }
}

CliffordMatrix random_sl2(int n_dims, Rng& rng) {
  CliffordMatrix A = identity_matrix(n_dims);
  int len = rng.uniform_int(0, 8);
  for (int i = 0; i < len; ++i) {
    SlGenerator g;
    g.kind = rng.uniform_int(1, 3);
    if (g.kind == 1) {
      g.param = random_paravector(n_dims, rng);
    } else if (g.kind == 3) {
      // Unit-normalized Lipschitz rotation times a moderate dilation, so an
      // 8-letter word keeps entry magnitudes small enough that the exact
      // pseudo-determinant identities survive double rounding.
      Multivector a = random_lipschitz(n_dims, rng);
      double dil = std::exp2(rng.uniform(-1.0, 1.0));
      g.param = a * (dil / std::sqrt(norm(a)));
    } else {
      g.param = Multivector(Signature{0, n_dims});
    }
    A = matmul(A, generator_matrix(g, n_dims));
  }
  return A;
}

}  // namespace horoclif
