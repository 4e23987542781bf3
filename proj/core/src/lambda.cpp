#include "horoclif/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "horoclif/errors.hpp"

namespace horoclif {

namespace {

constexpr double kConditioningFloor = 1e-3;

// Inverse with a magnitude floor on the operand.
Multivector guarded_inverse(const Multivector& m, double& cond) {
  const double mag = frobenius(m);
  cond = std::min(cond, mag);
  if (mag < kConditioningFloor)
    throw Degenerate("inverted quantity below the conditioning threshold", mag);
  return inverse(m);
}

}  // namespace

Multivector lambda_length(const Spinor& k1, const Spinor& k2) {
  return bracket(k1, k2);
}

LambdaMatrix lambda_matrix(const std::vector<Spinor>& ks) {
  LambdaMatrix lm;
  lm.spinors = ks;
  const std::size_t m = ks.size();
  lm.lambda.assign(m, std::vector<Multivector>());
  for (std::size_t i = 0; i < m; ++i) {
    lm.lambda[i].reserve(m);
    for (std::size_t j = 0; j < m; ++j) lm.lambda[i].push_back(bracket(ks[i], ks[j]));
  }
  return lm;
}

QuasiResult quasideterminant(const CliffordMatrix& A, int j, int k) {
  if (j < 1 || j > 2 || k < 1 || k > 2)
    throw DomainError("quasideterminant index out of range", 0.0);
  QuasiResult r;
  r.conditioning = std::numeric_limits<double>::infinity();
  if (j == 1 && k == 1)
    r.value = A.a - A.b * guarded_inverse(A.d, r.conditioning) * A.c;
  else if (j == 1 && k == 2)
    r.value = A.b - A.a * guarded_inverse(A.c, r.conditioning) * A.d;
  else if (j == 2 && k == 1)
    r.value = A.c - A.d * guarded_inverse(A.b, r.conditioning) * A.a;
  else
    r.value = A.d - A.c * guarded_inverse(A.a, r.conditioning) * A.b;
  return r;
}

QuasiResult quasi_plucker(const std::vector<Spinor>& cols, int l, int j, int k) {
  const int m = static_cast<int>(cols.size());
  if (l < 1 || l > m || j < 1 || j > m || k < 1 || k > m)
    throw DomainError("quasi-Plucker index out of range", 0.0);
  const Spinor& cl = cols[static_cast<std::size_t>(l - 1)];
  const Spinor& cj = cols[static_cast<std::size_t>(j - 1)];
  const Spinor& ck = cols[static_cast<std::size_t>(k - 1)];

  QuasiResult r;
  r.conditioning = std::numeric_limits<double>::infinity();

  // Bracket form.
  const Multivector d_kl = bracket(ck, cl);
  const Multivector d_kj = bracket(ck, cj);
  r.value = guarded_inverse(d_kl, r.conditioning) * d_kj;

  // Quasideterminant form, s = 1: rows (xi), pivot column k.
  const Multivector ek_inv = guarded_inverse(ck.eta, r.conditioning);
  const Multivector f1 = cl.xi - ck.xi * ek_inv * cl.eta;
  const Multivector g1 = cj.xi - ck.xi * ek_inv * cj.eta;
  const Multivector q1 = guarded_inverse(f1, r.conditioning) * g1;

  // s = 2: rows (eta), pivot column k.
  const Multivector xk_inv = guarded_inverse(ck.xi, r.conditioning);
  const Multivector f2 = cl.eta - ck.eta * xk_inv * cl.xi;
  const Multivector g2 = cj.eta - ck.eta * xk_inv * cj.xi;
  const Multivector q2 = guarded_inverse(f2, r.conditioning) * g2;

  const double scale = std::max({1.0, frobenius(r.value), frobenius(q1), frobenius(q2)});
  const double worst = std::max(frobenius(r.value - q1), frobenius(r.value - q2));
  if (worst > 1e-9 * scale)
    throw DomainError("quasi-Plucker forms disagree", worst / scale);
  return r;
}

double pair_conditioning(const std::vector<Spinor>& ks) {
  double cond = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j)
      cond = std::min(cond, frobenius(bracket(ks[i], ks[j])));
  return cond;
}

double ptolemy_residual(const Spinor& k1, const Spinor& k2, const Spinor& k3,
                        const Spinor& k4) {
  const double cond = pair_conditioning({k1, k2, k3, k4});
  if (cond < kConditioningFloor)
    throw Degenerate("lambda length below the conditioning threshold", cond);

  const Multivector l31 = bracket(k3, k1);
  const Multivector l23 = bracket(k2, k3);
  const Multivector l42 = bracket(k4, k2);
  const Multivector l14 = bracket(k1, k4);
  const Multivector l43 = bracket(k4, k3);
  const Multivector l24 = bracket(k2, k4);
  const Multivector l12 = bracket(k1, k2);

  const Multivector inv31 = inverse(l31);
  const Multivector t1 = inv31 * reverse(l23) * inverse(l42) * reverse(l14);
  const Multivector t2 = inv31 * reverse(l43) * inverse(l24) * reverse(l12);
  const Multivector lhs = t1 + t2;

  const double scale = std::max({1.0, frobenius(t1), frobenius(t2), frobenius(lhs)});
  return frobenius(lhs - Multivector::scalar(lhs.sig, 1.0)) / scale;
}

double skew_symmetry_residual(const Spinor& k1, const Spinor& k2, const Spinor& k3) {
  const double cond = pair_conditioning({k1, k2, k3});
  if (cond < kConditioningFloor)
    throw Degenerate("lambda length below the conditioning threshold", cond);
  const Multivector w =
      bracket(k1, k2) * inverse(bracket(k3, k2)) * bracket(k3, k1);
  const double scale = std::max(1.0, frobenius(w));
  return frobenius(w - reverse(w)) / scale;
}

double holonomy_residual(const Spinor& kk, const Spinor& kj, const Spinor& kl,
                         const Spinor& ke) {
  // Only the (l, j) bracket is inverted; the k = e endpoint case is a
  // legitimate degenerate of the relation itself (lambda_kk = 0), so the
  // other pairs are free to coincide.
  const double cond = frobenius(bracket(kl, kj));
  if (cond < kConditioningFloor)
    throw Degenerate("lambda length below the conditioning threshold", cond);
  const Multivector t1 = bracket(kk, kj) * inverse(bracket(kl, kj)) * bracket(kl, ke);
  const Multivector t2 = bracket(kk, kl) * inverse(bracket(kj, kl)) * bracket(kj, ke);
  const Multivector lhs = t1 + t2;
  const Multivector rhs = bracket(kk, ke);
  const double scale = std::max({1.0, frobenius(t1), frobenius(t2), frobenius(rhs)});
  return frobenius(lhs - rhs) / scale;
}

}  // namespace horoclif
