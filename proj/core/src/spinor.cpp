#include "horoclif/spinor.hpp"

#include <bit>
#include <cmath>

#include "horoclif/errors.hpp"

namespace horoclif {

static double nonreal_residual(const Multivector& a) {
  double s = 0.0;
  for (uint32_t i = 1; i < a.size(); ++i) s += a.c[i] * a.c[i];
  return std::sqrt(s);
}

bool is_lipschitz(const Multivector& x, double tol) {
  if (x.sig.p != 0) return false;
  Multivector xx = x * conjugate(x);
  double mag = frobenius(xx);
  if (nonreal_residual(xx) > tol * std::max(1.0, mag)) return false;
  if (std::abs(real_part(xx)) <= 1e-12) return false;
  Multivector xr = reverse(x);
  // sigma(x) V = x V reverse(x) must keep each basis paravector a paravector.
  for (int j = 0; j <= x.n(); ++j) {
    Multivector v = j == 0 ? Multivector::scalar(x.sig, 1.0)
                           : Multivector::generator(x.sig, j);
    if (!is_paravector(x * v * xr, tol)) return false;
  }
  return true;
}

bool is_lipschitz_or_zero(const Multivector& x, double tol) {
  return x.is_zero() || is_lipschitz(x, tol);
}

Spinor make_spinor(const Multivector& xi, const Multivector& eta) {
  Spinor k{xi, eta};
  check_spinor(k);
  return k;
}

void check_spinor(const Spinor& k) {
  if (!(k.xi.sig == k.eta.sig)) throw InvalidSpinor("component signature mismatch", 0.0);
  if (k.xi.sig.p != 0) throw InvalidSpinor("signature must be (0,n)", k.xi.sig.p);
  if (k.xi.is_zero() && k.eta.is_zero()) throw InvalidSpinor("both components zero", 0.0);
  if (!is_lipschitz_or_zero(k.xi)) throw InvalidSpinor("xi not in the Lipschitz monoid", 0.0);
  if (!is_lipschitz_or_zero(k.eta)) throw InvalidSpinor("eta not in the Lipschitz monoid", 0.0);
  Multivector cross = k.xi * conjugate(k.eta);
  if (!is_paravector(cross)) {
    double resid = frobenius(cross - grade_project(cross, 0) - grade_project(cross, 1));
    throw InvalidSpinor("xi*conj(eta) not paravector", resid);
  }
}

Spinor operator+(const Spinor& a, const Spinor& b) { return {a.xi + b.xi, a.eta + b.eta}; }
Spinor operator-(const Spinor& a, const Spinor& b) { return {a.xi - b.xi, a.eta - b.eta}; }
Spinor operator-(const Spinor& a) { return {-a.xi, -a.eta}; }
Spinor operator*(const Spinor& a, double s) { return {a.xi * s, a.eta * s}; }
Spinor operator*(double s, const Spinor& a) { return a * s; }
Spinor operator*(const Spinor& a, const Multivector& m) { return {a.xi * m, a.eta * m}; }

ParavectorPoint ParavectorPoint::inf(int n_dims) {
  return {true, Multivector(Signature{0, n_dims})};
}

ParavectorPoint ParavectorPoint::finite(const Multivector& v) { return {false, v}; }

bool points_equal(const ParavectorPoint& a, const ParavectorPoint& b, double tol) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return approx_equal(a.value, b.value, tol);
}

ParavectorPoint ratio(const Spinor& k) {
  if (frobenius(k.eta) <= 1e-12) return ParavectorPoint::inf(k.n());
  return ParavectorPoint::finite(k.xi * inverse(k.eta));
}

Multivector bracket(const Spinor& a, const Spinor& b) {
  return reverse(a.xi) * b.eta - reverse(a.eta) * b.xi;
}

Multivector hermitian_form(const Spinor& a, const Spinor& b) {
  return conjugate(a.xi) * b.xi + conjugate(a.eta) * b.eta;
}

double inner_product(const Spinor& a, const Spinor& b) {
  return real_part(hermitian_form(a, b));
}

double norm2(const Spinor& k) { return inner_product(k, k); }

Spinor complement(const Spinor& k) {
  return {grade_involution(k.eta), -grade_involution(k.xi)};
}

std::pair<Multivector, Multivector> decompose(const Spinor& k, const Spinor& ab) {
  double n2 = norm2(k);
  if (n2 <= 1e-12) throw DomainError("decompose needs a nonzero spinor", n2);
  Multivector x = (conjugate(k.xi) * ab.xi + conjugate(k.eta) * ab.eta) / n2;
  Multivector y = (reverse(k.eta) * ab.xi - reverse(k.xi) * ab.eta) / n2;
  return {x, y};
}

Multivector cayley_lift(const Spinor& k) {
  int n_dims = k.n();
  if (n_dims + 1 > dim_cap()) throw DomainError("dimension cap exceeded", n_dims + 1);
  Signature up{0, n_dims + 1};
  Multivector z(up);
  uint32_t hi = 1u << n_dims;  // generator i_{n+1}
  for (uint32_t i = 0; i < k.xi.size(); ++i) {
    z.c[i] = k.xi.c[i];
    // i_{n+1} e_I = (-1)^{|I|} e_{I + {n+1}} since i_{n+1} commutes past |I|
    // smaller generators with one sign flip each.
    int d = std::popcount(i);
    z.c[i | hi] = ((d & 1) ? -1.0 : 1.0) * k.eta.c[i];
  }
  return z;
}

std::pair<Multivector, Multivector> cayley_split(const Multivector& z) {
  int n_dims = z.n() - 1;
  if (n_dims < 0) throw DomainError("cayley_split needs at least one generator");
  Signature down{0, n_dims};
  Multivector u(down), v(down);
  uint32_t hi = 1u << n_dims;
  for (uint32_t i = 0; i < u.size(); ++i) {
    u.c[i] = z.c[i];
    int d = std::popcount(i);
    v.c[i] = ((d & 1) ? -1.0 : 1.0) * z.c[i | hi];
  }
  return {u, v};
}

std::pair<Multivector, Multivector> cayley_embed(const Spinor& k1, const Spinor& k2) {
  Multivector z1 = cayley_lift(k1);
  Multivector z2 = cayley_lift(k2);
  return cayley_split(conjugate(z1) * z2);
}

Multivector random_paravector(int n_dims, Rng& rng) {
  std::vector<double> comps(n_dims + 1);
  for (double& v : comps) v = rng.normal();
  return make_paravector(n_dims, comps);
}

Multivector random_invertible_paravector(int n_dims, Rng& rng) {
  for (;;) {
    Multivector v = random_paravector(n_dims, rng);
    if (norm(v) >= 1e-3) return v;
  }
}

Multivector random_lipschitz(int n_dims, Rng& rng) {
  int k = rng.uniform_int(1, n_dims + 1);
  Multivector r = Multivector::scalar(Signature{0, n_dims}, 1.0);
  for (int i = 0; i < k; ++i) r = r * random_invertible_paravector(n_dims, rng);
  return r;
}

Spinor random_spinor(int n_dims, Rng& rng) {
  Multivector s = random_lipschitz(n_dims, rng);
  Multivector v = random_paravector(n_dims, rng);
  // (V s, s) or (s, V s): the cross product xi*conj(eta) is V*N(s) or N(s)*conj(V).
  if (rng.uniform_int(0, 1) == 0) return {v * s, s};
  return {s, v * s};
}

}  // namespace horoclif
