#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace horoclif {

// Hard limit on generators (2^12 = 4096 coefficients). The effective cap can be
// lowered (never raised) with the environment variable HOROCLIF_DIM_CAP.
inline constexpr int kDimCapLimit = 12;

// Effective dimension cap, read from HOROCLIF_DIM_CAP once per process.
int dim_cap();

// Algebra signature: the first p generators square to +1, the remaining q to -1.
// Everything above the core arithmetic uses p = 0 (negative-definite metric).
struct Signature {
  int p = 0;
  int q = 0;
  int n() const { return p + q; }
  bool operator==(const Signature&) const = default;
};

// Dense real multivector. Coefficient index is a blade bitmask: bit j-1 set
// means generator i_j is present; degree of a blade = popcount of its mask.
struct Multivector {
  Signature sig;
  std::vector<double> c;  // size 2^(p+q)

  Multivector() : sig{0, 0}, c(1, 0.0) {}
  explicit Multivector(Signature s);

  static Multivector scalar(Signature s, double v);
  static Multivector generator(Signature s, int j);  // i_j, 1-based
  static Multivector blade(Signature s, uint32_t mask, double v = 1.0);

  int n() const { return sig.n(); }
  uint32_t size() const { return static_cast<uint32_t>(c.size()); }
  double operator[](uint32_t mask) const { return c[mask]; }
  double& operator[](uint32_t mask) { return c[mask]; }
  bool is_zero() const;
};

// Sign picked up when multiplying basis blades a*b (reordering transpositions
// plus metric signs from repeated generators). Result blade mask is a^b.
int blade_sign(uint32_t a, uint32_t b, Signature sig);

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(const Multivector& a, double s);
Multivector operator*(double s, const Multivector& a);
Multivector operator/(const Multivector& a, double s);
Multivector operator*(const Multivector& a, const Multivector& b);  // geometric product

Multivector geometric_product(const Multivector& a, const Multivector& b);

enum class Involution { Grade, Reverse, Conjugate };

Multivector involution(const Multivector& a, Involution kind);
Multivector grade_involution(const Multivector& a);  // x'
Multivector reverse(const Multivector& a);           // x*
Multivector conjugate(const Multivector& a);         // x-bar

// Scalar (degree-0) coefficient.
double real_part(const Multivector& a);

// N(a) = Re(a * conj(a)). For paravectors over a (0,n) signature this is
// V0^2 + sum Vj^2; for any multivector over (0,n) it equals the squared
// coefficient 2-norm.
double norm(const Multivector& a);

// a . b = Re(a * conj(b)), the symmetric real bilinear form polarizing N.
double dot(const Multivector& a, const Multivector& b);

// Coefficient 2-norm, used for residuals and magnitudes throughout.
double frobenius(const Multivector& a);

// exp(x). Uses the closed trig/hyperbolic form when x is homogeneous of a
// single degree with a real scalar square (sign of the square picks cos/sin
// vs cosh/sinh); otherwise a scaling-and-squaring Taylor series.
Multivector exponential(const Multivector& x);

// The scaling-and-squaring Taylor path, unconditionally (no closed forms).
Multivector exponential_series(const Multivector& x);

// a^{-1} = conj(a) / (a * conj(a)), defined only when a * conj(a) is a real
// nonzero scalar. Throws NonInvertible otherwise.
Multivector inverse(const Multivector& a);

Multivector grade_project(const Multivector& a, int degree);

// Residual outside degrees {0,1}, relative to max(1, |a|).
bool is_paravector(const Multivector& a, double tol = 1e-9);

// Paravector with components (V0, V1, ..., Vn) over Cl(0,n).
Multivector make_paravector(int n_dims, const std::vector<double>& comps);

// (V0, ..., Vn) of the degree <= 1 part.
std::vector<double> paravector_components(const Multivector& a);

// Relative comparison: |a - b| <= tol * max(1, |a|, |b|).
bool approx_equal(const Multivector& a, const Multivector& b, double tol = 1e-9);
double rel_residual(const Multivector& a, const Multivector& b);

// Debug rendering like "1 + 2*i1 - 0.5*i1i3".
std::string to_string(const Multivector& a);

}  // namespace horoclif
