#include "horoclif/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "horoclif/errors.hpp"

namespace horoclif {

int dim_cap() {
  static const int cap = [] {
    const char* env = std::getenv("HOROCLIF_DIM_CAP");
    if (!env) return kDimCapLimit;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 0) return kDimCapLimit;
    return static_cast<int>(std::min<long>(v, kDimCapLimit));
  }();
  return cap;
}

static void check_sig(Signature s) {
  if (s.p < 0 || s.q < 0) throw DomainError("signature counts must be nonnegative");
  if (s.n() > dim_cap()) throw DomainError("dimension cap exceeded", s.n());
}

Multivector::Multivector(Signature s) : sig(s) {
  check_sig(s);
  c.assign(1u << s.n(), 0.0);
}

Multivector Multivector::scalar(Signature s, double v) {
  Multivector r(s);
  r.c[0] = v;
  return r;
}

Multivector Multivector::generator(Signature s, int j) {
  if (j < 1 || j > s.n()) throw DomainError("generator index out of range", j);
  return blade(s, 1u << (j - 1));
}

Multivector Multivector::blade(Signature s, uint32_t mask, double v) {
  Multivector r(s);
  if (mask >= r.size()) throw DomainError("blade mask out of range", mask);
  r.c[mask] = v;
  return r;
}

bool Multivector::is_zero() const {
  for (double v : c)
    if (v != 0.0) return false;
  return true;
}

int blade_sign(uint32_t a, uint32_t b, Signature sig) {
  // Count transpositions needed to interleave the two sorted generator lists.
  int swaps = 0;
  uint32_t t = a >> 1;
  while (t) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  // Repeated generators square to +1 (index < p) or -1 (index >= p).
  uint32_t common = a & b;
  swaps += std::popcount(common >> sig.p);
  return (swaps & 1) ? -1 : 1;
}

static void require_same_sig(const Multivector& a, const Multivector& b) {
  if (!(a.sig == b.sig)) throw DomainError("signature mismatch");
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  Multivector r = a;
  for (uint32_t i = 0; i < r.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  Multivector r = a;
  for (uint32_t i = 0; i < r.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Multivector operator-(const Multivector& a) {
  Multivector r = a;
  for (double& v : r.c) v = -v;
  return r;
}

Multivector operator*(const Multivector& a, double s) {
  Multivector r = a;
  for (double& v : r.c) v *= s;
  return r;
}

Multivector operator*(double s, const Multivector& a) { return a * s; }

Multivector operator/(const Multivector& a, double s) { return a * (1.0 / s); }

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  Multivector r(a.sig);
  for (uint32_t i = 0; i < a.size(); ++i) {
    double ai = a.c[i];
    if (ai == 0.0) continue;
    for (uint32_t j = 0; j < b.size(); ++j) {
      double bj = b.c[j];
      if (bj == 0.0) continue;
      r.c[i ^ j] += blade_sign(i, j, a.sig) * ai * bj;
    }
  }
  return r;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

static int involution_sign(int degree, Involution kind) {
  int e = 0;
  switch (kind) {
    case Involution::Grade: e = degree; break;
    case Involution::Reverse: e = degree * (degree - 1) / 2; break;
    case Involution::Conjugate: e = degree * (degree + 1) / 2; break;
  }
  return (e & 1) ? -1 : 1;
}

Multivector involution(const Multivector& a, Involution kind) {
  Multivector r = a;
  for (uint32_t i = 0; i < r.size(); ++i)
    r.c[i] *= involution_sign(std::popcount(i), kind);
  return r;
}

Multivector grade_involution(const Multivector& a) { return involution(a, Involution::Grade); }
Multivector reverse(const Multivector& a) { return involution(a, Involution::Reverse); }
Multivector conjugate(const Multivector& a) { return involution(a, Involution::Conjugate); }

double real_part(const Multivector& a) { return a.c[0]; }

double norm(const Multivector& a) { return real_part(a * conjugate(a)); }

double dot(const Multivector& a, const Multivector& b) {
  return real_part(a * conjugate(b));
}

double frobenius(const Multivector& a) {
  double s = 0.0;
  for (double v : a.c) s += v * v;
  return std::sqrt(s);
}

static int single_degree(const Multivector& a) {
  // Degree if all nonzero blades share one, else -1. Zero counts as degree 0.
  int d = -2;
  for (uint32_t i = 0; i < a.size(); ++i) {
    if (a.c[i] == 0.0) continue;
    int di = std::popcount(i);
    if (d == -2)
      d = di;
    else if (d != di)
      return -1;
  }
  return d == -2 ? 0 : d;
}

static Multivector exp_series(const Multivector& x) {
  // Scale so the argument magnitude is <= 0.5, run 20 Taylor terms, square back.
  double m = frobenius(x);
  int k = 0;
  while (m > 0.5) {
    m *= 0.5;
    ++k;
  }
  Multivector y = x / std::ldexp(1.0, k);
  Multivector acc = Multivector::scalar(x.sig, 1.0);
  Multivector term = Multivector::scalar(x.sig, 1.0);
  for (int i = 1; i <= 20; ++i) {
    term = term * y / static_cast<double>(i);
    acc = acc + term;
  }
  for (int i = 0; i < k; ++i) acc = acc * acc;
  return acc;
}

Multivector exponential(const Multivector& x) {
  if (x.is_zero()) return Multivector::scalar(x.sig, 1.0);
  int d = single_degree(x);
  if (d == 0) return Multivector::scalar(x.sig, std::exp(x.c[0]));
  if (d > 0) {
    Multivector x2 = x * x;
    double s = x2.c[0];
    Multivector rem = x2;
    rem.c[0] = 0.0;
    if (frobenius(rem) <= 1e-12 * std::max(1.0, std::abs(s))) {
      Multivector one = Multivector::scalar(x.sig, 1.0);
      if (s < 0.0) {
        double th = std::sqrt(-s);
        return one * std::cos(th) + x * (std::sin(th) / th);
      }
      if (s > 0.0) {
        double th = std::sqrt(s);
        return one * std::cosh(th) + x * (std::sinh(th) / th);
      }
      return one + x;  // nilpotent
    }
  }
  return exp_series(x);
}

Multivector exponential_series(const Multivector& x) { return exp_series(x); }

Multivector inverse(const Multivector& a) {
  Multivector ac = a * conjugate(a);
  double s = ac.c[0];
  Multivector rem = ac;
  rem.c[0] = 0.0;
  double resid = frobenius(rem);
  if (resid > 1e-9 * std::max(1.0, frobenius(ac)))
    throw NonInvertible("a*conj(a) is not a real scalar", resid);
  if (std::abs(s) <= 1e-12)
    throw NonInvertible("a*conj(a) scalar part is zero", std::abs(s));
  return conjugate(a) / s;
}

Multivector grade_project(const Multivector& a, int degree) {
  Multivector r(a.sig);
  for (uint32_t i = 0; i < a.size(); ++i)
    if (std::popcount(i) == degree) r.c[i] = a.c[i];
  return r;
}

bool is_paravector(const Multivector& a, double tol) {
  double resid = 0.0;
  for (uint32_t i = 0; i < a.size(); ++i)
    if (std::popcount(i) >= 2) resid += a.c[i] * a.c[i];
  return std::sqrt(resid) <= tol * std::max(1.0, frobenius(a));
}

Multivector make_paravector(int n_dims, const std::vector<double>& comps) {
  if (static_cast<int>(comps.size()) != n_dims + 1)
    throw DomainError("paravector needs n+1 components", static_cast<double>(comps.size()));
  Multivector r(Signature{0, n_dims});
  r.c[0] = comps[0];
  for (int j = 1; j <= n_dims; ++j) r.c[1u << (j - 1)] = comps[j];
  return r;
}

std::vector<double> paravector_components(const Multivector& a) {
  std::vector<double> out(a.n() + 1, 0.0);
  out[0] = a.c[0];
  for (int j = 1; j <= a.n(); ++j) out[j] = a.c[1u << (j - 1)];
  return out;
}

double rel_residual(const Multivector& a, const Multivector& b) {
  return frobenius(a - b) / std::max({1.0, frobenius(a), frobenius(b)});
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return rel_residual(a, b) <= tol;
}

std::string to_string(const Multivector& a) {
  std::ostringstream os;
  bool first = true;
  for (uint32_t i = 0; i < a.size(); ++i) {
    if (a.c[i] == 0.0) continue;
    if (!first) os << (a.c[i] < 0 ? " - " : " + ");
    else if (a.c[i] < 0) os << "-";
    first = false;
    os << std::abs(a.c[i]);
    if (i) {
      os << "*";
      for (int j = 1; j <= a.n(); ++j)
        if (i & (1u << (j - 1))) os << "i" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace horoclif
