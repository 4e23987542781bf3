#include "horoclif/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "horoclif/errors.hpp"

namespace horoclif {

namespace {

double vdot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double vnorm(const std::vector<double>& a) { return std::sqrt(vdot(a, a)); }

// Spatial part (Z, X0..Xn) in R^{n+2}.
std::vector<double> spatial(const MinkowskiPoint& p) {
  std::vector<double> s;
  s.reserve(p.X.size() + 1);
  s.push_back(p.Z);
  for (double x : p.X) s.push_back(x);
  return s;
}

// Row rank of a dense matrix, pivot threshold relative to the largest entry.
int row_rank(std::vector<std::vector<double>> m, double tol) {
  if (m.empty()) return 0;
  double biggest = 0.0;
  for (const auto& row : m)
    for (double x : row) biggest = std::max(biggest, std::abs(x));
  if (biggest == 0.0) return 0;
  const double thresh = tol * biggest;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < rows; ++i)
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    if (std::abs(m[piv][c]) <= thresh) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const double f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Determinant of a square matrix given by columns, LU with partial pivoting.
double det_columns(const std::vector<std::vector<double>>& cols) {
  const std::size_t d = cols.size();
  std::vector<std::vector<double>> m(d, std::vector<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m[i][j] = cols[j][i];
  double det = 1.0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < d; ++i)
      if (std::abs(m[i][c]) > std::abs(m[piv][c])) piv = i;
    if (m[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < d; ++i) {
      const double f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < d; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

struct SymOuter {
  Multivector e11, e12, e21, e22;
};

// k v-dagger + v k-dagger, entrywise.
SymOuter sym_outer(const Spinor& k, const Spinor& v) {
  SymOuter s;
  s.e11 = k.xi * conjugate(v.xi) + v.xi * conjugate(k.xi);
  s.e12 = k.xi * conjugate(v.eta) + v.xi * conjugate(k.eta);
  s.e21 = k.eta * conjugate(v.xi) + v.eta * conjugate(k.xi);
  s.e22 = k.eta * conjugate(v.eta) + v.eta * conjugate(k.eta);
  return s;
}

MinkowskiPoint extract_point(const Multivector& e11, const Multivector& e12,
                             const Multivector& e22) {
  MinkowskiPoint p;
  const int n = e11.n();
  const double s11 = real_part(e11);
  const double s22 = real_part(e22);
  p.T = s11 + s22;
  p.Z = s11 - s22;
  p.X.assign(static_cast<std::size_t>(n) + 1, 0.0);
  p.X[0] = 2.0 * e12[0];
  for (int j = 1; j <= n; ++j) p.X[static_cast<std::size_t>(j)] = 2.0 * e12[1u << (j - 1)];
  return p;
}

}  // namespace

MinkowskiPoint operator+(const MinkowskiPoint& a, const MinkowskiPoint& b) {
  MinkowskiPoint r = a;
  r.T += b.T;
  r.Z += b.Z;
  for (std::size_t i = 0; i < r.X.size(); ++i) r.X[i] += b.X[i];
  return r;
}

MinkowskiPoint operator-(const MinkowskiPoint& a, const MinkowskiPoint& b) {
  MinkowskiPoint r = a;
  r.T -= b.T;
  r.Z -= b.Z;
  for (std::size_t i = 0; i < r.X.size(); ++i) r.X[i] -= b.X[i];
  return r;
}

MinkowskiPoint operator*(const MinkowskiPoint& a, double s) {
  MinkowskiPoint r = a;
  r.T *= s;
  r.Z *= s;
  for (double& x : r.X) x *= s;
  return r;
}

MinkowskiPoint operator*(double s, const MinkowskiPoint& a) { return a * s; }

std::vector<double> coords(const MinkowskiPoint& p) {
  std::vector<double> c;
  c.reserve(p.X.size() + 2);
  c.push_back(p.T);
  c.push_back(p.Z);
  for (double x : p.X) c.push_back(x);
  return c;
}

double euclidean_norm(const MinkowskiPoint& p) { return vnorm(coords(p)); }

CliffordMatrix to_matrix(const MinkowskiPoint& p) {
  const int n = p.n();
  Signature sig{0, n};
  std::vector<double> half(p.X.size());
  for (std::size_t i = 0; i < p.X.size(); ++i) half[i] = 0.5 * p.X[i];
  CliffordMatrix m;
  m.a = Multivector::scalar(sig, 0.5 * (p.T + p.Z));
  m.b = make_paravector(n, half);
  m.c = conjugate(m.b);
  m.d = Multivector::scalar(sig, 0.5 * (p.T - p.Z));
  return m;
}

MinkowskiPoint from_matrix(const CliffordMatrix& m) {
  const double scale = std::max(
      {1.0, frobenius(m.a), frobenius(m.b), frobenius(m.c), frobenius(m.d)});
  const double tol = 1e-9 * scale;
  double worst = 0.0;
  worst = std::max(worst, frobenius(m.a - Multivector::scalar(m.a.sig, real_part(m.a))));
  worst = std::max(worst, frobenius(m.d - Multivector::scalar(m.d.sig, real_part(m.d))));
  worst = std::max(worst, frobenius(m.b - grade_project(m.b, 0) - grade_project(m.b, 1)));
  worst = std::max(worst, frobenius(m.c - conjugate(m.b)));
  if (worst > tol)
    throw DomainError("matrix entries do not form a conjugate-symmetric paravector pair",
                      worst / scale);
  return extract_point(m.a, m.b, m.d);
}

MinkowskiPoint basepoint(const Spinor& k) {
  SymOuter s = sym_outer(k, k);
  return extract_point(s.e11 * 0.5, s.e12 * 0.5, s.e22 * 0.5);
}

MinkowskiPoint dphi1(const Spinor& k, const Spinor& v) {
  SymOuter s = sym_outer(k, v);
  return extract_point(s.e11, s.e12, s.e22);
}

double minkowski_inner(const MinkowskiPoint& p, const MinkowskiPoint& q) {
  CliffordMatrix P = to_matrix(p);
  CliffordMatrix Q = to_matrix(q);
  return 2.0 * (real_part(P.a) * real_part(Q.d) + real_part(P.d) * real_part(Q.a) -
                real_part(P.b * conjugate(Q.b)) - real_part(Q.b * conjugate(P.b)));
}

double euclidean_inner(const MinkowskiPoint& p, const MinkowskiPoint& q) {
  CliffordMatrix P = to_matrix(p);
  CliffordMatrix Q = to_matrix(q);
  return 2.0 * (real_part(P.a) * real_part(Q.a) + real_part(P.d) * real_part(Q.d) +
                real_part(P.b * conjugate(Q.b)) + real_part(Q.b * conjugate(P.b)));
}

bool on_light_cone(const MinkowskiPoint& p, double tol) {
  const double m = minkowski_inner(p, p);
  const double e = euclidean_inner(p, p);
  return std::abs(m) <= tol * std::max(1.0, e);
}

Multiflag multiflag(const Spinor& k) {
  Multiflag mf;
  mf.base = basepoint(k);
  const Spinor kc = complement(k);
  const int n = k.n();
  mf.vectors.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const Multivector ij = Multivector::generator(k.xi.sig, j);
    mf.vectors.push_back(dphi1(k, kc * ij));
  }
  return mf;
}

void check_multiflag(const Multiflag& mf, double tol) {
  if (!on_light_cone(mf.base, tol) || mf.base.T <= 0.0)
    throw DomainError("base not on the positive light cone",
                      std::abs(minkowski_inner(mf.base, mf.base)));
  std::vector<MinkowskiPoint> all;
  all.push_back(mf.base);
  for (const auto& v : mf.vectors) all.push_back(v);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      if (i == j && i > 0) continue;  // vectors have nonzero norm by design
      const double inner = minkowski_inner(all[i], all[j]);
      const double scale =
          std::max(1.0, euclidean_norm(all[i]) * euclidean_norm(all[j]));
      if (std::abs(inner) > tol * scale)
        throw DomainError("multiflag vectors are not Minkowski-orthogonal",
                          std::abs(inner) / scale);
    }
  }
  std::vector<std::vector<double>> rows;
  for (const auto& v : all) rows.push_back(coords(v));
  if (row_rank(rows, 1e-9) != static_cast<int>(all.size()))
    throw DomainError("multiflag vectors are linearly dependent", 0.0);
}

MinkowskiPoint act_minkowski(const CliffordMatrix& A, const MinkowskiPoint& p) {
  return from_matrix(matmul(matmul(A, to_matrix(p)), dagger(A)));
}

Multiflag act_multiflag(const CliffordMatrix& A, const Multiflag& mf) {
  Multiflag r;
  r.base = act_minkowski(A, mf.base);
  r.vectors.reserve(mf.vectors.size());
  for (const auto& v : mf.vectors) r.vectors.push_back(act_minkowski(A, v));
  return r;
}

DecoratedIdealPoint to_decorated_ideal(const Multiflag& mf) {
  if (!on_light_cone(mf.base) || mf.base.T <= 0.0)
    throw DomainError("base not on the positive light cone",
                      std::abs(minkowski_inner(mf.base, mf.base)));
  const double T0 = mf.base.T;
  const double K = -4.0 * T0 * T0;
  const int n = static_cast<int>(mf.vectors.size());

  DecoratedIdealPoint dip;
  dip.K = K;
  dip.ray = mf.base * (1.0 / T0);
  dip.frame.assign(static_cast<std::size_t>(n) + 1, MinkowskiPoint{});

  for (int j = 0; j < n; ++j) {
    const MinkowskiPoint& v = mf.vectors[static_cast<std::size_t>(j)];
    // Canonical representative of v modulo the base line: kill the T entry.
    MinkowskiPoint u = v - (v.T / T0) * mf.base;
    const double s2 = minkowski_inner(u, u);
    const double en = euclidean_inner(u, u);
    if (-s2 <= 1e-12 * std::max(1.0, en))
      throw Degenerate("flag vector collapses onto the base line", -s2);
    dip.frame[static_cast<std::size_t>(j) + 1] = u * std::sqrt(K / s2);
  }

  // Remaining frame direction: the zero-T vector orthogonal to the base and to
  // every flag representative. Spatial parts give n+1 constraints in R^{n+2}.
  std::vector<std::vector<double>> ortho;
  ortho.push_back(spatial(mf.base));
  for (int j = 1; j <= n; ++j) ortho.push_back(spatial(dip.frame[static_cast<std::size_t>(j)]));
  for (std::size_t i = 0; i < ortho.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const double f = vdot(ortho[i], ortho[k]);
      for (std::size_t t = 0; t < ortho[i].size(); ++t) ortho[i][t] -= f * ortho[k][t];
    }
    const double len = vnorm(ortho[i]);
    if (len <= 1e-12) throw Degenerate("frame directions are linearly dependent", len);
    for (double& t : ortho[i]) t /= len;
  }
  std::vector<double> best;
  double best_len = -1.0;
  const std::size_t dim = ortho[0].size();
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<double> w(dim, 0.0);
    w[c] = 1.0;
    for (const auto& row : ortho) {
      const double f = vdot(w, row);
      for (std::size_t t = 0; t < dim; ++t) w[t] -= f * row[t];
    }
    const double len = vnorm(w);
    if (len > best_len) {
      best_len = len;
      best = w;
    }
  }
  MinkowskiPoint w;
  w.T = 0.0;
  w.Z = best[0] * (2.0 * T0 / best_len);
  w.X.assign(best.begin() + 1, best.end());
  for (double& x : w.X) x *= 2.0 * T0 / best_len;

  // Orientation convention: the frame listed after the time axis and the base
  // ray must be negatively oriented (this is the orientation the tangent
  // construction itself produces at every point of the cone).
  std::vector<std::vector<double>> cols;
  std::vector<double> et(static_cast<std::size_t>(n) + 3, 0.0);
  et[0] = 1.0;
  cols.push_back(et);
  cols.push_back(coords(mf.base));
  cols.push_back(coords(w));
  for (int j = 1; j <= n; ++j) cols.push_back(coords(dip.frame[static_cast<std::size_t>(j)]));
  const double d = det_columns(cols);
  if (d == 0.0) throw Degenerate("frame does not span the tangent slice", 0.0);
  if (d > 0.0) w = w * -1.0;
  dip.frame[0] = w;
  return dip;
}

Multiflag from_decorated_ideal(const DecoratedIdealPoint& dip) {
  if (!(dip.K < 0.0)) throw DomainError("frame norm constant must be negative", dip.K);
  const double T0 = 0.5 * std::sqrt(-dip.K);
  Multiflag mf;
  mf.base = dip.ray * T0;
  mf.vectors.assign(dip.frame.begin() + 1, dip.frame.end());
  return mf;
}

bool flags_equal(const Multiflag& a, const Multiflag& b, double tol) {
  if (a.vectors.size() != b.vectors.size())
    throw DomainError("flag counts differ", 0.0);
  const std::vector<double> b1 = coords(a.base);
  const std::vector<double> b2 = coords(b.base);
  const double bb = vdot(b1, b1);
  if (bb <= 0.0) throw DomainError("base rays differ", 1.0);
  const double s = vdot(b1, b2) / bb;
  std::vector<double> rvec(b1.size());
  for (std::size_t i = 0; i < b1.size(); ++i) rvec[i] = b2[i] - s * b1[i];
  const double base_resid = vnorm(rvec) / std::max(1e-300, vnorm(b2));
  if (!(s > 0.0) || base_resid > 1e-8)
    throw DomainError("base rays differ", base_resid);

  for (std::size_t j = 0; j < a.vectors.size(); ++j) {
    const std::vector<double> v1 = coords(a.vectors[j]);
    const std::vector<double> v2 = coords(b.vectors[j]);
    const double g11 = vdot(b1, b1);
    const double g12 = vdot(b1, v1);
    const double g22 = vdot(v1, v1);
    const double r1 = vdot(b1, v2);
    const double r2 = vdot(v1, v2);
    const double det = g11 * g22 - g12 * g12;
    if (det <= 1e-12 * g11 * g22) return false;
    const double alpha = (g22 * r1 - g12 * r2) / det;
    const double beta = (g11 * r2 - g12 * r1) / det;
    std::vector<double> res(v2.size());
    for (std::size_t i = 0; i < v2.size(); ++i)
      res[i] = v2[i] - alpha * b1[i] - beta * v1[i];
    const double rel = vnorm(res) / std::max(1e-300, vnorm(v2));
    if (!(rel < tol)) return false;
    if (!(beta > 0.0)) return false;
  }
  return true;
}

}  // namespace horoclif
