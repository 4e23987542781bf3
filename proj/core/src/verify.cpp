#include "horoclif/verify.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "horoclif/errors.hpp"
#include "horoclif/hyperbolic.hpp"
#include "horoclif/json_io.hpp"
#include "horoclif/lambda.hpp"
#include "horoclif/matrix.hpp"
#include "horoclif/minkowski.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"
#include "horoclif/spinor.hpp"

namespace horoclif {

namespace {

struct SuiteCtx {
  int n;
  int samples;
  double tol;  // 0 = use the suite default
  Rng rng;
};

Multivector random_full(int n, Rng& rng) {
  Multivector m{Signature{0, n}};
  for (std::uint32_t i = 0; i < m.size(); ++i) m[i] = rng.normal();
  return m;
}

Multivector random_vector(int n, Rng& rng) {
  Multivector m{Signature{0, n}};
  for (int j = 1; j <= n; ++j) m[1u << (j - 1)] = rng.normal();
  return m;
}

// Grades 0, 1, 2; pure = true drops the scalar (tangent to the unit-norm
// directions / kernel directions).
Multivector random_biparavector(int n, Rng& rng, bool pure) {
  Multivector m{Signature{0, n}};
  if (!pure) m[0] = rng.normal();
  for (std::uint32_t i = 1; i < m.size(); ++i) {
    const int d = std::popcount(i);
    if (d == 1 || d == 2) m[i] = rng.normal();
  }
  return m;
}

double rel(const Multivector& got, const Multivector& want) {
  return frobenius(got - want) /
         std::max({1.0, frobenius(got), frobenius(want)});
}

double rel_point(const MinkowskiPoint& got, const MinkowskiPoint& want) {
  return euclidean_norm(got - want) /
         std::max({1.0, euclidean_norm(got), euclidean_norm(want)});
}

// Runs sample_fn cfg.samples times; the result passes when every returned
// residual stays strictly below the threshold. sample_fn may throw Error to
// fail the sample outright.
SuiteResult residual_suite(const char* module, const char* name, SuiteCtx& ctx,
                           double default_threshold, bool tol_overridable,
                           const std::function<double(Rng&)>& sample_fn) {
  SuiteResult r;
  r.module = module;
  r.name = name;
  r.threshold = (tol_overridable && ctx.tol > 0.0) ? ctx.tol : default_threshold;
  r.pass = true;
  for (int i = 0; i < ctx.samples; ++i) {
    double resid = 0.0;
    try {
      resid = sample_fn(ctx.rng);
    } catch (const Error& e) {
      r.pass = false;
      r.detail = "sample " + std::to_string(i) + ": " + e.clause;
      ++r.samples;
      continue;
    }
    ++r.samples;
    if (resid > r.max_residual) r.max_residual = resid;
    if (!(resid < r.threshold) && r.pass) {
      r.pass = false;
      r.detail = "sample " + std::to_string(i) + " residual " + std::to_string(resid);
    }
  }
  return r;
}

SuiteResult skipped(const char* module, const char* name, const char* why) {
  SuiteResult r;
  r.module = module;
  r.name = name;
  r.pass = true;
  r.detail = why;
  return r;
}

Spinor well_conditioned_spinor(int n, Rng& rng) {
  for (int tries = 0; tries < 100; ++tries) {
    Spinor k = random_spinor(n, rng);
    if (norm2(k) > 1e-3 && norm2(k) < 1e6) return k;
  }
  throw Degenerate("could not draw a well-conditioned spinor", 0.0);
}

std::vector<Spinor> conditioned_tuple(int n, int count, Rng& rng) {
  for (int tries = 0; tries < 200; ++tries) {
    std::vector<Spinor> ks;
    for (int i = 0; i < count; ++i) ks.push_back(well_conditioned_spinor(n, rng));
    if (pair_conditioning(ks) >= 1e-3) return ks;
  }
  throw Degenerate("could not draw a well-conditioned tuple", 0.0);
}

// ---------------------------------------------------------------- clifford

SuiteResult sv_sign_table(SuiteCtx& ctx) {
  const Signature sig{0, ctx.n};
  return residual_suite("clifford", "sign_table", ctx, 0.5, false, [&](Rng& rng) {
    const std::uint32_t mask =
        static_cast<std::uint32_t>(rng.uniform_int(0, (1 << ctx.n) - 1));
    const int d = std::popcount(mask);
    const Multivector blade = Multivector::blade(sig, mask, 1.0);
    const int sg = (d % 2 == 0) ? 1 : -1;
    const int sr = ((d * (d - 1) / 2) % 2 == 0) ? 1 : -1;
    const int sc = ((d * (d + 1) / 2) % 2 == 0) ? 1 : -1;
    double bad = 0.0;
    if (grade_involution(blade)[mask] != sg) bad = 1.0;
    if (reverse(blade)[mask] != sr) bad = 1.0;
    if (conjugate(blade)[mask] != sc) bad = 1.0;
    return bad;
  });
}

SuiteResult sv_associativity(SuiteCtx& ctx) {
  return residual_suite("clifford", "associativity", ctx, 1e-12, true, [&](Rng& rng) {
    const Multivector a = random_full(ctx.n, rng);
    const Multivector b = random_full(ctx.n, rng);
    const Multivector c = random_full(ctx.n, rng);
    return rel((a * b) * c, a * (b * c));
  });
}

SuiteResult sv_conj_antiautomorphism(SuiteCtx& ctx) {
  return residual_suite("clifford", "conj_antiautomorphism", ctx, 1e-12, true,
                        [&](Rng& rng) {
    const Multivector a = random_full(ctx.n, rng);
    const Multivector b = random_full(ctx.n, rng);
    return rel(conjugate(a * b), conjugate(b) * conjugate(a));
  });
}

SuiteResult sv_vector_polarization(SuiteCtx& ctx) {
  if (ctx.n < 1)
    return skipped("clifford", "vector_polarization", "needs n >= 1");
  const Signature sig{0, ctx.n};
  return residual_suite("clifford", "vector_polarization", ctx, 1e-12, true,
                        [&](Rng& rng) {
    const Multivector V = random_vector(ctx.n, rng);
    const Multivector W = random_vector(ctx.n, rng);
    const Multivector lhs = V * W + W * V;
    return rel(lhs, Multivector::scalar(sig, -2.0 * dot(V, W)));
  });
}

SuiteResult sv_exp_closed_vs_series(SuiteCtx& ctx) {
  if (ctx.n < 1)
    return skipped("clifford", "exp_closed_vs_series", "needs n >= 1");
  return residual_suite("clifford", "exp_closed_vs_series", ctx, 1e-10, true,
                        [&](Rng& rng) {
    Multivector V = random_vector(ctx.n, rng);
    const double len = frobenius(V);
    if (len < 1e-6) return 0.0;
    V = V * (1.0 / len);
    const double theta = rng.uniform(-4.0 * 3.14159265358979324,
                                     4.0 * 3.14159265358979324);
    const Multivector x = V * theta;
    return rel(exponential(x), exponential_series(x));
  });
}

SuiteResult sv_paravector_conj_real(SuiteCtx& ctx) {
  const Signature sig{0, ctx.n};
  return residual_suite("clifford", "paravector_conj_real", ctx, 1e-12, true,
                        [&](Rng& rng) {
    const Multivector V = random_paravector(ctx.n, rng);
    const Multivector m = V * conjugate(V);
    return rel(m, Multivector::scalar(sig, real_part(m)));
  });
}

// --------------------------------------------------------------- lipschitz

SuiteResult sv_bracket_antisymmetry(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "bracket_antisymmetry", ctx, 1e-10, true,
                        [&](Rng& rng) {
    const Spinor a = random_spinor(ctx.n, rng);
    const Spinor b = random_spinor(ctx.n, rng);
    return rel(bracket(b, a), -reverse(bracket(a, b)));
  });
}

SuiteResult sv_bracket_kernel(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "bracket_kernel", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const Multivector a = random_full(ctx.n, rng);
    const Multivector br = bracket(k, k * a);
    return frobenius(br) / std::max(1.0, norm2(k) * frobenius(a));
  });
}

SuiteResult sv_inner_scaling(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "inner_scaling", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor d1 = random_spinor(ctx.n, rng);
    const Spinor d2 = random_spinor(ctx.n, rng);
    const Multivector alpha = random_lipschitz(ctx.n, rng);
    const double lhs = inner_product(d1 * alpha, d2 * alpha);
    const double rhs = norm(alpha) * inner_product(d1, d2);
    double resid = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});

    const Multivector V = random_paravector(ctx.n, rng);
    const Multivector W = random_paravector(ctx.n, rng);
    const Spinor K = random_spinor(ctx.n, rng);
    const double lhs2 = inner_product(K * V, K * W);
    const double rhs2 = norm2(K) * dot(V, W);
    resid = std::max(resid, std::abs(lhs2 - rhs2) /
                                std::max({1.0, std::abs(lhs2), std::abs(rhs2)}));
    return resid;
  });
}

SuiteResult sv_hermitian_scaling(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "hermitian_scaling", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor d1 = random_spinor(ctx.n, rng);
    const Spinor d2 = random_spinor(ctx.n, rng);
    const Multivector alpha = random_lipschitz(ctx.n, rng);
    const Spinor a1{alpha * d1.xi, alpha * d1.eta};
    const Spinor a2{alpha * d2.xi, alpha * d2.eta};
    double resid = rel(hermitian_form(a1, a2), norm(alpha) * hermitian_form(d1, d2));

    const Multivector b = random_full(ctx.n, rng);
    const Multivector c = random_full(ctx.n, rng);
    resid = std::max(resid, rel(hermitian_form(d1 * b, d2 * c),
                                conjugate(b) * hermitian_form(d1, d2) * c));
    return resid;
  });
}

SuiteResult sv_decomposition(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "decomposition", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = well_conditioned_spinor(ctx.n, rng);
    const Spinor ab{random_full(ctx.n, rng), random_full(ctx.n, rng)};
    const auto [x, y] = decompose(k, ab);
    const Spinor recon = k * x + complement(k) * y;
    return std::max(rel(recon.xi, ab.xi), rel(recon.eta, ab.eta));
  });
}

SuiteResult sv_orthogonality(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "orthogonality", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const Multivector x = random_full(ctx.n, rng);
    const Multivector y = random_full(ctx.n, rng);
    const double ip = inner_product(k * x, complement(k) * y);
    return std::abs(ip) /
           std::max(1.0, norm2(k) * frobenius(x) * frobenius(y));
  });
}

SuiteResult sv_tangent_membership(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "tangent_membership", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const Multivector B = random_biparavector(ctx.n, rng, false);
    const Multivector V = random_paravector(ctx.n, rng);
    const Multivector a = k.xi * B + grade_involution(k.eta) * V;
    const Multivector b = k.eta * B - grade_involution(k.xi) * V;
    const Multivector m = a * conjugate(k.eta) + k.xi * conjugate(b);
    const Multivector para = grade_project(m, 0) + grade_project(m, 1);
    return frobenius(m - para) / std::max(1.0, frobenius(m));
  });
}

SuiteResult sv_lie_exp(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "lie_exp", ctx, 0.5, false, [&](Rng& rng) {
    const Multivector B = random_biparavector(ctx.n, rng, false);
    const double t = rng.uniform(-1.0, 1.0);
    return is_lipschitz(exponential(B * t)) ? 0.0 : 1.0;
  });
}

SuiteResult sv_mobius_ratio_equivariance(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "mobius_ratio_equivariance", ctx, 1e-8, true,
                        [&](Rng& rng) {
    Spinor k = random_spinor(ctx.n, rng);
    const int corner = rng.uniform_int(0, 9);
    if (corner == 0)
      k = make_spinor(k.xi, Multivector{Signature{0, ctx.n}});
    else if (corner == 1)
      k = make_spinor(Multivector{Signature{0, ctx.n}}, k.eta);
    const CliffordMatrix A = random_sl2(ctx.n, rng);
    const ParavectorPoint lhs = ratio(act_on_spinor(A, k));
    const ParavectorPoint rhs = mobius_apply(A, ratio(k));
    if (lhs.infinite && rhs.infinite) return 0.0;
    if (lhs.infinite != rhs.infinite) {
      // Consistent at the infinity threshold when the finite side is huge.
      const Multivector& fin = lhs.infinite ? rhs.value : lhs.value;
      return frobenius(fin) > 1e9 ? 0.0 : 1.0;
    }
    return rel(lhs.value, rhs.value);
  });
}

SuiteResult sv_transitivity(SuiteCtx& ctx) {
  return residual_suite("lipschitz", "transitivity", ctx, 1e-8, true,
                        [&](Rng& rng) {
    const Spinor k1 = well_conditioned_spinor(ctx.n, rng);
    const Spinor k2 = well_conditioned_spinor(ctx.n, rng);
    const CliffordMatrix A =
        matmul(sl_from_spinor(k2), sl_inverse(sl_from_spinor(k1)));
    const Spinor got = act_on_spinor(A, k1);
    return std::max(rel(got.xi, k2.xi), rel(got.eta, k2.eta));
  });
}

// --------------------------------------------------------------- minkowski

SuiteResult sv_lightcone_preimage(SuiteCtx& ctx) {
  return residual_suite("minkowski", "lightcone_preimage", ctx, 1e-9, true,
                        [&](Rng& rng) {
    MinkowskiPoint p;
    for (int tries = 0;; ++tries) {
      const double T = std::exp(rng.uniform(-1.0, 1.0));
      std::vector<double> s(static_cast<std::size_t>(ctx.n) + 2);
      double len = 0.0;
      for (double& v : s) {
        v = rng.normal();
        len += v * v;
      }
      len = std::sqrt(len);
      if (len < 1e-9) continue;
      p.T = T;
      p.Z = s[0] * T / len;
      p.X.assign(s.begin() + 1, s.end());
      for (double& x : p.X) x *= T / len;
      if (p.T - p.Z > 1e-6 * p.T) break;
      if (tries > 100) throw Degenerate("no usable cone point", 0.0);
    }
    const double root = std::sqrt(p.T - p.Z);
    const Multivector xi = make_paravector(ctx.n, p.X) * (1.0 / (root * std::sqrt(2.0)));
    const Multivector eta =
        Multivector::scalar(Signature{0, ctx.n}, root / std::sqrt(2.0));
    const Spinor k = make_spinor(xi, eta);
    return rel_point(basepoint(k), p);
  });
}

SuiteResult sv_preimage_fibre(SuiteCtx& ctx) {
  return residual_suite("minkowski", "preimage_fibre", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    Multivector s = random_lipschitz(ctx.n, rng);
    s = s * (1.0 / std::sqrt(norm(s)));
    return rel_point(basepoint(k * s), basepoint(k));
  });
}

SuiteResult sv_conformality(SuiteCtx& ctx) {
  return residual_suite("minkowski", "conformality", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const Spinor kc = complement(k);
    const Multivector V = random_paravector(ctx.n, rng);
    const Multivector W = random_paravector(ctx.n, rng);
    const double lhs = minkowski_inner(dphi1(k, kc * V), dphi1(k, kc * W));
    const double n2 = norm2(k);
    const double rhs = -4.0 * n2 * n2 * dot(V, W);
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  });
}

SuiteResult sv_orthogonal_decomposition(SuiteCtx& ctx) {
  const Signature sig{0, ctx.n};
  return residual_suite("minkowski", "orthogonal_decomposition", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const Spinor kc = complement(k);
    const double a = rng.normal();
    double resid = rel_point(dphi1(k, k * Multivector::scalar(sig, a)),
                             (2.0 * a) * basepoint(k));

    const Multivector V = random_paravector(ctx.n, rng);
    const MinkowskiPoint tang = dphi1(k, kc * V);
    resid = std::max(resid,
                     std::abs(tang.T) / std::max(1.0, euclidean_norm(tang)));

    const Multivector B = random_biparavector(ctx.n, rng, true);
    const MinkowskiPoint zero = dphi1(k, k * B);
    resid = std::max(resid, euclidean_norm(zero) /
                                std::max(1.0, norm2(k) * frobenius(B)));
    return resid;
  });
}

SuiteResult sv_pdet_multiplicativity(SuiteCtx& ctx) {
  return residual_suite("minkowski", "pdet_multiplicativity", ctx, 1e-9, true,
                        [&](Rng& rng) {
    MinkowskiPoint p;
    p.T = rng.normal();
    p.Z = rng.normal();
    p.X.resize(static_cast<std::size_t>(ctx.n) + 1);
    for (double& x : p.X) x = rng.normal();
    const CliffordMatrix S = to_matrix(p);
    const CliffordMatrix A = random_sl2(ctx.n, rng);
    const CliffordMatrix S2 = matmul(matmul(A, S), dagger(A));
    const Multivector pd1 = pseudo_determinant(S);
    const Multivector pd2 = pseudo_determinant(S2);
    double resid = rel(pd1, pd2);
    // Minkowski norm = 4 * pdet for symmetric paravector matrices.
    const double mn = minkowski_inner(p, p);
    resid = std::max(resid, std::abs(mn - 4.0 * real_part(pd1)) /
                                std::max(1.0, std::abs(mn)));
    return resid;
  });
}

// -------------------------------------------------------------- hyperbolic

SuiteResult sv_pipeline_consistency(SuiteCtx& ctx) {
  return residual_suite("hyperbolic", "pipeline_consistency", ctx, 1e-9, true,
                        [&](Rng& rng) {
    Spinor k = random_spinor(ctx.n, rng);
    const int corner = rng.uniform_int(0, 4);
    if (corner == 0)
      k = make_spinor(random_lipschitz(ctx.n, rng), Multivector{Signature{0, ctx.n}});
    else if (corner == 1)
      k = make_spinor(Multivector{Signature{0, ctx.n}}, random_lipschitz(ctx.n, rng));
    const UpperHalfPoint via_cone = boundary_center(k);  // throws on mismatch
    const ParavectorPoint direct = ratio(k);
    if (via_cone.infinite || direct.infinite)
      return (via_cone.infinite == direct.infinite) ? 0.0 : 1.0;
    return rel(make_paravector(ctx.n, via_cone.x), direct.value);
  });
}

SuiteResult sv_decoration_orthogonality(SuiteCtx& ctx) {
  return residual_suite("hyperbolic", "decoration_orthogonality", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const DecoratedHorosphere h = horosphere(k);
    double resid = 0.0;
    for (std::size_t i = 0; i < h.decorations.size(); ++i) {
      resid = std::max(resid, std::abs(norm(h.decorations[i]) - 1.0));
      for (std::size_t j = i + 1; j < h.decorations.size(); ++j)
        resid = std::max(resid, std::abs(dot(h.decorations[i], h.decorations[j])));
    }
    return resid;
  });
}

SuiteResult sv_decoration_equivariance(SuiteCtx& ctx) {
  const Signature sig{0, ctx.n};
  return residual_suite("hyperbolic", "decoration_equivariance", ctx, 1e-8, true,
                        [&](Rng& rng) {
    const Multivector zero{sig};
    const Spinor at_inf = make_spinor(random_lipschitz(ctx.n, rng), zero);
    const Spinor at_zero = make_spinor(zero, random_lipschitz(ctx.n, rng));

    SlGenerator gens[3];
    gens[0] = SlGenerator{1, random_paravector(ctx.n, rng)};
    gens[1] = SlGenerator{2, Multivector{sig}};
    gens[2] = SlGenerator{3, random_invertible_paravector(ctx.n, rng)};

    double resid = 0.0;
    for (const SlGenerator& g : gens) {
      const CliffordMatrix G = generator_matrix(g, ctx.n);
      for (const Spinor* k : {&at_inf, &at_zero}) {
        const DecoratedHorosphere before = horosphere(*k);
        const DecoratedHorosphere after = horosphere(act_on_spinor(G, *k));
        for (std::size_t j = 0; j < before.decorations.size(); ++j)
          resid = std::max(resid, rel(after.decorations[j],
                                      transform_decoration(g, before.decorations[j])));
      }
    }
    return resid;
  });
}

SuiteResult sv_distance_oracle(SuiteCtx& ctx) {
  return residual_suite("hyperbolic", "distance_oracle", ctx, 1e-8, true,
                        [&](Rng& rng) {
    for (int tries = 0; tries < 100; ++tries) {
      const Spinor k1 = well_conditioned_spinor(ctx.n, rng);
      const Spinor k2 = well_conditioned_spinor(ctx.n, rng);
      const double lam = frobenius(bracket(k1, k2));
      if (lam <= 1e-3) continue;
      const double d = horosphere_distance(k1, k2);
      return std::abs(std::exp(0.5 * d) - lam) / std::max(1.0, lam);
    }
    throw Degenerate("no well-conditioned pair found", 0.0);
  });
}

SuiteResult sv_horosphere_membership(SuiteCtx& ctx) {
  return residual_suite("hyperbolic", "horosphere_membership", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k = well_conditioned_spinor(ctx.n, rng);
    MinkowskiPoint apex;
    apex.T = 1.0;
    apex.Z = 0.0;
    apex.X.assign(static_cast<std::size_t>(ctx.n) + 1, 0.0);
    const MinkowskiPoint q = act_minkowski(sl_from_spinor(k), apex);
    const Multivector V = random_paravector(ctx.n, rng);
    const MinkowskiPoint qv = act_minkowski(parabolic_translation(k, V), q);
    const MinkowskiPoint p = basepoint(k);
    const double inner = minkowski_inner(qv, p);
    return std::abs(inner - 1.0) /
           std::max(1.0, euclidean_norm(qv) * euclidean_norm(p));
  });
}

// ------------------------------------------------------------------ lambda

SuiteResult sv_sl_invariance(SuiteCtx& ctx) {
  return residual_suite("lambda", "sl_invariance", ctx, 1e-9, true,
                        [&](Rng& rng) {
    const Spinor k1 = random_spinor(ctx.n, rng);
    const Spinor k2 = random_spinor(ctx.n, rng);
    const CliffordMatrix A = random_sl2(ctx.n, rng);
    return rel(lambda_length(act_on_spinor(A, k1), act_on_spinor(A, k2)),
               lambda_length(k1, k2));
  });
}

SuiteResult sv_magnitude_oracle(SuiteCtx& ctx) {
  return residual_suite("lambda", "magnitude_oracle", ctx, 1e-8, true,
                        [&](Rng& rng) {
    const Spinor k1 = random_spinor(ctx.n, rng);
    const Spinor k2 = random_spinor(ctx.n, rng);
    const double lam2 = norm(lambda_length(k1, k2));
    const double half_inner = 0.5 * minkowski_inner(basepoint(k1), basepoint(k2));
    return std::abs(lam2 - half_inner) /
           std::max({1.0, lam2, std::abs(half_inner)});
  });
}

SuiteResult sv_sign_flip_stability(SuiteCtx& ctx) {
  return residual_suite("lambda", "sign_flip_stability", ctx, 1e-8, true,
                        [&](Rng& rng) {
    const std::vector<Spinor> ks = conditioned_tuple(ctx.n, 4, rng);
    const double r0 = ptolemy_residual(ks[0], ks[1], ks[2], ks[3]);
    const double r1 = ptolemy_residual(-ks[0], ks[1], -ks[2], ks[3]);
    const double r2 = ptolemy_residual(-ks[0], -ks[1], -ks[2], -ks[3]);
    return std::max({r0, r1, r2});
  });
}

SuiteResult sv_quasi_plucker(SuiteCtx& ctx) {
  return residual_suite("lambda", "quasi_plucker", ctx, 1e-9, true,
                        [&](Rng& rng) {
    for (int tries = 0; tries < 100; ++tries) {
      const std::vector<Spinor> ks = conditioned_tuple(ctx.n, 4, rng);
      try {
        // The call itself cross-checks the bracket form against both
        // quasideterminant forms and throws if they disagree.
        quasi_plucker(ks, 1, 2, 3);
        quasi_plucker(ks, 2, 4, 1);
        quasi_plucker(ks, 3, 1, 4);
        return 0.0;
      } catch (const Degenerate&) {
        continue;  // a component was near-singular; redraw
      }
    }
    throw Degenerate("no usable quasi-Plucker sample", 0.0);
  });
}

// --------------------------------------------------------------------- cli

SuiteResult sv_cli_determinism(SuiteCtx& ctx) {
  return residual_suite("cli", "determinism", ctx, 0.5, false, [&](Rng& rng) {
    const std::uint64_t seed = rng.next_u64();
    Rng r1(seed), r2(seed);
    const Spinor k1 = random_spinor(ctx.n, r1);
    const Spinor k2 = random_spinor(ctx.n, r2);
    if (json_spinor(k1) != json_spinor(k2)) return 1.0;
    if (json_horosphere(horosphere(k1)) != json_horosphere(horosphere(k2)))
      return 1.0;
    return 0.0;
  });
}

SuiteResult sv_cli_roundtrip(SuiteCtx& ctx) {
  return residual_suite("cli", "roundtrip", ctx, 0.5, false, [&](Rng& rng) {
    const Spinor k = random_spinor(ctx.n, rng);
    const Spinor back = parse_spinor(json_spinor(k));
    for (std::uint32_t i = 0; i < k.xi.size(); ++i)
      if (back.xi[i] != k.xi[i] || back.eta[i] != k.eta[i]) return 1.0;

    const CliffordMatrix A = random_sl2(ctx.n, rng);
    const CliffordMatrix B = parse_matrix(json_matrix(A), MatrixFlavor::SL);
    for (std::uint32_t i = 0; i < A.a.size(); ++i)
      if (B.a[i] != A.a[i] || B.b[i] != A.b[i] || B.c[i] != A.c[i] ||
          B.d[i] != A.d[i])
        return 1.0;

    const Multivector m = random_full(ctx.n, rng);
    const Multivector m2 = parse_multivector(json_multivector(m));
    for (std::uint32_t i = 0; i < m.size(); ++i)
      if (m2[i] != m[i]) return 1.0;
    return 0.0;
  });
}

struct Entry {
  const char* module;
  const char* name;
  SuiteResult (*fn)(SuiteCtx&);
};

constexpr Entry kRegistry[] = {
    {"clifford", "sign_table", sv_sign_table},
    {"clifford", "associativity", sv_associativity},
    {"clifford", "conj_antiautomorphism", sv_conj_antiautomorphism},
    {"clifford", "vector_polarization", sv_vector_polarization},
    {"clifford", "exp_closed_vs_series", sv_exp_closed_vs_series},
    {"clifford", "paravector_conj_real", sv_paravector_conj_real},
    {"lipschitz", "bracket_antisymmetry", sv_bracket_antisymmetry},
    {"lipschitz", "bracket_kernel", sv_bracket_kernel},
    {"lipschitz", "inner_scaling", sv_inner_scaling},
    {"lipschitz", "hermitian_scaling", sv_hermitian_scaling},
    {"lipschitz", "decomposition", sv_decomposition},
    {"lipschitz", "orthogonality", sv_orthogonality},
    {"lipschitz", "tangent_membership", sv_tangent_membership},
    {"lipschitz", "lie_exp", sv_lie_exp},
    {"lipschitz", "mobius_ratio_equivariance", sv_mobius_ratio_equivariance},
    {"lipschitz", "transitivity", sv_transitivity},
    {"minkowski", "lightcone_preimage", sv_lightcone_preimage},
    {"minkowski", "preimage_fibre", sv_preimage_fibre},
    {"minkowski", "conformality", sv_conformality},
    {"minkowski", "orthogonal_decomposition", sv_orthogonal_decomposition},
    {"minkowski", "pdet_multiplicativity", sv_pdet_multiplicativity},
    {"hyperbolic", "pipeline_consistency", sv_pipeline_consistency},
    {"hyperbolic", "decoration_orthogonality", sv_decoration_orthogonality},
    {"hyperbolic", "decoration_equivariance", sv_decoration_equivariance},
    {"hyperbolic", "distance_oracle", sv_distance_oracle},
    {"hyperbolic", "horosphere_membership", sv_horosphere_membership},
    {"lambda", "sl_invariance", sv_sl_invariance},
    {"lambda", "magnitude_oracle", sv_magnitude_oracle},
    {"lambda", "sign_flip_stability", sv_sign_flip_stability},
    {"lambda", "quasi_plucker", sv_quasi_plucker},
    {"cli", "determinism", sv_cli_determinism},
    {"cli", "roundtrip", sv_cli_roundtrip},
};

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyConfig& cfg) {
  Rng base(cfg.seed);
  std::vector<SuiteResult> out;
  for (const Entry& e : kRegistry) {
    SuiteCtx ctx{cfg.n, cfg.samples, cfg.tol, base.split()};
    try {
      out.push_back(e.fn(ctx));
    } catch (const Error& err) {
      SuiteResult r;
      r.module = e.module;
      r.name = e.name;
      r.pass = false;
      r.detail = err.clause;
      out.push_back(r);
    }
  }
  return out;
}

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const Entry& e : kRegistry)
    names.push_back(std::string(e.module) + "/" + e.name);
  return names;
}

}  // namespace horoclif
