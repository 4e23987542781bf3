#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "horoclif/errors.hpp"
#include "horoclif/matrix.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"
#include "horoclif/spinor.hpp"
#include "oracles.hpp"

using namespace horoclif;
using testutil::rel_diff;

namespace {
Multivector scalar(int n, double v) {
  return Multivector::scalar(Signature{0, n}, v);
}
Multivector gen(int n, int j) { return Multivector::generator(Signature{0, n}, j); }
Multivector zero(int n) { return Multivector{Signature{0, n}}; }

Multivector random_para(int n, Rng& rng) {
  Multivector v{Signature{0, n}};
  v[0] = rng.normal();
  for (int j = 1; j <= n; ++j) v[1u << (j - 1)] = rng.normal();
  return v;
}
}  // namespace

TEST_CASE("Lipschitz membership accepts paravectors and vector products") {
  Rng rng(21);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      Multivector v = random_para(n, rng);
      if (frobenius(v) < 1e-6) continue;
      CHECK(is_lipschitz(v));
    }
  }
  const Multivector i1i2 = gen(3, 1) * gen(3, 2);
  CHECK(is_lipschitz(i1i2));
}

TEST_CASE("Lipschitz membership rejects 1 + i1 i2 i3") {
  const Multivector z = scalar(3, 1.0) + Multivector::blade(Signature{0, 3}, 0b111, 1.0);
  CHECK_FALSE(is_lipschitz(z));
  CHECK_FALSE(is_lipschitz_or_zero(z));
  CHECK(is_lipschitz_or_zero(zero(3)));
}

TEST_CASE("spinor validation and ratio") {
  const Spinor k_inf = make_spinor(scalar(2, 1.0), zero(2));
  CHECK(ratio(k_inf).infinite);

  const Spinor k_i1 = make_spinor(gen(2, 1), scalar(2, 1.0));
  const ParavectorPoint r = ratio(k_i1);
  CHECK_FALSE(r.infinite);
  CHECK(rel_diff(r.value, gen(2, 1)) < 1e-15);

  CHECK_THROWS_AS(make_spinor(gen(2, 1) * gen(2, 2), scalar(2, 1.0)), InvalidSpinor);
  CHECK_THROWS_AS(make_spinor(zero(2), zero(2)), InvalidSpinor);
  try {
    make_spinor(gen(2, 1) * gen(2, 2), scalar(2, 1.0));
    CHECK(false);
  } catch (const InvalidSpinor& e) {
    CHECK(e.clause == "xi*conj(eta) not paravector");
  }
}

TEST_CASE("bracket spot values") {
  const int n = 3;
  const Spinor e1 = make_spinor(scalar(n, 1.0), zero(n));
  const Spinor e2 = make_spinor(zero(n), scalar(n, 1.0));
  CHECK(rel_diff(bracket(e1, e2), scalar(n, 1.0)) == 0.0);

  Rng rng(22);
  const Spinor k = random_spinor(n, rng);
  CHECK(frobenius(bracket(k, k)) < 1e-12 * std::max(1.0, norm2(k)));

  const Multivector U = random_para(n, rng);
  const Spinor kU = make_spinor(zero(n), U);
  CHECK(rel_diff(bracket(e1, kU), U) < 1e-15);
}

TEST_CASE("bracket is antisymmetric up to reversal") {
  Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + rep % 4;
    const Spinor a = random_spinor(n, rng);
    const Spinor b = random_spinor(n, rng);
    CHECK(rel_diff(bracket(b, a), -reverse(bracket(a, b))) < 1e-10);
  }
}

TEST_CASE("hermitian pairing spot values") {
  const int n = 3;
  const Spinor e1 = make_spinor(scalar(n, 1.0), zero(n));
  const Spinor e2 = make_spinor(zero(n), scalar(n, 1.0));
  CHECK(frobenius(hermitian_form(e1, e2)) == 0.0);

  Rng rng(24);
  for (int rep = 0; rep < 30; ++rep) {
    const Spinor k = random_spinor(n, rng);
    const Spinor kc = complement(k);
    CHECK(frobenius(hermitian_form(k, kc)) < 1e-10 * std::max(1.0, norm2(k)));
    const Spinor k2 = random_spinor(n, rng);
    CHECK(rel_diff(hermitian_form(k, k2), bracket(kc, k2)) < 1e-10);
  }
}

TEST_CASE("complement spot values and double application") {
  const int n = 2;
  const Spinor e1 = make_spinor(scalar(n, 1.0), zero(n));
  const Spinor c = complement(e1);
  CHECK(frobenius(c.xi) == 0.0);
  CHECK(rel_diff(c.eta, scalar(n, -1.0)) == 0.0);

  Rng rng(25);
  for (int rep = 0; rep < 30; ++rep) {
    const Spinor k = random_spinor(n, rng);
    const Spinor kc = complement(k);
    CHECK(rel_diff(bracket(k, kc), scalar(n, -norm2(k))) < 1e-10);
    const Spinor cc = complement(kc);
    CHECK(rel_diff(cc.xi, -k.xi) < 1e-12);
    CHECK(rel_diff(cc.eta, -k.eta) < 1e-12);
  }
}

TEST_CASE("decomposition over a spinor and its complement reconstructs") {
  Rng rng(26);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + rep % 4;
    const Spinor k = random_spinor(n, rng);
    Multivector a{Signature{0, n}}, b{Signature{0, n}};
    for (uint32_t i = 0; i < a.size(); ++i) {
      a[i] = rng.normal();
      b[i] = rng.normal();
    }
    const Spinor mixed{a, b};
    const auto [x, y] = decompose(k, mixed);
    const Spinor recon = k * x + complement(k) * y;
    CHECK(rel_diff(recon.xi, mixed.xi) < 1e-9);
    CHECK(rel_diff(recon.eta, mixed.eta) < 1e-9);
  }
}

TEST_CASE("Cayley-Dickson lift pairs with the Clifford product one dimension up") {
  Rng rng(27);
  for (int n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Spinor k1 = random_spinor(n, rng);
      const Spinor k2 = random_spinor(n, rng);
      const Multivector z1 = cayley_lift(k1);
      const Multivector z2 = cayley_lift(k2);
      // product computed by the independent blade oracle, one generator up
      const Multivector prod = oracle::product(conjugate(z1), z2);
      const auto [u, v] = cayley_split(prod);
      const double scale =
          std::max(1.0, std::sqrt(norm2(k1)) * std::sqrt(norm2(k2)));
      CHECK(frobenius(u - hermitian_form(k1, k2)) / scale < 1e-10);
      CHECK(frobenius(v - bracket(k1, k2)) / scale < 1e-10);
      const auto [eu, ev] = cayley_embed(k1, k2);
      CHECK(frobenius(eu - u) / scale < 1e-12);
      CHECK(frobenius(ev - v) / scale < 1e-12);
    }
  }
}

TEST_CASE("conjugate of a lift splits into conj(u) and minus reverse(v)") {
  Rng rng(28);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + rep % 4;
    const Spinor k = random_spinor(n, rng);
    const Multivector z = cayley_lift(k);
    const auto [u, v] = cayley_split(conjugate(z));
    CHECK(rel_diff(u, conjugate(k.xi)) < 1e-12);
    CHECK(rel_diff(v, -reverse(k.eta)) < 1e-12);
  }
}

TEST_CASE("matrix validation spot values") {
  const int n = 2;
  const CliffordMatrix id = identity_matrix(n);
  CHECK_NOTHROW(check_matrix(id, MatrixFlavor::SL));
  CHECK(rel_diff(pseudo_determinant(id), scalar(n, 1.0)) == 0.0);

  Rng rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    const Spinor k = random_spinor(n, rng);
    CHECK_NOTHROW(check_matrix(sl_from_spinor(k), MatrixFlavor::SL));
  }

  CliffordMatrix rot;
  rot.a = zero(n);
  rot.b = scalar(n, -1.0);
  rot.c = scalar(n, 1.0);
  rot.d = zero(n);
  CHECK_NOTHROW(check_matrix(rot, MatrixFlavor::SL));
}

TEST_CASE("mobius action spot values") {
  const int n = 3;
  Rng rng(30);
  const Multivector V = random_para(n, rng);
  const Multivector W = random_para(n, rng);

  CliffordMatrix trans = identity_matrix(n);
  trans.b = V;
  const ParavectorPoint moved = mobius_apply(trans, ParavectorPoint::finite(W));
  CHECK(rel_diff(moved.value, W + V) < 1e-12);

  CliffordMatrix rot;
  rot.a = zero(n);
  rot.b = scalar(n, -1.0);
  rot.c = scalar(n, 1.0);
  rot.d = zero(n);
  const ParavectorPoint inv = mobius_apply(rot, ParavectorPoint::finite(V));
  CHECK(rel_diff(inv.value, -inverse(V)) < 1e-10);

  CHECK(mobius_apply(identity_matrix(n), ParavectorPoint::inf(n)).infinite);
}

TEST_CASE("matrix action on spinors") {
  const int n = 2;
  Rng rng(31);
  const Spinor e1 = make_spinor(scalar(n, 1.0), zero(n));
  for (int rep = 0; rep < 20; ++rep) {
    const Spinor k = random_spinor(n, rng);
    const Spinor back = act_on_spinor(identity_matrix(n), k);
    CHECK(rel_diff(back.xi, k.xi) == 0.0);
    CHECK(rel_diff(back.eta, k.eta) == 0.0);

    const Spinor first_col = act_on_spinor(sl_from_spinor(k), e1);
    CHECK(rel_diff(first_col.xi, k.xi) < 1e-12);
    CHECK(rel_diff(first_col.eta, k.eta) < 1e-12);

    const CliffordMatrix A = random_sl2(n, rng);
    const Spinor k2 = random_spinor(n, rng);
    CHECK(rel_diff(bracket(act_on_spinor(A, k), act_on_spinor(A, k2)),
                   bracket(k, k2)) < 1e-9);
  }
}

TEST_CASE("parabolic translations fix their spinor") {
  const int n = 3;
  Rng rng(32);
  const Spinor e1 = make_spinor(scalar(n, 1.0), zero(n));
  const Multivector V = random_para(n, rng);
  const CliffordMatrix P = parabolic_translation(e1, V);
  CHECK(rel_diff(P.a, scalar(n, 1.0)) < 1e-14);
  CHECK(rel_diff(P.b, V) < 1e-14);
  CHECK(frobenius(P.c) < 1e-14);
  CHECK(rel_diff(P.d, scalar(n, 1.0)) < 1e-14);

  const CliffordMatrix P0 = parabolic_translation(e1, zero(n));
  CHECK(rel_diff(P0.b, zero(n)) == 0.0);

  for (int rep = 0; rep < 20; ++rep) {
    const Spinor k = random_spinor(n, rng);
    const Multivector U = random_para(n, rng);
    const CliffordMatrix Pk = parabolic_translation(k, U);
    CHECK_NOTHROW(check_matrix(Pk, MatrixFlavor::SL));
    const Spinor fixed = act_on_spinor(Pk, k);
    const double scale = std::max(1.0, std::sqrt(norm2(k)) * (1.0 + frobenius(U)));
    CHECK(frobenius(fixed.xi - k.xi) / scale < 1e-9);
    CHECK(frobenius(fixed.eta - k.eta) / scale < 1e-9);
  }
}

TEST_CASE("random generators produce members of their claimed sets") {
  Rng rng(33);
  for (int n = 0; n <= 5; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      CHECK(is_lipschitz(random_lipschitz(n, rng)));
      CHECK_NOTHROW(check_spinor(random_spinor(n, rng)));
      CHECK_NOTHROW(check_matrix(random_sl2(n, rng), MatrixFlavor::SL));
    }
  }
}
