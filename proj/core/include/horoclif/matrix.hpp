#pragma once

#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"
#include "horoclif/spinor.hpp"

namespace horoclif {

// SL: pseudo-determinant 1, paravector pairings a b*, c d*, c* a, d* b.
// GL: pseudo-determinant real and nonzero, same pairings.
// GLZ: pseudo-determinant any real, zero rows/columns admitted (the monoid
//      closure; light-cone point matrices live here).
enum class MatrixFlavor { SL, GL, GLZ };

struct CliffordMatrix {
  Multivector a, b, c, d;  // [[a, b], [c, d]]
  int n() const { return a.n(); }
};

// reverse(a)*d - reverse(c)*b.
Multivector pseudo_determinant(const CliffordMatrix& m);

CliffordMatrix identity_matrix(int n_dims);
CliffordMatrix matmul(const CliffordMatrix& A, const CliffordMatrix& B);

// Conjugate transpose [[conj(a), conj(c)], [conj(b), conj(d)]].
CliffordMatrix dagger(const CliffordMatrix& m);

// Validates entries, the row/column paravector pairings, and the flavor's
// pseudo-determinant condition (for SL also the variant identities
// a d* - b c* = d* a - b* c = 1). Throws InvalidMatrix.
CliffordMatrix make_matrix(const Multivector& a, const Multivector& b,
                           const Multivector& c, const Multivector& d,
                           MatrixFlavor flavor);
void check_matrix(const CliffordMatrix& m, MatrixFlavor flavor);

// Fractional linear action (aV + b)(cV + d)^{-1}; infinity is a first-class
// value (near-zero denominator threshold 1e-12 absolute).
ParavectorPoint mobius_apply(const CliffordMatrix& A, const ParavectorPoint& v);

// Column action (a xi + b eta, c xi + d eta).
Spinor act_on_spinor(const CliffordMatrix& A, const Spinor& k);

// [[1 - xi V eta*, xi V xi*], [-eta V eta*, 1 + eta V xi*]]. Fixes k, and
// composition in V adds translations.
CliffordMatrix parabolic_translation(const Spinor& k, const Multivector& V);

// SL matrix [k, -check(k)/|k|^2] whose first column is k.
CliffordMatrix sl_from_spinor(const Spinor& k);

// [[d*, -b*], [-c*, a*]]: inverse of an SL matrix.
CliffordMatrix sl_inverse(const CliffordMatrix& A);

// Decoration-lemma generators: kind 1 = translation by paravector V,
// kind 2 = inversion [[0, -1], [1, 0]], kind 3 = scaling [[a, 0], [0, a*^-1]].
struct SlGenerator {
  int kind = 1;
  Multivector param;
};

CliffordMatrix generator_matrix(const SlGenerator& g, int n_dims);

// Random word of length <= 8 in the three generators.
CliffordMatrix random_sl2(int n_dims, Rng& rng);

}  // namespace horoclif
