#pragma once

#include <vector>

#include "horoclif/matrix.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/spinor.hpp"

namespace horoclif {

// Pairwise bracket table over an ordered list of spinors.
// lambda[i][i] = 0 and lambda[j][i] = -reverse(lambda[i][j]).
struct LambdaMatrix {
  std::vector<Spinor> spinors;
  std::vector<std::vector<Multivector>> lambda;
};

LambdaMatrix lambda_matrix(const std::vector<Spinor>& ks);

// The bracket of the two spinors; its magnitude is e^{d/2} for the
// horosphere distance d when the centers are distinct.
Multivector lambda_length(const Spinor& k1, const Spinor& k2);

// Value plus the smallest magnitude among the entries that were inverted to
// produce it.
struct QuasiResult {
  Multivector value;
  double conditioning = 0.0;
};

// Positional 2x2 quasideterminants: (1,1) a - b d^-1 c, (1,2) b - a c^-1 d,
// (2,1) c - d b^-1 a, (2,2) d - c a^-1 b. Throws Degenerate below the
// conditioning threshold and propagates NonInvertible.
QuasiResult quasideterminant(const CliffordMatrix& A, int j, int k);

// Left quasi-Plucker coordinate of four spinor columns (1-based indices),
// computed three ways: quasideterminants with s = 1 and s = 2, and the
// bracket form bracket(cols[k], cols[l])^-1 bracket(cols[k], cols[j]).
// All three are required to agree; the bracket form is returned.
QuasiResult quasi_plucker(const std::vector<Spinor>& cols, int l, int j, int k);

// min |bracket(k_i, k_j)| over unordered pairs.
double pair_conditioning(const std::vector<Spinor>& ks);

// Frobenius distance of l31^-1 l23* l42^-1 l14* + l31^-1 l43* l24^-1 l12*
// from 1, normalized by the largest intermediate magnitude. Throws Degenerate
// when any pairwise bracket magnitude falls below 1e-3.
double ptolemy_residual(const Spinor& k1, const Spinor& k2, const Spinor& k3,
                        const Spinor& k4);

// Residual of the reverse-invariance of l12 l32^-1 l31.
double skew_symmetry_residual(const Spinor& k1, const Spinor& k2, const Spinor& k3);

// Residual of lkj llj^-1 lle + lkl ljl^-1 lje = lke over spinors (k, j, l, e).
double holonomy_residual(const Spinor& kk, const Spinor& kj, const Spinor& kl,
                         const Spinor& ke);

}  // namespace horoclif
