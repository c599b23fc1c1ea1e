#pragma once

#include <optional>

#include "hstab/matrix.hpp"

namespace hstab {

// U*A*V = S with U, V unimodular and S diagonal, entries non-negative,
// each dividing the next. Uinv and Vinv are maintained alongside so that
// lattice computations never need a separate inversion.
struct SmithDecomposition {
  IMat U, Uinv, V, Vinv, S;
  int rank = 0;

  IVec diagonal() const {
    int n = std::min(S.rows(), S.cols());
    IVec d(n);
    for (int i = 0; i < n; ++i) d[i] = S(i, i);
    return d;
  }
};

SmithDecomposition smith_normal_form(const IMat& A);

// Exact determinant by fraction-free elimination.
Int det(const IMat& A);

// Integer solution of A x = b, if one exists.
std::optional<IVec> solve(const IMat& A, const IVec& b);

// Basis of { x : A x = 0 } as columns of an n-by-k matrix. The columns
// generate the full (saturated) kernel lattice.
IMat kernel_basis(const IMat& A);

// Inverse of a matrix with determinant +-1.
IMat unimodular_inverse(const IMat& A);

// Basis of the lattice generated by the columns of X, as columns of an
// n-by-r matrix with r the rank of X.
IMat lattice_column_basis(const IMat& X);

// Rank over Q.
int rank_of(const IMat& A);

}  // namespace hstab
