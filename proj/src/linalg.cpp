#include "hstab/linalg.hpp"

#include <algorithm>

namespace hstab {

namespace {

struct SnfWorker {
  IMat S, U, Uinv, V, Vinv;
  int m, n;

  explicit SnfWorker(const IMat& A)
      : S(A),
        U(IMat::identity(A.rows())),
        Uinv(IMat::identity(A.rows())),
        V(IMat::identity(A.cols())),
        Vinv(IMat::identity(A.cols())),
        m(A.rows()),
        n(A.cols()) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(S(i, k), S(j, k));
    for (int k = 0; k < m; ++k) std::swap(U(i, k), U(j, k));
    for (int k = 0; k < m; ++k) std::swap(Uinv(k, i), Uinv(k, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m; ++k) std::swap(S(k, i), S(k, j));
    for (int k = 0; k < n; ++k) std::swap(V(k, i), V(k, j));
    for (int k = 0; k < n; ++k) std::swap(Vinv(i, k), Vinv(j, k));
  }

  // row i += c * row j
  void add_row(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < n; ++k) S(i, k) += c * S(j, k);
    for (int k = 0; k < m; ++k) U(i, k) += c * U(j, k);
    for (int k = 0; k < m; ++k) Uinv(k, j) -= c * Uinv(k, i);
  }

  // col i += c * col j
  void add_col(int i, int j, const Int& c) {
    if (c == 0) return;
    for (int k = 0; k < m; ++k) S(k, i) += c * S(k, j);
    for (int k = 0; k < n; ++k) V(k, i) += c * V(k, j);
    for (int k = 0; k < n; ++k) Vinv(j, k) -= c * Vinv(i, k);
  }

  void negate_row(int i) {
    for (int k = 0; k < n; ++k) S(i, k) = -S(i, k);
    for (int k = 0; k < m; ++k) U(i, k) = -U(i, k);
    for (int k = 0; k < m; ++k) Uinv(k, i) = -Uinv(k, i);
  }

  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        Int a = abs_int(S(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    int t = 0;
    int lim = std::min(m, n);
    while (t < lim) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = false;
      while (!clean) {
        clean = true;
        for (int i = t + 1; i < m; ++i) {
          if (S(i, t) == 0) continue;
          Int q = round_div(S(i, t), S(t, t));
          add_row(i, t, -q);
          if (S(i, t) != 0) {
            // remainder is strictly smaller than the pivot
            swap_rows(t, i);
            clean = false;
          }
        }
        for (int j = t + 1; j < n; ++j) {
          if (S(t, j) == 0) continue;
          Int q = round_div(S(t, j), S(t, t));
          add_col(j, t, -q);
          if (S(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
        if (!clean) continue;
        // pivot must divide every remaining entry for the divisibility chain
        for (int i = t + 1; i < m && clean; ++i)
          for (int j = t + 1; j < n && clean; ++j)
            if (S(i, j) % S(t, t) != 0) {
              add_row(t, i, 1);
              clean = false;
            }
      }
      ++t;
    }
    for (int i = 0; i < lim; ++i)
      if (S(i, i) < 0) negate_row(i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IMat& A) {
  SnfWorker w(A);
  w.run();
  SmithDecomposition d;
  d.U = std::move(w.U);
  d.Uinv = std::move(w.Uinv);
  d.V = std::move(w.V);
  d.Vinv = std::move(w.Vinv);
  d.S = std::move(w.S);
  d.rank = 0;
  int lim = std::min(d.S.rows(), d.S.cols());
  for (int i = 0; i < lim; ++i)
    if (d.S(i, i) != 0) ++d.rank;
  return d;
}

Int det(const IMat& A) {
  if (A.rows() != A.cols()) throw DomainError("determinant of a non-square matrix");
  int n = A.rows();
  if (n == 0) return 1;
  IMat M = A;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

std::optional<IVec> solve(const IMat& A, const IVec& b) {
  auto d = smith_normal_form(A);
  IVec y = d.U * b;
  IVec z(A.cols(), Int(0));
  for (int i = 0; i < int(y.size()); ++i) {
    int lim = std::min(A.rows(), A.cols());
    if (i < lim && d.S(i, i) != 0) {
      if (y[i] % d.S(i, i) != 0) return std::nullopt;
      z[i] = y[i] / d.S(i, i);
    } else {
      if (y[i] != 0) return std::nullopt;
    }
  }
  return d.V * z;
}

IMat kernel_basis(const IMat& A) {
  auto d = smith_normal_form(A);
  int n = A.cols();
  int k = n - d.rank;
  IMat K(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) K(i, j) = d.V(i, d.rank + j);
  return K;
}

IMat unimodular_inverse(const IMat& A) {
  if (A.rows() != A.cols()) throw DomainError("inverse of a non-square matrix");
  auto d = smith_normal_form(A);
  for (int i = 0; i < A.rows(); ++i)
    if (d.S(i, i) != 1) throw DomainError("matrix is not unimodular");
  return d.V * d.U;
}

IMat lattice_column_basis(const IMat& X) {
  auto d = smith_normal_form(X);
  IMat B(X.rows(), d.rank);
  for (int j = 0; j < d.rank; ++j)
    for (int i = 0; i < X.rows(); ++i) B(i, j) = d.Uinv(i, j) * d.S(j, j);
  return B;
}

int rank_of(const IMat& A) { return smith_normal_form(A).rank; }

}  // namespace hstab
