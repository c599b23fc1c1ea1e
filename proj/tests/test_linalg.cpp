#include <doctest.h>

#include <functional>
#include <random>

#include "hstab/linalg.hpp"

using namespace hstab;

namespace {

// k-th determinantal divisor: gcd of all k x k minors
Int minor_gcd(const IMat& A, int k) {
  int m = A.rows(), n = A.cols();
  std::vector<int> rows(k), cols(k);
  Int g = 0;
  std::function<void(int, int)> pick_cols = [&](int idx, int start) {
    if (idx == k) {
      IMat sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = A(rows[i], cols[j]);
      g = gcd_int(g, det(sub));
      return;
    }
    for (int c = start; c < n; ++c) {
      cols[idx] = c;
      pick_cols(idx + 1, c + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int idx, int start) {
    if (idx == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = start; r < m; ++r) {
      rows[idx] = r;
      pick_rows(idx + 1, r + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

// expected SNF diagonal from determinantal divisors
IVec diagonal_oracle(const IMat& A) {
  int n = std::min(A.rows(), A.cols());
  IVec d(n, Int(0));
  Int prev = 1;
  for (int k = 1; k <= n; ++k) {
    Int g = minor_gcd(A, k);
    if (g == 0) break;
    d[k - 1] = g / prev;
    prev = g;
  }
  return d;
}

void check_snf_postconditions(const IMat& A) {
  auto s = smith_normal_form(A);
  CHECK(s.U * A * s.V == s.S);
  CHECK(abs_int(det(s.U)) == 1);
  CHECK(abs_int(det(s.V)) == 1);
  CHECK(s.U * s.Uinv == IMat::identity(A.rows()));
  CHECK(s.V * s.Vinv == IMat::identity(A.cols()));
  auto d = s.diagonal();
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] == 0) CHECK(d[i + 1] == 0);
    if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
  }
  for (int i = 0; i < s.S.rows(); ++i)
    for (int j = 0; j < s.S.cols(); ++j)
      if (i != j) CHECK(s.S(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  IMat I = IMat::identity(3);
  auto s = smith_normal_form(I);
  CHECK(s.S == I);
  CHECK(s.rank == 3);
}

TEST_CASE("smith normal form pinned example") {
  IMat A{{Int(2), Int(4)}, {Int(6), Int(8)}};
  auto s = smith_normal_form(A);
  CHECK(s.S(0, 0) == 2);
  CHECK(s.S(1, 1) == 4);
  check_snf_postconditions(A);
}

TEST_CASE("smith normal form of the zero matrix") {
  IMat Z(2, 3);
  auto s = smith_normal_form(Z);
  CHECK(s.rank == 0);
  CHECK(s.S.is_zero());
}

TEST_CASE("smith diagonal equals the minor-gcd oracle on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> ent(-3, 3);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    IMat A(dim(rng), dim(rng));
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < A.cols(); ++j) A(i, j) = ent(rng);
    auto s = smith_normal_form(A);
    CHECK(s.diagonal() == diagonal_oracle(A));
    if (trial % 25 == 0) check_snf_postconditions(A);
  }
}

TEST_CASE("determinant by fraction-free elimination") {
  IMat A{{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}, {Int(7), Int(8), Int(10)}};
  CHECK(det(A) == -3);
  CHECK(det(IMat::identity(4)) == 1);
  CHECK(det(IMat(0, 0)) == 1);
}

TEST_CASE("integer linear solve") {
  IMat A{{Int(2), Int(0)}, {Int(0), Int(3)}};
  auto x = solve(A, {Int(4), Int(9)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
  CHECK((*x)[1] == 3);
  CHECK_FALSE(solve(A, {Int(1), Int(0)}).has_value());
}

TEST_CASE("kernel basis generates the saturated kernel") {
  IMat A{{Int(1), Int(1), Int(1)}};
  IMat K = kernel_basis(A);
  CHECK(K.cols() == 2);
  CHECK((A * K).is_zero());
  // (1,-1,0) must be an integer combination of the basis
  auto y = solve(K, {Int(1), Int(-1), Int(0)});
  CHECK(y.has_value());
}

TEST_CASE("unimodular inverse") {
  IMat A{{Int(1), Int(2)}, {Int(0), Int(1)}};
  IMat Ainv = unimodular_inverse(A);
  CHECK(A * Ainv == IMat::identity(2));
}

TEST_CASE("lattice column basis spans the same lattice") {
  IMat X{{Int(2), Int(4), Int(0)}, {Int(0), Int(0), Int(6)}};
  IMat B = lattice_column_basis(X);
  CHECK(B.cols() == 2);
  for (int j = 0; j < X.cols(); ++j) CHECK(solve(B, X.col(j)).has_value());
  for (int j = 0; j < B.cols(); ++j) CHECK(solve(X, B.col(j)).has_value());
}
