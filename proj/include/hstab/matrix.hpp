#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "hstab/ints.hpp"

namespace hstab {

using IVec = std::vector<Int>;

// Dense integer matrix, row major. Small and exact; all the linear algebra
// in this project is desk scale, so no sparsity tricks.
class IMat {
 public:
  IMat() = default;
  IMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * size_t(cols)) {}
  IMat(std::initializer_list<std::initializer_list<Int>> rows) {
    r_ = int(rows.size());
    c_ = r_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(r_) * c_);
    for (auto& row : rows) {
      assert(int(row.size()) == c_);
      for (auto& v : row) a_.push_back(v);
    }
  }

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Int& operator()(int i, int j) {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return a_[size_t(i) * c_ + j];
  }
  const Int& operator()(int i, int j) const {
    assert(i >= 0 && i < r_ && j >= 0 && j < c_);
    return a_[size_t(i) * c_ + j];
  }

  bool operator==(const IMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const IMat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  IVec col(int j) const {
    IVec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const IVec& v) {
    assert(int(v.size()) == r_);
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  IMat transpose() const {
    IMat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IMat submatrix(int i0, int j0, int nr, int nc) const {
    IMat s(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) s(i, j) = (*this)(i0 + i, j0 + j);
    return s;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

inline IMat operator*(const IMat& a, const IMat& b) {
  assert(a.cols() == b.rows());
  IMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IVec operator*(const IMat& a, const IVec& x) {
  assert(a.cols() == int(x.size()));
  IVec y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

inline IMat operator+(const IMat& a, const IMat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  IMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline IMat operator-(const IMat& a, const IMat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  IMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline IMat hcat(const IMat& a, const IMat& b) {
  assert(a.rows() == b.rows());
  IMat c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

inline Int dot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline IVec operator+(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IVec operator-(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IVec scale(const Int& c, const IVec& v) {
  IVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

inline bool is_zero(const IVec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace hstab
