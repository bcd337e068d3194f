#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skt/gauss.hpp"
#include "skt/rational.hpp"

namespace skt {

// Small dense matrix over an exact field (Rat or GRat). Row-major. Everything
// here is exact; float-tolerance linear algebra lives in spectral.hpp.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int r, int c) : rows_(r), cols_(c), e_(static_cast<size_t>(r) * c) {}
  Mat(int r, int c, std::initializer_list<T> vals) : Mat(r, c) {
    assert(static_cast<int>(vals.size()) == r * c);
    int k = 0;
    for (const T& v : vals) e_[k++] = v;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat zero(int r, int c) { return Mat(r, c); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat operator+(const Mat& o) const {
    check_same(o);
    Mat r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same(o);
    Mat r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Mat operator*(const T& s) const {
    Mat r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    assert(square());
    T t{};
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero_mat() const {
    for (const auto& x : e_)
      if (!is_zero(x)) return false;
    return true;
  }
  bool is_symmetric() const { return square() && *this == transpose(); }
  bool is_antisymmetric() const { return square() && (*this + transpose()).is_zero_mat(); }

  std::vector<T> apply(const std::vector<T>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<T> r(rows_, T{});
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_col(int j, const std::vector<T>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  // In-place reduced row echelon form; returns pivot column indices.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int p = -1;
      for (int i = row; i < rows_; ++i)
        if (!is_zero((*this)(i, col))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != row)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      T inv = T(1) / (*this)(row, col);
      for (int j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || is_zero((*this)(i, col))) continue;
        T f = (*this)(i, col);
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Canonical kernel basis from RREF (free variables in column order, unit
  // leading entries).
  std::vector<std::vector<T>> kernel_basis() const {
    Mat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(cols_, T{});
      v[f] = T(1);
      for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  T det() const {
    assert(square());
    Mat m = *this;
    T d(1);
    for (int col = 0; col < cols_; ++col) {
      int p = -1;
      for (int i = col; i < rows_; ++i)
        if (!is_zero(m(i, col))) {
          p = i;
          break;
        }
      if (p < 0) return T{};
      if (p != col) {
        for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(col, j));
        d = -d;
      }
      d = d * m(col, col);
      T inv = T(1) / m(col, col);
      for (int i = col + 1; i < rows_; ++i) {
        if (is_zero(m(i, col))) continue;
        T f = m(i, col) * inv;
        for (int j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    assert(square());
    int n = rows_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = T(1);
    }
    std::vector<int> piv = aug.rref();
    if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }
  int rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RatMat = Mat<Rat>;
using GMat = Mat<GRat>;
using RatVec = std::vector<Rat>;

inline GMat to_gmat(const RatMat& m) {
  GMat g(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g(i, j) = GRat(m(i, j));
  return g;
}

inline RatVec operator+(RatVec a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline RatVec operator-(RatVec a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline RatVec operator*(const Rat& s, RatVec v) {
  for (auto& x : v) x *= s;
  return v;
}
inline bool vec_is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}
inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Particular solution of M x = b, if consistent.
template <class T>
std::optional<std::vector<T>> solve_linear(const Mat<T>& M, const std::vector<T>& b) {
  int r = M.rows(), c = M.cols();
  Mat<T> aug(r, c + 1);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) aug(i, j) = M(i, j);
    aug(i, c) = b[static_cast<size_t>(i)];
  }
  std::vector<int> piv = aug.rref();
  for (size_t k = 0; k < piv.size(); ++k)
    if (piv[k] == c) return std::nullopt;  // inconsistent
  std::vector<T> x(c, T{});
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(static_cast<int>(k), c);
  return x;
}

// Membership of b in the column span of M.
template <class T>
bool in_column_span(const Mat<T>& M, const std::vector<T>& b) {
  return solve_linear(M, b).has_value();
}

template <class T>
Mat<T> from_columns(const std::vector<std::vector<T>>& cols) {
  if (cols.empty()) return Mat<T>(0, 0);
  Mat<T> m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
  return m;
}

}  // namespace skt
