// Dense matrices over an exact field: Gaussian elimination, kernels, solving,
// determinants. Nothing fancy; every entry is an exact Element.
#pragma once

#include <optional>
#include <vector>

#include "gwdeg/field.hpp"

namespace gwdeg {

using Vec = std::vector<Element>;

class Mat {
public:
  Mat() = default;
  Mat(FieldPtr k, size_t rows, size_t cols)
      : k_(std::move(k)), rows_(rows), cols_(cols), a_(rows * cols, k_->zero()) {}

  static Mat identity(const FieldPtr& k, size_t n) {
    Mat m(k, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = k->one();
    return m;
  }

  const FieldPtr& field() const { return k_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Element& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Element& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const {
    Mat r(k_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t t = 0; t < cols_; ++t) {
        const Element& x = at(i, t);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + x * o.at(t, j);
      }
    return r;
  }

  Vec operator*(const Vec& v) const {
    Vec r(rows_, k_->zero());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = r.a_[t] + o.a_[t];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = r.a_[t] - o.a_[t];
    return r;
  }

  Mat scaled(const Element& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
  }

  Mat transpose() const {
    Mat r(k_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat pow(size_t e) const {
    Mat acc = identity(k_, rows_), b = *this;
    while (e > 0) {
      if (e & 1) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t t = 0; t < a_.size(); ++t)
      if (!(a_[t] == o.a_[t])) return false;
    return true;
  }

  /// Reduced row echelon form; records pivot columns.
  Mat rref(std::vector<size_t>* pivot_cols = nullptr) const {
    Mat m = *this;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t sel = r;
      while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
      Element inv = m.at(r, c).inverse();
      for (size_t j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || m.at(i, c).is_zero()) continue;
        Element f = m.at(i, c);
        for (size_t j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return m;
  }

  size_t rank() const {
    std::vector<size_t> p;
    rref(&p);
    return p.size();
  }

  /// Columns form a basis of the kernel.
  Mat kernel() const {
    std::vector<size_t> pivots;
    Mat R = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Mat K(k_, cols_, free_cols.size());
    for (size_t t = 0; t < free_cols.size(); ++t) {
      size_t fc = free_cols[t];
      K.at(fc, t) = k_->one();
      for (size_t r = 0; r < pivots.size(); ++r) K.at(pivots[r], t) = -R.at(r, fc);
    }
    return K;
  }

  /// One solution of A x = b, if consistent.
  std::optional<Vec> solve(const Vec& b) const {
    Mat aug(k_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> pivots;
    Mat R = aug.rref(&pivots);
    for (size_t c : pivots)
      if (c == cols_) return std::nullopt;  // row [0 ... 0 | 1]
    Vec x(cols_, k_->zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = R.at(r, cols_);
    return x;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(k_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = k_->one();
    }
    std::vector<size_t> pivots;
    Mat R = aug.rref(&pivots);
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t r = 0; r < rows_; ++r)
      if (pivots[r] != r) return std::nullopt;
    Mat inv(k_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = R.at(i, cols_ + j);
    return inv;
  }

  Element det() const {
    if (rows_ != cols_) fail(Errc::degenerate_form, "determinant of non-square matrix");
    Mat m = *this;
    Element d = k_->one();
    for (size_t c = 0; c < cols_; ++c) {
      size_t sel = c;
      while (sel < rows_ && m.at(sel, c).is_zero()) ++sel;
      if (sel == rows_) return k_->zero();
      if (sel != c) {
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(c, j));
        d = -d;
      }
      d = d * m.at(c, c);
      Element inv = m.at(c, c).inverse();
      for (size_t i = c + 1; i < rows_; ++i) {
        if (m.at(i, c).is_zero()) continue;
        Element f = m.at(i, c) * inv;
        for (size_t j = c; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(c, j);
      }
    }
    return d;
  }

  /// Horizontal concatenation.
  static Mat hcat(const Mat& a, const Mat& b) {
    Mat r(a.k_, a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  Vec col(size_t j) const {
    Vec v(rows_, k_->zero());
    for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  void set_col(size_t j, const Vec& v) {
    for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

private:
  FieldPtr k_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Element> a_;
};

inline Element dot(const Vec& a, const Vec& b) {
  Element s = a.at(0).field()->zero();
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace gwdeg
