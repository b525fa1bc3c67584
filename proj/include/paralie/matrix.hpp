#ifndef PARALIE_MATRIX_HPP
#define PARALIE_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "paralie/rational.hpp"

namespace paralie {

/// Dense matrix over exact rationals. Small sizes only; no pivoting tricks
/// beyond what exact arithmetic needs.
class QMat {
public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  QMat operator+(const QMat& o) const {
    require_same_shape(o);
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  QMat operator-(const QMat& o) const {
    require_same_shape(o);
    QMat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  QMat operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  friend QMat operator*(const Rat& s, const QMat& m) {
    QMat r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.data_.size(); ++i) r.data_[i] = s * m.data_[i];
    return r;
  }

  QMat transpose() const {
    QMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Weight apply(const Weight& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix/vector mismatch");
    Weight r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Rat trace() const {
    Rat t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Gauss-Jordan inverse; throws if singular.
  QMat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
    std::size_t n = rows_;
    QMat a(*this), inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw std::domain_error("singular matrix");
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(piv, j), a(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      }
      Rat d = a(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a(i, col) == 0) continue;
        Rat f = a(i, col);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  Rat det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square");
    std::size_t n = rows_;
    QMat a(*this);
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) return Rat(0);
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
        d = -d;
      }
      d *= a(col, col);
      for (std::size_t i = col + 1; i < n; ++i) {
        if (a(i, col) == 0) continue;
        Rat f = a(i, col) / a(col, col);
        for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      }
    }
    return d;
  }

private:
  void require_same_shape(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

inline QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

} // namespace paralie

#endif
