#pragma once

#include <cstddef>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"

namespace fibstab {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      if (row.size() != cols_)
        throw ShapeMismatch("ragged initializer for RationalMatrix");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static RationalMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64 &rng,
                               long bound = 5, long max_den = 1) {
    RationalMatrix m(rows, cols);
    for (auto &x : m.data_)
      x = random_rational(rng, bound, max_den);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Rational> &data() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto &x : data_)
      if (x != 0)
        return false;
    return true;
  }

  bool is_identity() const {
    if (!square())
      return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0))
          return false;
    return true;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  /// Copy of the sub-block starting at (r0, c0).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
      throw ShapeMismatch("block out of range");
    RationalMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j)
        b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  RationalMatrix columns(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
  RationalMatrix row_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

  void set_block(std::size_t r0, std::size_t c0, const RationalMatrix &b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
      throw ShapeMismatch("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        (*this)(r0 + i, c0 + j) = b(i, j);
  }

  RationalMatrix &operator+=(const RationalMatrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  RationalMatrix &operator-=(const RationalMatrix &o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  RationalMatrix &operator*=(const Rational &s) {
    for (auto &x : data_)
      x *= s;
    return *this;
  }

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix &b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix &b) { return a -= b; }
  friend RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }
  friend RationalMatrix operator*(RationalMatrix a, const Rational &s) { return a *= s; }
  friend RationalMatrix operator*(const Rational &s, RationalMatrix a) { return a *= s; }

  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.cols_ != b.rows_)
      throw ShapeMismatch("product of " + a.shape() + " and " + b.shape());
    RationalMatrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational &aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          tmp = aik * b(k, j);
          c(i, j) += tmp;
        }
      }
    return c;
  }

  friend bool operator==(const RationalMatrix &a, const RationalMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  void check_same_shape(const RationalMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch("shapes " + shape() + " and " + o.shape() + " differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation [a | b].
inline RationalMatrix hconcat(const RationalMatrix &a, const RationalMatrix &b) {
  if (a.rows() != b.rows())
    throw ShapeMismatch("hconcat row counts differ");
  RationalMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

inline RationalMatrix diagonal(const std::vector<Rational> &d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

} // namespace fibstab
