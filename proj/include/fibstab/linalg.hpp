#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fibstab/matrix.hpp"

namespace fibstab {

/// Row-reduced echelon form together with its pivot columns.
struct Echelon {
  RationalMatrix rref;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

inline std::vector<std::vector<Integer>> clear_row_denominators(const RationalMatrix &m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

/// Fraction-free Gauss-Jordan elimination (Bareiss). Every division is exact;
/// all pivot entries equal the last pivot on return.
inline std::vector<std::size_t> bareiss_gauss_jordan(std::vector<std::vector<Integer>> &a,
                                                     std::size_t ncols) {
  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c] == 0)
      ++p;
    if (p == nrows)
      continue;
    std::swap(a[p], a[r]);
    const Integer piv = a[r][c];
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r)
        continue;
      const Integer factor = a[i][c];
      for (std::size_t j = 0; j < ncols; ++j) {
        t1 = piv * a[i][j];
        if (factor != 0 && a[r][j] != 0) {
          t2 = factor * a[r][j];
          t1 -= t2;
        }
        if (!mpz_divisible_p(t1.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss division not exact");
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace detail

inline Echelon echelon(const RationalMatrix &m) {
  auto a = detail::clear_row_denominators(m);
  auto pivots = detail::bareiss_gauss_jordan(a, m.cols());
  Echelon e{RationalMatrix(m.rows(), m.cols()), pivots};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Integer &piv = a[i][pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational q(a[i][j], piv);
      q.canonicalize();
      e.rref(i, j) = q;
    }
  }
  return e;
}

inline std::size_t mat_rank(const RationalMatrix &m) {
  auto a = detail::clear_row_denominators(m);
  return detail::bareiss_gauss_jordan(a, m.cols()).size();
}

/// Kernel basis as the columns of the returned matrix, in reduced column
/// echelon form (so the output is canonical for a given kernel).
inline RationalMatrix mat_kernel(const RationalMatrix &m) {
  const std::size_t n = m.cols();
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j])
      free_cols.push_back(j);

  RationalMatrix basis_rows(free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis_rows(k, f) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      basis_rows(k, e.pivots[i]) = -e.rref(i, f);
  }
  if (free_cols.empty())
    return RationalMatrix(n, 0);
  Echelon ce = echelon(basis_rows);
  return ce.rref.transpose();
}

inline RationalMatrix mat_inverse(const RationalMatrix &m) {
  if (!m.square())
    throw ShapeMismatch("inverse of non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  Echelon e = echelon(hconcat(m, RationalMatrix::identity(n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw SingularMatrix("matrix of size " + std::to_string(n) + " is singular");
  return e.rref.block(0, n, n, n);
}

inline Rational determinant(const RationalMatrix &m) {
  if (!m.square())
    throw ShapeMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  // Bareiss on the row-scaled integer matrix; undo the row scaling at the end.
  Rational scale = 1;
  auto a = detail::clear_row_denominators(m);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale /= l;
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Rational(a[n - 1][n - 1]) * scale * sign;
}

/// Solution set {particular + kernel * t} of m * x = rhs.
struct AffineSolution {
  RationalMatrix particular; // cols(m) x rhs.cols()
  RationalMatrix kernel;     // cols(m) x dim ker(m)
};

inline std::optional<AffineSolution> solve_affine(const RationalMatrix &m,
                                                  const RationalMatrix &rhs) {
  if (rhs.rows() != m.rows())
    throw ShapeMismatch("solve: rhs has " + std::to_string(rhs.rows()) + " rows, expected " +
                        std::to_string(m.rows()));
  const std::size_t n = m.cols();
  Echelon e = echelon(hconcat(m, rhs));
  RationalMatrix x(n, rhs.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n)
      return std::nullopt;
    for (std::size_t k = 0; k < rhs.cols(); ++k)
      x(e.pivots[i], k) = e.rref(i, n + k);
  }
  return AffineSolution{std::move(x), mat_kernel(m)};
}

} // namespace fibstab
