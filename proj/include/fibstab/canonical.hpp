#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibstab/error.hpp"
#include "fibstab/linalg.hpp"
#include "fibstab/matrix.hpp"
#include "fibstab/rational.hpp"
#include "fibstab/strata.hpp"

namespace fibstab {

/// n distinct points x_1..x_n of A^1 and the algebra C[z]/prod(z - x_i).
class PointConfig {
public:
  PointConfig() = default;
  explicit PointConfig(std::vector<Rational> xs) : xs_(std::move(xs)) {
    for (std::size_t i = 0; i < xs_.size(); ++i)
      for (std::size_t j = i + 1; j < xs_.size(); ++j)
        if (xs_[i] == xs_[j])
          throw InvalidArgument("points must be pairwise distinct");
    // Coefficients of prod (z - x_i) give the elementary symmetric functions.
    std::vector<Rational> poly{1};
    for (const auto &x : xs_) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] += poly[k];
        next[k] -= poly[k] * x;
      }
      poly = std::move(next);
    }
    const std::size_t n = xs_.size();
    s_.assign(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k)
      s_[k] = (k % 2 == 0 ? 1 : -1) * poly[n - k];
  }

  static PointConfig range(std::size_t n) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i)
      xs.emplace_back(static_cast<long>(i));
    return PointConfig(std::move(xs));
  }

  std::size_t size() const noexcept { return xs_.size(); }
  const std::vector<Rational> &points() const noexcept { return xs_; }
  /// s_k, with s_0 = 1.
  const Rational &s(std::size_t k) const { return s_.at(k); }

  /// M with shift(V) = V * M: multiplication by z on coefficient columns.
  RationalMatrix shift_matrix() const {
    const std::size_t n = size();
    RationalMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0)
        m(j - 1, j) = 1;
      const std::size_t k = n - j;
      m(n - 1, j) += ((k - 1) % 2 == 0 ? 1 : -1) * s_[k];
    }
    return m;
  }

  /// Vand(i, j) = x_i^j.
  RationalMatrix vandermonde() const {
    const std::size_t n = size();
    RationalMatrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational p = 1;
      for (std::size_t j = 0; j < n; ++j) {
        v(i, j) = p;
        p *= xs_[i];
      }
    }
    return v;
  }

  friend bool operator==(const PointConfig &a, const PointConfig &b) { return a.xs_ == b.xs_; }

private:
  std::vector<Rational> xs_;
  std::vector<Rational> s_;
};

struct MatrixPairE {
  long r1 = 0, r2 = 0;
  RationalMatrix left;
  RationalMatrix right;
  PointConfig config;

  MatrixPairE() = default;
  MatrixPairE(long r, PointConfig cfg, RationalMatrix l, RationalMatrix rt)
      : left(std::move(l)), right(std::move(rt)), config(std::move(cfg)) {
    const long n = static_cast<long>(config.size());
    if (r < 1 || n < 1)
      throw InvalidArgument("need r >= 1 and n >= 1");
    const auto t = generic_split(r, n);
    r1 = t.parts[0].second;
    r2 = t.parts.size() > 1 ? t.parts[1].second : 0;
    for (const auto *m : {&left, &right})
      if (m->rows() != static_cast<std::size_t>(r) || m->cols() != static_cast<std::size_t>(n))
        throw ShapeMismatch("extension data must be " + std::to_string(r) + "x" +
                            std::to_string(n) + ", got " + m->shape());
  }

  static MatrixPairE random(long r, PointConfig cfg, std::mt19937_64 &rng, long bound = 5,
                            long max_den = 1) {
    const std::size_t n = cfg.size();
    auto l = RationalMatrix::random(r, n, rng, bound, max_den);
    auto rt = RationalMatrix::random(r, n, rng, bound, max_den);
    return MatrixPairE(r, std::move(cfg), std::move(l), std::move(rt));
  }

  long r() const noexcept { return r1 + r2; }
  long n() const noexcept { return static_cast<long>(config.size()); }

  friend bool operator==(const MatrixPairE &a, const MatrixPairE &b) {
    return a.r1 == b.r1 && a.r2 == b.r2 && a.left == b.left && a.right == b.right &&
           a.config == b.config;
  }
};

/// (A, B, H(z) = H0 + z H1) acting on U (top r1 rows) and V (bottom r2 rows).
struct AutLElement {
  RationalMatrix A, B, H0, H1;

  static AutLElement identity(long r1, long r2) {
    return {RationalMatrix::identity(r1), RationalMatrix::identity(r2), RationalMatrix(r1, r2),
            RationalMatrix(r1, r2)};
  }

  static AutLElement random(long r1, long r2, std::mt19937_64 &rng, long bound = 4) {
    auto invertible = [&](long k) {
      for (;;) {
        auto m = RationalMatrix::random(k, k, rng, bound);
        if (determinant(m) != 0)
          return m;
      }
    };
    return {invertible(r1), invertible(r2), RationalMatrix::random(r1, r2, rng, bound),
            RationalMatrix::random(r1, r2, rng, bound)};
  }

  long r1() const { return static_cast<long>(A.rows()); }
  long r2() const { return static_cast<long>(B.rows()); }

  bool is_identity() const {
    return A.is_identity() && B.is_identity() && H0.is_zero() && H1.is_zero();
  }

  bool is_invertible() const { return determinant(A) != 0 && determinant(B) != 0; }

  void check_shapes() const {
    const std::size_t a = A.rows(), b = B.rows();
    if (!A.square() || !B.square() || H0.rows() != a || H0.cols() != b || H1.rows() != a ||
        H1.cols() != b)
      throw ShapeMismatch("inconsistent group element blocks");
  }

  /// g * h, acting as g after h.
  friend AutLElement compose(const AutLElement &g, const AutLElement &h) {
    g.check_shapes();
    h.check_shapes();
    if (g.r1() != h.r1() || g.r2() != h.r2())
      throw ShapeMismatch("group elements of different shapes");
    return {g.A * h.A, g.B * h.B, g.A * h.H0 + g.H0 * h.B, g.A * h.H1 + g.H1 * h.B};
  }

  friend bool operator==(const AutLElement &a, const AutLElement &b) {
    return a.A == b.A && a.B == b.B && a.H0 == b.H0 && a.H1 == b.H1;
  }
};

enum class Half { Left, Right, Both };

namespace detail {

inline RationalMatrix act_on_half(const AutLElement &g, const RationalMatrix &m,
                                  const RationalMatrix &shift, long r1, long r2) {
  const std::size_t n = m.cols();
  const auto U = m.row_range(0, r1);
  const auto V = m.row_range(r1, r2);
  RationalMatrix out(m.rows(), n);
  out.set_block(0, 0, g.A * U + g.H0 * V + g.H1 * (V * shift));
  out.set_block(r1, 0, g.B * V);
  return out;
}

} // namespace detail

inline RationalMatrix shift(const MatrixPairE &e, const RationalMatrix &V) {
  return V * e.config.shift_matrix();
}

inline MatrixPairE act_autL(const AutLElement &g, const MatrixPairE &e, Half which = Half::Both) {
  g.check_shapes();
  if (g.r1() != e.r1 || g.r2() != e.r2)
    throw ShapeMismatch("group element is for (r1, r2) = (" + std::to_string(g.r1()) + ", " +
                        std::to_string(g.r2()) + "), data has (" + std::to_string(e.r1) + ", " +
                        std::to_string(e.r2) + ")");
  const auto sh = e.config.shift_matrix();
  MatrixPairE out = e;
  if (which != Half::Right)
    out.left = detail::act_on_half(g, e.left, sh, e.r1, e.r2);
  if (which != Half::Left)
    out.right = detail::act_on_half(g, e.right, sh, e.r1, e.r2);
  return out;
}

struct Blocks {
  RationalMatrix I, II, IIp, III, IV, IVp, V, VI, VIp;
};

inline Blocks extract_blocks(const MatrixPairE &e, Half half = Half::Left) {
  const long r1 = e.r1, r2 = e.r2, r = e.r();
  if (e.n() < r + r2)
    throw TooFewColumns("need n >= r + r2 = " + std::to_string(r + r2) + ", got n = " +
                        std::to_string(e.n()));
  const RationalMatrix &m = half == Half::Right ? e.right : e.left;
  const auto U = m.row_range(0, r1);
  const auto Vm = m.row_range(r1, r2);
  const auto Vs = shift(e, Vm);
  Blocks b;
  b.I = U.columns(0, r1);
  b.II = Vm.columns(0, r1);
  b.IIp = Vs.columns(0, r1);
  b.III = U.columns(r1, r2);
  b.IV = Vm.columns(r1, r2);
  b.IVp = Vs.columns(r1, r2);
  b.V = U.columns(r, r2);
  b.VI = Vm.columns(r, r2);
  b.VIp = Vs.columns(r, r2);
  return b;
}

/// Left half has [I] = 1, [III] = 0, [IV] = 1, [V] = 0.
inline bool is_canonical(const MatrixPairE &e) {
  const auto b = extract_blocks(e);
  return b.I.is_identity() && b.III.is_zero() && b.IV.is_identity() && b.V.is_zero();
}

struct Reduction {
  MatrixPairE canonical;
  AutLElement g_used;
};

inline Reduction autL_reduce(const MatrixPairE &e) {
  const long r1 = e.r1, r2 = e.r2;
  AutLElement g = AutLElement::identity(r1, r2);
  MatrixPairE cur = e;
  auto apply = [&](const AutLElement &h) {
    cur = act_autL(h, cur);
    g = compose(h, g);
  };
  auto b = extract_blocks(cur);

  if (r2 > 0) {
    if (determinant(b.IV) == 0)
      throw GenericityFailure("IV");
    auto step = AutLElement::identity(r1, r2);
    step.B = mat_inverse(b.IV);
    apply(step);

    b = extract_blocks(cur);
    step = AutLElement::identity(r1, r2);
    step.H0 = -b.III;
    apply(step);

    b = extract_blocks(cur);
    const auto W = b.IVp * b.VI - b.VIp;
    if (determinant(W) == 0)
      throw GenericityFailure("W");
    step = AutLElement::identity(r1, r2);
    step.H1 = b.V * mat_inverse(W);
    step.H0 = -(step.H1 * b.IVp);
    apply(step);
    b = extract_blocks(cur);
  }

  if (determinant(b.I) == 0)
    throw GenericityFailure("I");
  auto step = AutLElement::identity(r1, r2);
  step.A = mat_inverse(b.I);
  apply(step);
  return {cur, g};
}

struct StabilizerSolution {
  AutLElement particular;
  std::vector<AutLElement> directions; // tangent directions of the solution space

  bool trivial() const { return directions.empty() && particular.is_identity(); }
};

namespace detail {

inline std::vector<Rational> canonical_entries(const MatrixPairE &e) {
  const auto b = extract_blocks(e);
  std::vector<Rational> out;
  for (const auto *m : {&b.I, &b.III, &b.IV, &b.V})
    out.insert(out.end(), m->data().begin(), m->data().end());
  return out;
}

inline AutLElement unpack(const RationalMatrix &x, std::size_t col, long r1, long r2) {
  AutLElement g{RationalMatrix(r1, r1), RationalMatrix(r2, r2), RationalMatrix(r1, r2),
                RationalMatrix(r1, r2)};
  std::size_t k = 0;
  for (auto *m : {&g.A, &g.B, &g.H0, &g.H1})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        (*m)(i, j) = x(k++, col);
  return g;
}

} // namespace detail

/// All (A, B, H0, H1) with g x e again canonical; the map is affine in g.
inline StabilizerSolution stabilizer_solve(const MatrixPairE &e) {
  if (!is_canonical(e))
    throw InvalidArgument("stabilizer needs data in canonical form");
  const long r1 = e.r1, r2 = e.r2;
  const std::size_t nunk = r1 * r1 + r2 * r2 + 2 * r1 * r2;
  const AutLElement zero{RationalMatrix(r1, r1), RationalMatrix(r2, r2), RationalMatrix(r1, r2),
                         RationalMatrix(r1, r2)};
  const auto f0 = detail::canonical_entries(act_autL(zero, e, Half::Left));
  std::vector<Rational> target;
  const auto id1 = RationalMatrix::identity(r1), id2 = RationalMatrix::identity(r2);
  const RationalMatrix z12(r1, r2);
  for (const auto *m : {&id1, &z12, &id2, &z12})
    target.insert(target.end(), m->data().begin(), m->data().end());
  const std::size_t neq = f0.size();
  RationalMatrix M(neq, nunk), rhs(neq, 1);
  for (std::size_t k = 0; k < nunk; ++k) {
    RationalMatrix unit(nunk, 1);
    unit(k, 0) = 1;
    const auto gk = detail::unpack(unit, 0, r1, r2);
    const auto fk = detail::canonical_entries(act_autL(gk, e, Half::Left));
    for (std::size_t i = 0; i < neq; ++i)
      M(i, k) = fk[i] - f0[i];
  }
  for (std::size_t i = 0; i < neq; ++i)
    rhs(i, 0) = target[i] - f0[i];
  auto sol = solve_affine(M, rhs);
  if (!sol)
    throw std::logic_error("identity must solve the stabilizer system");
  StabilizerSolution out{detail::unpack(sol->particular, 0, r1, r2), {}};
  for (std::size_t c = 0; c < sol->kernel.cols(); ++c)
    out.directions.push_back(detail::unpack(sol->kernel, c, r1, r2));
  return out;
}

struct TReduction {
  MatrixPairE scaled;
  std::vector<Rational> t;
  Rational c;
};

/// Coefficient columns to values at the points: Eval = Coef * Vand^T.
inline RationalMatrix to_evaluation_basis(const MatrixPairE &e, const RationalMatrix &coef) {
  return coef * e.config.vandermonde().transpose();
}

inline RationalMatrix from_evaluation_basis(const MatrixPairE &e, const RationalMatrix &eval) {
  return eval * mat_inverse(e.config.vandermonde().transpose());
}

inline TReduction t_reduce(const MatrixPairE &e) {
  const auto evl = to_evaluation_basis(e, e.left);
  const auto evr = to_evaluation_basis(e, e.right);
  std::vector<Rational> t(e.n());
  for (long i = 0; i < e.n(); ++i) {
    if (evr(0, i) == 0)
      throw ZeroEvaluationEntry("top right evaluation vanishes at point " + std::to_string(i));
    t[i] = 1 / evr(0, i);
  }
  const auto D = diagonal(t);
  MatrixPairE out = e;
  out.left = from_evaluation_basis(e, evl * D);
  out.right = from_evaluation_basis(e, evr * D);
  return {out, t, Rational(1)};
}

/// Scale the evaluation columns of both halves by t.
inline MatrixPairE act_torus(const std::vector<Rational> &t, const MatrixPairE &e) {
  if (static_cast<long>(t.size()) != e.n())
    throw ShapeMismatch("torus element has " + std::to_string(t.size()) + " entries, need " +
                        std::to_string(e.n()));
  const auto D = diagonal(t);
  MatrixPairE out = e;
  out.left = from_evaluation_basis(e, to_evaluation_basis(e, e.left) * D);
  out.right = from_evaluation_basis(e, to_evaluation_basis(e, e.right) * D);
  return out;
}

struct SliceReport {
  long codim;
  long autL_constraints;
  long torus_constraints;
};

inline SliceReport slice_report(long r, long n) {
  if (r < 2 || n < r)
    throw RankOutOfRange("need n >= r >= 2");
  const auto t = generic_split(r, n);
  const long r1 = t.parts[0].second;
  const long r2 = t.parts.size() > 1 ? t.parts[1].second : 0;
  SliceReport s{n + r * r - 1, r1 * r1 + 2 * r1 * r2 + r2 * r2, n - 1};
  if (s.autL_constraints + s.torus_constraints != s.codim)
    throw std::logic_error("slice codimension bookkeeping violated");
  return s;
}

} // namespace fibstab
