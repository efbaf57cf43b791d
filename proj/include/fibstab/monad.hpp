#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fibstab/chow.hpp"
#include "fibstab/cox.hpp"
#include "fibstab/error.hpp"
#include "fibstab/geom.hpp"
#include "fibstab/linalg.hpp"
#include "fibstab/matrix.hpp"

namespace fibstab {

/// Matrix of homogeneous Cox polynomials, all of one degree.
class PolyMatrix {
public:
  PolyMatrix(VarietyTag v, Degree d, std::size_t rows, std::size_t cols)
      : variety_(v), degree_(d), rows_(rows), cols_(cols),
        entries_(rows * cols, CoxPolynomial(v, d)) {}

  const VarietyTag &variety() const noexcept { return variety_; }
  Degree degree() const noexcept { return degree_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  CoxPolynomial &operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const CoxPolynomial &operator()(std::size_t i, std::size_t j) const {
    return entries_.at(i * cols_ + j);
  }

  void set(std::size_t i, std::size_t j, const CoxPolynomial &p) {
    if (!(p.variety() == variety_) || p.degree() != degree_)
      throw NotHomogeneous("entry of degree (" + std::to_string(p.degree().k) + ", " +
                           std::to_string(p.degree().l) + ") in a matrix of degree (" +
                           std::to_string(degree_.k) + ", " + std::to_string(degree_.l) + ")");
    (*this)(i, j) = p;
  }

  bool is_zero() const {
    for (const auto &p : entries_)
      if (!p.is_zero())
        return false;
    return true;
  }

  RationalMatrix evaluate(const std::vector<Rational> &coords) const {
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(i, j) = (*this)(i, j).evaluate(coords);
    return m;
  }

  friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.cols_ != b.rows_)
      throw ShapeMismatch("cannot multiply " + a.shape() + " by " + b.shape());
    if (!(a.variety_ == b.variety_))
      throw VarietyMismatch("polynomial matrices on different varieties");
    PolyMatrix c(a.variety_, a.degree_ + b.degree_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        for (std::size_t k = 0; k < a.cols_; ++k)
          c(i, j) += cox_multiply(a(i, k), b(k, j));
    return c;
  }

  friend PolyMatrix operator*(const RationalMatrix &s, const PolyMatrix &p) {
    if (s.cols() != p.rows_)
      throw ShapeMismatch("cannot multiply " + s.shape() + " by " + p.shape());
    PolyMatrix c(p.variety_, p.degree_, s.rows(), p.cols_);
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t k = 0; k < s.cols(); ++k)
        if (s(i, k) != 0)
          for (std::size_t j = 0; j < p.cols_; ++j)
            c(i, j) += p(k, j) * s(i, k);
    return c;
  }

  friend PolyMatrix operator*(const PolyMatrix &p, const RationalMatrix &s) {
    if (p.cols_ != s.rows())
      throw ShapeMismatch("cannot multiply " + p.shape() + " by " + s.shape());
    PolyMatrix c(p.variety_, p.degree_, p.rows_, s.cols());
    for (std::size_t i = 0; i < p.rows_; ++i)
      for (std::size_t k = 0; k < p.cols_; ++k)
        for (std::size_t j = 0; j < s.cols(); ++j)
          if (s(k, j) != 0)
            c(i, j) += p(i, k) * s(k, j);
    return c;
  }

  PolyMatrix &operator+=(const PolyMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeMismatch("cannot add " + shape() + " and " + o.shape());
    for (std::size_t k = 0; k < entries_.size(); ++k)
      entries_[k] += o.entries_[k];
    return *this;
  }
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix &b) { return a += b; }
  friend PolyMatrix operator*(PolyMatrix a, const Rational &s) {
    for (auto &p : a.entries_)
      p *= s;
    return a;
  }

  friend bool operator==(const PolyMatrix &a, const PolyMatrix &b) {
    return a.variety_ == b.variety_ && a.degree_ == b.degree_ && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

private:
  VarietyTag variety_;
  Degree degree_;
  std::size_t rows_, cols_;
  std::vector<CoxPolynomial> entries_;
};

inline constexpr Degree kDegreeU{1, 0};

/// O_pi(-1)^n --A--> O^(r+2n) --B--> O_pi(1)^n on Y_ab.
struct MonadData {
  VarietyTag variety;
  long r;
  long n;
  PolyMatrix A; // (r+2n) x n
  PolyMatrix B; // n x (r+2n)

  MonadData(VarietyTag v, long r_, long n_, PolyMatrix A_, PolyMatrix B_)
      : variety(v), r(r_), n(n_), A(std::move(A_)), B(std::move(B_)) {
    validate();
  }

  MonadData(VarietyTag v, long r_, long n_)
      : MonadData(v, r_, n_, PolyMatrix(v, kDegreeU, r_ + 2 * n_, n_),
                  PolyMatrix(v, kDegreeU, n_, r_ + 2 * n_)) {}

  long width() const { return r + 2 * n; }

  void validate() const {
    if (variety.kind() != VarietyKind::P2Bundle)
      throw WrongVariety("monads live on a P^2-bundle, got " + variety.to_string());
    if (r < 1 || n < 0)
      throw InvalidArgument("need r >= 1 and n >= 0");
    const std::size_t w = r + 2 * n;
    if (A.rows() != w || A.cols() != static_cast<std::size_t>(n))
      throw ShapeMismatch("A must be " + std::to_string(w) + "x" + std::to_string(n) + ", got " +
                          A.shape());
    if (B.rows() != static_cast<std::size_t>(n) || B.cols() != w)
      throw ShapeMismatch("B must be " + std::to_string(n) + "x" + std::to_string(w) + ", got " +
                          B.shape());
    for (const auto *m : {&A, &B}) {
      if (!(m->variety() == variety))
        throw VarietyMismatch("matrix on " + m->variety().to_string());
      if (m->degree() != kDegreeU)
        throw NotHomogeneous("monad entries must have degree u");
    }
  }
};

/// Basis of Gamma(O_pi(1)) as Cox monomials.
inline std::vector<CoxPolynomial> sections_u(const VarietyTag &v) {
  std::vector<CoxPolynomial> out;
  for (const auto &e : cox_basis(v, kDegreeU))
    out.push_back(CoxPolynomial::monomial(v, e));
  return out;
}

struct ComposeCheck {
  bool ok;
  PolyMatrix residual;
};

inline ComposeCheck monad_compose_check(const MonadData &m) {
  auto ba = m.B * m.A;
  const bool ok = ba.is_zero();
  return {ok, std::move(ba)};
}

/// Basis of {B : B A = 0}. Each element has a single nonzero row.
inline std::vector<PolyMatrix> monad_complete(const VarietyTag &v, long r, long n,
                                              const PolyMatrix &A) {
  MonadData shape_check(v, r, n, A, PolyMatrix(v, kDegreeU, n, r + 2 * n));
  const auto secs = sections_u(v);
  const std::size_t w = r + 2 * n, d = secs.size();
  const auto targets = cox_basis(v, kDegreeU + kDegreeU);
  std::map<Exponents, std::size_t> target_index;
  for (std::size_t t = 0; t < targets.size(); ++t)
    target_index[targets[t]] = t;

  // Row vector b with b_k = sum_s x_{k,s} sec_s must satisfy b A = 0.
  RationalMatrix M(n * targets.size(), w * d);
  for (std::size_t k = 0; k < w; ++k)
    for (std::size_t s = 0; s < d; ++s)
      for (long j = 0; j < n; ++j) {
        const auto prod = cox_multiply(secs[s], A(k, j));
        for (const auto &[e, c] : prod.terms())
          M(j * targets.size() + target_index.at(e), k * d + s) += c;
      }
  const auto K = mat_kernel(M);
  std::vector<PolyMatrix> out;
  for (long row = 0; row < n; ++row)
    for (std::size_t col = 0; col < K.cols(); ++col) {
      PolyMatrix B(v, kDegreeU, n, w);
      for (std::size_t k = 0; k < w; ++k)
        for (std::size_t s = 0; s < d; ++s)
          if (K(k * d + s, col) != 0)
            B(row, k) += secs[s] * K(k * d + s, col);
      out.push_back(std::move(B));
    }
  return out;
}

/// Random integer combination of a completion basis.
inline PolyMatrix random_completion(const VarietyTag &v, long r, long n,
                                    const std::vector<PolyMatrix> &basis, std::mt19937_64 &rng,
                                    long bound = 3) {
  PolyMatrix B(v, kDegreeU, n, r + 2 * n);
  for (const auto &b : basis)
    B += b * random_rational(rng, bound);
  return B;
}

/// Random A with integer coefficients, completed by a random B with B A = 0.
inline MonadData random_monad(const VarietyTag &v, long r, long n, std::mt19937_64 &rng,
                              long bound = 3) {
  MonadData m(v, r, n);
  const auto secs = sections_u(v);
  for (std::size_t i = 0; i < m.A.rows(); ++i)
    for (std::size_t j = 0; j < m.A.cols(); ++j)
      for (const auto &sec : secs)
        m.A(i, j) += sec * random_rational(rng, bound);
  m.B = random_completion(v, r, n, monad_complete(v, r, n, m.A), rng, bound);
  return m;
}

struct PointFailure {
  std::vector<Rational> point;
  std::string map; // "A" or "B"
  std::size_t rank;
};

struct PointwiseReport {
  bool A_injective;
  bool B_surjective;
  std::size_t points_checked;
  std::vector<PointFailure> failures;
};

/// Points on Lambda, on coordinate fibres and on coordinate-hyperplane intersections.
inline std::vector<std::vector<Rational>> adversarial_points() {
  const std::vector<std::vector<Rational>> fibre{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, -1, 2}};
  const std::vector<std::vector<Rational>> base{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}};
  std::vector<std::vector<Rational>> out;
  for (const auto &z : fibre)
    for (const auto &w : base)
      out.push_back({z[0], z[1], z[2], w[0], w[1]});
  return out;
}

/// Random point in a standard chart: one fibre and one base coordinate equal 1.
inline std::vector<Rational> random_point(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> fibre_chart(0, 2), base_chart(0, 1);
  std::vector<Rational> p(5);
  for (auto &x : p)
    x = random_rational(rng, 7, 3);
  p[fibre_chart(rng)] = 1;
  p[3 + base_chart(rng)] = 1;
  return p;
}

inline PointwiseReport pointwise_check(const MonadData &m, std::size_t samples,
                                       std::uint64_t seed) {
  if (samples < 1)
    throw InvalidArgument("need at least one sample");
  std::mt19937_64 rng(seed);
  auto points = adversarial_points();
  for (std::size_t i = 0; i < samples; ++i)
    points.push_back(random_point(rng));
  PointwiseReport rep{true, true, points.size(), {}};
  for (const auto &p : points) {
    const auto ra = mat_rank(m.A.evaluate(p));
    if (ra < static_cast<std::size_t>(m.n)) {
      rep.A_injective = false;
      rep.failures.push_back({p, "A", ra});
    }
    const auto rb = mat_rank(m.B.evaluate(p));
    if (rb < static_cast<std::size_t>(m.n)) {
      rep.B_surjective = false;
      rep.failures.push_back({p, "B", rb});
    }
  }
  return rep;
}

struct P2Monad {
  PolyMatrix A;
  PolyMatrix B;
};

/// Substitute the base point (w0 : w1); entries become linear forms on P^2.
inline PolyMatrix restrict_matrix_to_fiber(const PolyMatrix &m, const Rational &w0,
                                           const Rational &w1) {
  const auto p2 = VarietyTag::p2();
  PolyMatrix out(p2, Degree{m.degree().k, 0}, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto &[e, c] : m(i, j).terms()) {
        Rational coef = c;
        for (int k = 0; k < e[3]; ++k)
          coef *= w0;
        for (int k = 0; k < e[4]; ++k)
          coef *= w1;
        out(i, j).add_term({e[0], e[1], e[2]}, coef);
      }
  return out;
}

inline P2Monad restrict_to_fiber(const MonadData &m, const Rational &w0, const Rational &w1) {
  if (w0 == 0 && w1 == 0)
    throw InvalidArgument("(0 : 0) is not a point of P^1");
  return {restrict_matrix_to_fiber(m.A, w0, w1), restrict_matrix_to_fiber(m.B, w0, w1)};
}

struct LambdaRestriction {
  RationalMatrix A_const;
  RationalMatrix B_const;
  bool constant;
  bool trivial_on_Lambda;
};

/// Lambda = {z1 = z2 = 0}. Sampled along Lambda at several base points; the
/// restriction must be constant there with A of rank n and B of rank n.
inline LambdaRestriction restrict_to_Lambda(const MonadData &m) {
  const std::vector<std::pair<Rational, Rational>> base{
      {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}, {ratio(1, 2), 5}};
  const auto A0 = m.A.evaluate({1, 0, 0, 1, 0});
  const auto B0 = m.B.evaluate({1, 0, 0, 1, 0});
  bool constant = true;
  for (const auto &[w0, w1] : base) {
    constant = constant && m.A.evaluate({1, 0, 0, w0, w1}) == A0 &&
               m.B.evaluate({1, 0, 0, w0, w1}) == B0;
  }
  const bool trivial = constant && mat_rank(A0) == static_cast<std::size_t>(m.n) &&
                       mat_rank(B0) == static_cast<std::size_t>(m.n);
  return {A0, B0, constant, trivial};
}

inline ChernData monad_chern(const VarietyTag &v, long r, long n) {
  const auto u = ChowClass::u(v);
  return chern_from_resolution({{r + 2 * n, ChowClass(v)}, {-n, -u}, {-n, u}});
}

struct ExpectedDims {
  long m;
  long chi_end;
  long v_dim_lower_bound;
};

inline ExpectedDims expected_dims(long a, long b, long r, long n) {
  if (r < 2 || n < r)
    throw RankOutOfRange("need n >= r >= 2, got r=" + std::to_string(r) +
                         " n=" + std::to_string(n));
  const long m = 2 * (1 + a + b) * n * r - r * r + 1;
  const long count = 2 * (3 + a + b) * n * (r + 2 * n) - (6 + 4 * a + 4 * b) * n * n -
                     (2 * n * n + (r + 2 * n) * (r + 2 * n) - 1);
  if (count != m)
    throw std::logic_error("monad dimension count differs from m");
  return {m, 1 - m, count};
}

enum class Family { F0_Ft, Serre_rank2 };

struct FamilyChernReport {
  ChernData mechanical;
  std::optional<ChowClass> asserted_c2;
};

/// Chern data of the example families from their defining sequences.
inline FamilyChernReport family_chern(Family kind, const VarietyTag &v, long n, long r = 2) {
  const auto u = ChowClass::u(v);
  const ChowClass O(v);
  if (n < 0)
    throw InvalidArgument("n must be non-negative");
  if (kind == Family::F0_Ft) {
    if (r < 2)
      throw InvalidArgument("F_t needs r >= 2");
    return {chern_from_resolution({{r - 1, O}, {1, -u}, {1, -u * n}, {-1, -u * (n + 1)}}),
            std::nullopt};
  }
  auto mech = chern_from_resolution({{1, -u}, {1, u}, {-n, u}, {2 * n, O}, {-n, -u}});
  return {mech, u * u * n};
}

struct GroupElementG {
  RationalMatrix g1; // n x n
  RationalMatrix g;  // (r+2n) x (r+2n)
  RationalMatrix g2; // n x n

  static GroupElementG identity(long r, long n) {
    return {RationalMatrix::identity(n), RationalMatrix::identity(r + 2 * n),
            RationalMatrix::identity(n)};
  }
  static GroupElementG scalar(long r, long n, const Rational &eps) {
    return {RationalMatrix::identity(n) * eps, RationalMatrix::identity(r + 2 * n) * eps,
            RationalMatrix::identity(n) * eps};
  }
  static GroupElementG random(long r, long n, std::mt19937_64 &rng, long bound = 3) {
    auto invertible = [&](long k) {
      for (;;) {
        auto m = RationalMatrix::random(k, k, rng, bound);
        if (determinant(m) != 0)
          return m;
      }
    };
    return {invertible(n), invertible(r + 2 * n), invertible(n)};
  }
};

/// (A, B) -> (g A g1^-1, g2 B g^-1).
inline MonadData group_act(const GroupElementG &h, const MonadData &m) {
  const std::size_t w = m.width(), n = m.n;
  if (h.g1.rows() != n || !h.g1.square() || h.g2.rows() != n || !h.g2.square() ||
      h.g.rows() != w || !h.g.square())
    throw ShapeMismatch("group element does not match (r, n) = (" + std::to_string(m.r) + ", " +
                        std::to_string(m.n) + ")");
  for (const auto *x : {&h.g1, &h.g, &h.g2})
    if (determinant(*x) == 0)
      throw SingularGroupElement("group element component is singular");
  return MonadData(m.variety, m.r, m.n, h.g * m.A * mat_inverse(h.g1),
                   h.g2 * m.B * mat_inverse(h.g));
}

/// Pullback to Y_00 = P^2 x P^1 of the P^2 monad A = (x, y, z, 0)^T, B = (-y, x, 0, z).
inline MonadData pulled_back_p2_monad() {
  const auto v = VarietyTag::p2_bundle(0, 0);
  MonadData m(v, 2, 1);
  for (std::size_t i = 0; i < 3; ++i)
    m.A(i, 0) = CoxPolynomial::variable(v, i);
  m.B(0, 0) = CoxPolynomial::variable(v, 1) * Rational(-1);
  m.B(0, 1) = CoxPolynomial::variable(v, 0);
  m.B(0, 3) = CoxPolynomial::variable(v, 2);
  return m;
}

} // namespace fibstab
