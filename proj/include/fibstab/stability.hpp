#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "fibstab/chow.hpp"
#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"
#include "fibstab/variety.hpp"

namespace fibstab {

/// A fibration Y -> X = P^1 with the relatively ample class L on Y and
/// A = alpha (fibre class), the pullback of an ample class of degree alpha.
class FibrationFrame {
public:
  explicit FibrationFrame(const VarietyTag &v, const Rational &alpha = 1)
      : FibrationFrame(ChowClass::u(v), alpha) {}

  FibrationFrame(const ChowClass &L, const Rational &alpha = 1)
      : variety_(L.variety()), d_x_(1), d_y_(L.variety().dim()), alpha_(alpha), L_(L),
        A_(ChowClass::fibre(L.variety()) * alpha) {
    if (!L.is_homogeneous_of_degree(1))
      throw InvalidArgument("L must be a divisor class");
    if (alpha <= 0)
      throw InvalidArgument("A must be ample on the base");
    al_ = (A_ * L_.pow(d_y_ - d_x_)).degree();
    if (al_ <= 0)
      throw InvalidArgument("A^dX L^(dY-dX) must be positive");
    lpow_ = (L_.pow(d_y_)).degree();
  }

  const VarietyTag &variety() const noexcept { return variety_; }
  int d_x() const noexcept { return d_x_; }
  int d_y() const noexcept { return d_y_; }
  const ChowClass &A() const noexcept { return A_; }
  const ChowClass &L() const noexcept { return L_; }
  /// Degree of A^dX on the base.
  const Rational &a_number() const noexcept { return alpha_; }
  /// A^dX L^(dY-dX) on Y.
  const Rational &al_number() const noexcept { return al_; }
  /// A^(dX-1) L^(dY-dX+1) on Y.
  const Rational &l_number() const noexcept { return lpow_; }

  /// [gamma] = gamma . A^(dX-1) L^(dY-dX-1) for a class of degree 2.
  Rational bracket(const ChowClass &gamma) const {
    return (gamma * L_.pow(d_y_ - d_x_ - 1)).degree();
  }

  ChowClass L_c(const Rational &c) const { return L_ + A_ * c; }

private:
  VarietyTag variety_;
  int d_x_, d_y_;
  Rational alpha_;
  ChowClass L_, A_;
  Rational al_, lpow_;
};

struct SheafNumData {
  long rank = 1;
  ChowClass c1;
  ChowClass c2;
  Rational c3 = 0;

  SheafNumData(long r, ChowClass c1_, ChowClass c2_, Rational c3_ = 0)
      : rank(r), c1(std::move(c1_)), c2(std::move(c2_)), c3(std::move(c3_)) {
    if (rank < 1)
      throw InvalidArgument("rank must be positive");
    if (!(c1.variety() == c2.variety()))
      throw VarietyMismatch("c1 and c2 live on different varieties");
  }

  ChowClass xi() const { return c1 * ratio(1, rank); }
};

inline void require_same_variety(const FibrationFrame &f, const ChowClass &x) {
  if (!(f.variety() == x.variety()))
    throw VarietyMismatch(x.variety().to_string() + " vs frame on " + f.variety().to_string());
}

inline Rational slope_Lc(const FibrationFrame &f, const SheafNumData &s, const Rational &c) {
  if (c < 0)
    throw InvalidArgument("c must be non-negative");
  require_same_variety(f, s.c1);
  const int fib = f.d_y() - f.d_x();
  const ChowClass pol = f.L().pow(fib) + f.A() * f.L().pow(fib - 1) * c;
  return (s.xi() * pol).degree();
}

inline Rational slope_usual(const FibrationFrame &f, const SheafNumData &s, const Rational &c) {
  if (c < 0)
    throw InvalidArgument("c must be non-negative");
  require_same_variety(f, s.c1);
  return (s.xi() * f.L_c(c).pow(f.d_y() - 1)).degree();
}

inline ChowClass discriminant(const SheafNumData &s) {
  return s.c2 * Rational(2 * s.rank) - s.c1 * s.c1 * Rational(s.rank - 1);
}

inline Rational threshold_aF(const FibrationFrame &f, long r, const Rational &M_F,
                             const Rational &m_F) {
  if (r < 1)
    throw InvalidArgument("rank must be positive");
  return Rational(r * r) * (M_F - m_F) / f.a_number();
}

inline Rational threshold_cF(const FibrationFrame &f, const SheafNumData &s) {
  require_same_variety(f, s.c1);
  if (!s.c1.is_zero())
    throw NonzeroC1("threshold c_F needs c1 = 0");
  const long r = s.rank;
  return Rational(r * (r - 1)) * f.al_number() / (f.a_number() * f.a_number()) *
         f.bracket(s.c2);
}

inline Rational threshold_cF_prime(const FibrationFrame &f, const SheafNumData &s) {
  require_same_variety(f, s.c1);
  const long r = s.rank;
  return Rational(r * r * (r - 1)) / 2 * f.al_number() / (f.a_number() * f.a_number()) *
         f.bracket(discriminant(s));
}

struct HodgeCheck {
  bool holds;
  Rational lhs;
  Rational rhs;
};

inline HodgeCheck hodge_inequality_check(const FibrationFrame &f, const ChowClass &xi,
                                         const Rational &c) {
  if (c < 0)
    throw InvalidArgument("c must be non-negative");
  require_same_variety(f, xi);
  const Rational xa = f.bracket(xi * f.A());
  const Rational xl = f.bracket(xi * f.L_c(c));
  HodgeCheck out;
  out.lhs = 2 * xa * xl;
  out.rhs = 2 * c * xa * xa + f.al_number() * f.bracket(xi * xi);
  out.holds = out.lhs >= out.rhs;
  return out;
}

inline std::vector<ChowClass> nef_generators(const VarietyTag &v) {
  if (!v.fibred())
    throw WrongVariety("nef generators are tabulated for fibred varieties only");
  return {ChowClass::fibre(v), ChowClass::u(v)};
}

struct ConeMembership {
  bool in_Kplus;
  bool in_closure;
  std::optional<bool> in_C_alpha;
};

inline ConeMembership cone_membership(const FibrationFrame &f, const ChowClass &beta,
                                      const std::optional<ChowClass> &alpha = std::nullopt) {
  require_same_variety(f, beta);
  bool nef_ok = true;
  for (const auto &d : nef_generators(f.variety()))
    nef_ok = nef_ok && f.bracket(beta * d) >= 0;
  const Rational sq = f.bracket(beta * beta);
  ConeMembership out{nef_ok && sq > 0, nef_ok && sq >= 0, std::nullopt};
  if (alpha) {
    require_same_variety(f, *alpha);
    out.in_C_alpha = out.in_closure && f.bracket(*alpha * beta) > 0;
  }
  return out;
}

/// Threshold for the usual slope given a threshold k_F for the L_c slope.
inline Rational compare_bound(int d_x, int d_y, const Rational &k_F, long r = 1,
                              const Rational &s = 0) {
  if (d_x >= 3)
    throw UnsupportedBaseDimension("base dimension " + std::to_string(d_x));
  if (d_x < 1 || d_y <= d_x)
    throw InvalidArgument("need 0 < dX < dY");
  if (d_x == 1)
    return k_F / (d_y - 1);
  return std::max(Rational(2 * k_F / (d_y - 2)), Rational(Rational(r * r) * s / (d_y - 1)));
}

struct RelativeBounds {
  Rational mu1;
  Rational mu2;
  Rational mu3;
};

inline RelativeBounds relative_bounds_mu(const FibrationFrame &f, const SheafNumData &s) {
  const long r = s.rank;
  if (r == 1)
    throw RankOne("relative bounds need rank at least 2");
  require_same_variety(f, s.c2);
  const Rational a = f.a_number();
  return {a / (r - 1), a / Rational(r * (r - 1)), ratio(-2 * r, r - 1) * f.bracket(s.c2)};
}

} // namespace fibstab
