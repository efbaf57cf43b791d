#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fibstab/chow.hpp"
#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"
#include "fibstab/variety.hpp"

namespace fibstab {

/// Classes of the torus-invariant prime divisors (one per Cox variable).
inline std::vector<ChowClass> toric_divisors(const VarietyTag &v) {
  std::vector<ChowClass> out;
  for (const Degree &d : cox_variable_degrees(v))
    out.push_back(ChowClass::divisor(v, d.k, d.l));
  return out;
}

/// K_V = -(sum of toric divisors).
///   Y_l: -2u + (l-2)f     Y_ab: -3u + (a+b-2)v     P2: -3h     P1: -2pt
inline ChowClass canonical_class(const VarietyTag &v) {
  ChowClass k(v);
  for (const auto &d : toric_divisors(v))
    k -= d;
  return k;
}

/// Relative canonical class K_V - pi^*K_{P^1}: Y_l: -2u + l f, Y_ab: -3u + (a+b)v.
inline ChowClass relative_canonical_class(const VarietyTag &v) {
  if (!v.fibred())
    throw WrongVariety(v.to_string() + " is not fibred over P^1");
  return canonical_class(v) + ChowClass::fibre(v) * 2;
}

/// Total Chern class of the tangent bundle, prod (1 + D_i).
inline ChowClass tangent_chern_class(const VarietyTag &v) {
  ChowClass c = ChowClass::one(v);
  for (const auto &d : toric_divisors(v))
    c = c * (ChowClass::one(v) + d);
  return c;
}

/// Td(T_V) = prod D_i / (1 - exp(-D_i)) over the toric divisors. The series is
/// 1 + D/2 + D^2/12 + 0*D^3 + ..., and nothing beyond degree 3 survives.
inline ChowClass todd_class(const VarietyTag &v) {
  ChowClass td = ChowClass::one(v);
  for (const auto &d : toric_divisors(v))
    td = td * (ChowClass::one(v) + d * Rational(1, 2) + d * d * Rational(1, 12));
  return td;
}

/// Td(T_V) split by codimension 0..dim V.
inline std::vector<ChowClass> todd_components(const VarietyTag &v) {
  const ChowClass td = todd_class(v);
  std::vector<ChowClass> parts;
  for (int d = 0; d <= v.dim(); ++d)
    parts.push_back(td.part(d));
  return parts;
}

/// Td of the relative tangent bundle, Td(V) / pi^*Td(P^1) = Td(V) * (1 - fibre).
inline ChowClass relative_todd_class(const VarietyTag &v) {
  return todd_class(v) * (ChowClass::one(v) - ChowClass::fibre(v));
}

/// Numerical data of a (virtual) sheaf, held as its Chern character.
class ChernData {
public:
  explicit ChernData(ChowClass ch) : ch_(std::move(ch)) {}

  /// From rank and Chern classes; c3 is the coefficient of the point class on
  /// a threefold and is ignored elsewhere.
  static ChernData from_chern_classes(const Rational &rank, const ChowClass &c1,
                                      const ChowClass &c2, const Rational &c3 = 0) {
    const VarietyTag &v = c1.variety();
    if (!(c2.variety() == v))
      throw VarietyMismatch("c1 and c2 live on different varieties");
    ChowClass ch = ChowClass::one(v) * rank + c1 + (c1 * c1 - c2 * 2) * Rational(1, 2);
    if (v.dim() >= 3)
      ch += (c1 * c1 * c1 - c1 * c2 * 3 + ChowClass::point(v) * (3 * c3)) * Rational(1, 6);
    return ChernData(std::move(ch));
  }

  static ChernData line_bundle(const ChowClass &d) { return ChernData(exp_class(d)); }

  const VarietyTag &variety() const noexcept { return ch_.variety(); }
  const ChowClass &ch() const noexcept { return ch_; }
  ChowClass ch_part(int d) const { return ch_.part(d); }

  Rational rank() const { return ch_[0]; }
  ChowClass c1() const { return ch_.part(1); }
  ChowClass c2() const {
    const ChowClass c1v = c1();
    return c1v * c1v * Rational(1, 2) - ch_.part(2);
  }
  /// c3 = 2 ch3 - c1^3/3 + c1 c2, as a class (zero below dimension 3).
  ChowClass c3() const {
    const ChowClass c1v = c1();
    return ch_.part(3) * 2 - c1v * c1v * c1v * Rational(1, 3) + c1v * c2();
  }

  ChernData operator+(const ChernData &o) const { return ChernData(ch_ + o.ch_); }
  ChernData operator-(const ChernData &o) const { return ChernData(ch_ - o.ch_); }
  ChernData operator*(const Rational &m) const { return ChernData(ch_ * m); }

  /// Tensor product: ch is multiplicative.
  ChernData tensor(const ChernData &o) const { return ChernData(ch_ * o.ch_); }

  /// Twist by the line bundle with first Chern class d.
  ChernData twist(const ChowClass &d) const { return ChernData(ch_ * exp_class(d)); }

  ChernData dual() const {
    ChowClass out = ch_;
    for (int d = 1; d <= variety().dim(); d += 2)
      out -= ch_.part(d) * 2;
    return ChernData(std::move(out));
  }

  /// End(F) = F (x) F^*.
  ChernData endomorphisms() const { return tensor(dual()); }

  friend bool operator==(const ChernData &a, const ChernData &b) { return a.ch_ == b.ch_; }

private:
  ChowClass ch_;
};

/// One term of a resolution or monad: `multiplicity` copies (negative for
/// terms entering with a minus sign) of the line bundle with c1 = class.
struct ResolutionTerm {
  long multiplicity;
  ChowClass line_bundle;
};

/// ch = sum multiplicity * exp(class), i.e. the alternating sum of the terms.
inline ChernData chern_from_resolution(const std::vector<ResolutionTerm> &terms) {
  if (terms.empty())
    throw InvalidArgument("empty resolution");
  const VarietyTag v = terms.front().line_bundle.variety();
  ChowClass ch(v);
  for (const auto &t : terms) {
    if (!(t.line_bundle.variety() == v))
      throw VarietyMismatch("resolution terms on different varieties");
    if (!t.line_bundle.is_homogeneous_of_degree(1))
      throw InvalidArgument("resolution term is not a line-bundle class");
    ch += exp_class(t.line_bundle) * Rational(t.multiplicity);
  }
  return ChernData(std::move(ch));
}

/// pi_* on classes, dropping codimension by the fibre dimension:
///   Y_l: u -> 1, pt -> pt, everything else -> 0
///   Y_ab: u^2 -> 1, pt -> pt, everything else -> 0 (u^3 is (a+b) pt already)
inline ChowClass pushforward_class(const ChowClass &x) {
  const VarietyTag &v = x.variety();
  const VarietyTag p1 = VarietyTag::p1();
  switch (v.kind()) {
  case VarietyKind::Hirzebruch:
    return ChowClass(p1, {x.coefficient(1, 0), x.coefficient(1, 1)});
  case VarietyKind::P2Bundle:
    return ChowClass(p1, {x.coefficient(2, 0), x.coefficient(2, 1)});
  default:
    throw WrongVariety("pushforward needs a fibred variety, got " + v.to_string());
  }
}

/// Grothendieck-Riemann-Roch: ch(pi_! F) = pi_*(ch(F) Td(T_pi)).
inline ChernData grr_pushforward(const ChernData &f) {
  if (!f.variety().fibred())
    throw WrongVariety("pushforward needs a fibred variety, got " + f.variety().to_string());
  return ChernData(pushforward_class(f.ch() * relative_todd_class(f.variety())));
}

/// chi = deg (ch . Td(V)). Integral Chern data always yields an integer.
inline Rational euler_characteristic(const ChernData &f) {
  Rational chi = (f.ch() * todd_class(f.variety())).degree();
  if (!is_integer(chi))
    throw NonIntegralResult("Euler characteristic " + to_string(chi) +
                            " is not an integer; Chern data inconsistent");
  return chi;
}

} // namespace fibstab
