#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"
#include "fibstab/variety.hpp"

namespace fibstab {

/// Monomial u^i * x^j in the generators of the intersection ring, where x is
/// the fibre class (f on Y_l, v on Y_ab). On P^1 and P^2 only i is used
/// (powers of the hyperplane class; on P^1, h = pt).
struct ChowMonomial {
  int i = 0;
  int j = 0;
  int degree() const noexcept { return i + j; }
  friend bool operator==(const ChowMonomial &, const ChowMonomial &) = default;
};

/// Monomial basis of the intersection ring:
///   P1: 1, pt        P2: 1, h, h^2
///   Y_l: 1, u, f, pt (pt = u f)
///   Y_ab: 1, u, v, u^2, uv, pt (pt = u^2 v)
inline const std::vector<ChowMonomial> &chow_basis(const VarietyTag &v) {
  static const std::vector<ChowMonomial> p1{{0, 0}, {1, 0}};
  static const std::vector<ChowMonomial> p2{{0, 0}, {1, 0}, {2, 0}};
  static const std::vector<ChowMonomial> hirz{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  static const std::vector<ChowMonomial> bundle{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
  switch (v.kind()) {
  case VarietyKind::P1:
    return p1;
  case VarietyKind::P2:
    return p2;
  case VarietyKind::Hirzebruch:
    return hirz;
  case VarietyKind::P2Bundle:
    return bundle;
  }
  return p1;
}

inline std::vector<std::string> chow_basis_names(const VarietyTag &v) {
  switch (v.kind()) {
  case VarietyKind::P1:
    return {"1", "pt"};
  case VarietyKind::P2:
    return {"1", "h", "h^2"};
  case VarietyKind::Hirzebruch:
    return {"1", "u", "f", "pt"};
  case VarietyKind::P2Bundle:
    return {"1", "u", "v", "u^2", "uv", "pt"};
  }
  return {};
}

/// Element of the rational intersection ring of a model variety, stored by its
/// coordinates in the fixed monomial basis. Relations are applied on
/// construction so the representation is unique.
class ChowClass {
public:
  explicit ChowClass(VarietyTag v) : variety_(v), coeffs_(chow_basis(v).size()) {}
  ChowClass(VarietyTag v, std::vector<Rational> coeffs) : variety_(v), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != chow_basis(v).size())
      throw ShapeMismatch("wrong number of Chow coordinates for " + v.to_string());
  }

  /// u^i x^j reduced to the basis.
  static ChowClass monomial(VarietyTag v, int i, int j, const Rational &c = 1) {
    ChowClass out(v);
    out.add_monomial(i, j, c);
    return out;
  }
  static ChowClass one(VarietyTag v) { return monomial(v, 0, 0); }
  static ChowClass point(VarietyTag v) { return monomial(v, chow_basis(v).back().i, chow_basis(v).back().j); }
  /// u on a fibred variety, h on P^1/P^2.
  static ChowClass u(VarietyTag v) { return monomial(v, 1, 0); }
  /// Fibre class f (Y_l) or v (Y_ab): the pullback of a point of P^1.
  static ChowClass fibre(VarietyTag v) {
    if (!v.fibred())
      throw WrongVariety(v.to_string() + " is not fibred over P^1");
    return monomial(v, 0, 1);
  }
  /// Divisor k*u + l*fibre (k*h on P^1/P^2; l must be 0 there).
  static ChowClass divisor(VarietyTag v, const Rational &k, const Rational &l) {
    ChowClass out = u(v) * k;
    if (v.fibred())
      out += fibre(v) * l;
    else if (l != 0)
      throw WrongVariety(v.to_string() + " has Picard rank 1");
    return out;
  }
  static ChowClass divisor(VarietyTag v, Degree d) { return divisor(v, d.k, d.l); }

  const VarietyTag &variety() const noexcept { return variety_; }
  const std::vector<Rational> &coefficients() const noexcept { return coeffs_; }
  Rational &operator[](std::size_t idx) { return coeffs_.at(idx); }
  const Rational &operator[](std::size_t idx) const { return coeffs_.at(idx); }

  Rational coefficient(int i, int j) const {
    const auto &basis = chow_basis(variety_);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].i == i && basis[k].j == j)
        return coeffs_[k];
    throw InvalidArgument("monomial is not a basis element");
  }

  /// Coefficient of the point class.
  Rational degree() const { return coeffs_.back(); }

  bool is_zero() const {
    for (const auto &c : coeffs_)
      if (c != 0)
        return false;
    return true;
  }

  /// The homogeneous component of codimension d.
  ChowClass part(int d) const {
    ChowClass out(variety_);
    const auto &basis = chow_basis(variety_);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].degree() == d)
        out.coeffs_[k] = coeffs_[k];
    return out;
  }

  bool is_homogeneous_of_degree(int d) const { return (*this - part(d)).is_zero(); }

  /// (k, l) coordinates of a divisor class.
  std::pair<Rational, Rational> divisor_coords() const {
    if (!is_homogeneous_of_degree(1))
      throw InvalidArgument("class is not a divisor class");
    return {coefficient(1, 0), variety_.fibred() ? coefficient(0, 1) : Rational(0)};
  }

  ChowClass &operator+=(const ChowClass &o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  ChowClass &operator-=(const ChowClass &o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  ChowClass &operator*=(const Rational &s) {
    for (auto &c : coeffs_)
      c *= s;
    return *this;
  }

  friend ChowClass operator+(ChowClass a, const ChowClass &b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass &b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) { return a *= Rational(-1); }
  friend ChowClass operator*(ChowClass a, const Rational &s) { return a *= s; }
  friend ChowClass operator*(const Rational &s, ChowClass a) { return a *= s; }
  friend ChowClass operator*(const ChowClass &a, const ChowClass &b) { return intersect(a, b); }

  /// Product in the intersection ring.
  friend ChowClass intersect(const ChowClass &x, const ChowClass &y) {
    x.check(y);
    ChowClass out(x.variety_);
    const auto &basis = chow_basis(x.variety_);
    for (std::size_t p = 0; p < basis.size(); ++p) {
      if (x.coeffs_[p] == 0)
        continue;
      for (std::size_t q = 0; q < basis.size(); ++q) {
        if (y.coeffs_[q] == 0)
          continue;
        out.add_monomial(basis[p].i + basis[q].i, basis[p].j + basis[q].j,
                         x.coeffs_[p] * y.coeffs_[q]);
      }
    }
    return out;
  }

  ChowClass pow(int e) const {
    ChowClass out = one(variety_);
    for (int k = 0; k < e; ++k)
      out = out * *this;
    return out;
  }

  friend bool operator==(const ChowClass &a, const ChowClass &b) {
    return a.variety_ == b.variety_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    const auto names = chow_basis_names(variety_);
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0)
        continue;
      if (!s.empty())
        s += coeffs_[k] < 0 ? " - " : " + ";
      else if (coeffs_[k] < 0)
        s += "-";
      Rational mag = abs(coeffs_[k]);
      if (names[k] == "1")
        s += fibstab::to_string(mag);
      else
        s += (mag == 1 ? "" : fibstab::to_string(mag) + "*") + names[k];
    }
    return s.empty() ? "0" : s;
  }

private:
  void check(const ChowClass &o) const {
    if (!(o.variety_ == variety_))
      throw VarietyMismatch("classes on " + variety_.to_string() + " and " +
                            o.variety_.to_string());
  }

  // Adds c * u^i x^j after applying the ring relations:
  //   P1: h^2 = 0;  P2: h^3 = 0
  //   Y_l: f^2 = 0, u^2 = l*pt, everything above degree 2 vanishes
  //   Y_ab: v^2 = 0, u^3 = (a+b)*pt, everything above degree 3 vanishes
  void add_monomial(int i, int j, const Rational &c) {
    if (c == 0)
      return;
    if (j > 0 && !variety_.fibred())
      throw WrongVariety("fibre class on " + variety_.to_string());
    if (i + j > variety_.dim() || j >= 2)
      return;
    switch (variety_.kind()) {
    case VarietyKind::Hirzebruch:
      if (i == 2) {
        i = 1;
        j = 1;
        coeffs_[index(i, j)] += c * variety_.ell();
        return;
      }
      break;
    case VarietyKind::P2Bundle:
      if (i == 3) {
        coeffs_[index(2, 1)] += c * (variety_.a() + variety_.b());
        return;
      }
      break;
    default:
      break;
    }
    coeffs_[index(i, j)] += c;
  }

  std::size_t index(int i, int j) const {
    const auto &basis = chow_basis(variety_);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (basis[k].i == i && basis[k].j == j)
        return k;
    throw InvalidArgument("monomial is not a basis element");
  }

  VarietyTag variety_;
  std::vector<Rational> coeffs_;
};

/// exp(D) truncated at the dimension of the variety.
inline ChowClass exp_class(const ChowClass &d) {
  const VarietyTag &v = d.variety();
  ChowClass out = ChowClass::one(v);
  ChowClass power = ChowClass::one(v);
  Rational fact = 1;
  for (int k = 1; k <= v.dim(); ++k) {
    power = power * d;
    fact *= k;
    out += power * (Rational(1) / fact);
  }
  return out;
}

} // namespace fibstab
