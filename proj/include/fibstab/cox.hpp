#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fibstab/error.hpp"
#include "fibstab/rational.hpp"
#include "fibstab/variety.hpp"

namespace fibstab {

using Exponents = std::vector<int>;

inline Degree multidegree(const VarietyTag &v, const Exponents &e) {
  const auto degs = cox_variable_degrees(v);
  if (e.size() != degs.size())
    throw ShapeMismatch("exponent vector of length " + std::to_string(e.size()) + " for " +
                        v.to_string());
  Degree d;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0)
      throw InvalidArgument("negative exponent in Cox monomial");
    d.k += e[i] * degs[i].k;
    d.l += e[i] * degs[i].l;
  }
  return d;
}

namespace detail {

// All length-`parts` non-negative vectors summing to `total`.
inline void compositions(int total, std::size_t parts, Exponents &cur,
                         const std::function<void(const Exponents &)> &emit) {
  if (parts == 0) {
    if (total == 0)
      emit(cur);
    return;
  }
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int i = total; i >= 0; --i) {
    cur.push_back(i);
    compositions(total - i, parts - 1, cur, emit);
    cur.pop_back();
  }
}

} // namespace detail

/// Monomials of the given multidegree in the Cox ring of `v`, in descending
/// lexicographic order of exponent vectors. Empty for non-effective degrees.
inline std::vector<Exponents> cox_basis(const VarietyTag &v, Degree d) {
  std::vector<Exponents> out;
  if (d.k < 0)
    return out;
  if (!v.fibred()) {
    Exponents cur;
    const std::size_t nvars = v.kind() == VarietyKind::P1 ? 2 : 3;
    detail::compositions(static_cast<int>(d.k), nvars, cur,
                         [&](const Exponents &e) { out.push_back(e); });
    return out;
  }
  const auto degs = cox_variable_degrees(v);
  const std::size_t nf = fibre_variable_count(v);
  Exponents cur;
  detail::compositions(static_cast<int>(d.k), nf, cur, [&](const Exponents &fib) {
    long base = d.l;
    for (std::size_t i = 0; i < nf; ++i)
      base -= fib[i] * degs[i].l;
    if (base < 0)
      return;
    for (long j = base; j >= 0; --j) {
      Exponents e = fib;
      e.push_back(static_cast<int>(j));
      e.push_back(static_cast<int>(base - j));
      out.push_back(std::move(e));
    }
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Homogeneous polynomial in the Cox ring of a model variety, with exact
/// rational coefficients. The multidegree is carried explicitly so that the
/// zero polynomial still has a degree.
class CoxPolynomial {
public:
  CoxPolynomial(VarietyTag v, Degree d) : variety_(v), degree_(d) {}

  static CoxPolynomial monomial(VarietyTag v, const Exponents &e, const Rational &c = 1) {
    CoxPolynomial p(v, multidegree(v, e));
    p.add_term(e, c);
    return p;
  }
  static CoxPolynomial constant(VarietyTag v, const Rational &c) {
    return monomial(v, Exponents(cox_variable_degrees(v).size(), 0), c);
  }
  /// The i-th Cox variable.
  static CoxPolynomial variable(VarietyTag v, std::size_t i) {
    Exponents e(cox_variable_degrees(v).size(), 0);
    e.at(i) = 1;
    return monomial(v, e);
  }

  const VarietyTag &variety() const noexcept { return variety_; }
  Degree degree() const noexcept { return degree_; }
  const std::map<Exponents, Rational> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponents &e, const Rational &c) {
    if (multidegree(variety_, e) != degree_)
      throw NotHomogeneous("term of degree differing from polynomial degree");
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  CoxPolynomial &operator+=(const CoxPolynomial &o) {
    check_compatible(o);
    if (o.degree_ != degree_)
      throw NotHomogeneous("sum of polynomials of different degree");
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  CoxPolynomial &operator-=(const CoxPolynomial &o) {
    check_compatible(o);
    if (o.degree_ != degree_)
      throw NotHomogeneous("difference of polynomials of different degree");
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  CoxPolynomial &operator*=(const Rational &s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &[e, c] : terms_)
      c *= s;
    return *this;
  }

  friend CoxPolynomial operator+(CoxPolynomial a, const CoxPolynomial &b) { return a += b; }
  friend CoxPolynomial operator-(CoxPolynomial a, const CoxPolynomial &b) { return a -= b; }
  friend CoxPolynomial operator*(CoxPolynomial a, const Rational &s) { return a *= s; }
  friend CoxPolynomial operator*(const Rational &s, CoxPolynomial a) { return a *= s; }
  friend CoxPolynomial operator*(const CoxPolynomial &a, const CoxPolynomial &b) {
    return cox_multiply(a, b);
  }

  friend CoxPolynomial cox_multiply(const CoxPolynomial &p, const CoxPolynomial &q) {
    p.check_compatible(q);
    CoxPolynomial out(p.variety_, p.degree_ + q.degree_);
    Exponents e(p.nvars());
    for (const auto &[ep, cp] : p.terms_)
      for (const auto &[eq, cq] : q.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ep[i] + eq[i];
        out.add_term(e, cp * cq);
      }
    return out;
  }

  /// Value at a point given by Cox coordinates.
  Rational evaluate(const std::vector<Rational> &coords) const {
    if (coords.size() != nvars())
      throw ShapeMismatch("point has wrong number of Cox coordinates");
    Rational total = 0;
    for (const auto &[e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k)
          t *= coords[i];
      total += t;
    }
    return total;
  }

  friend bool operator==(const CoxPolynomial &a, const CoxPolynomial &b) {
    return a.variety_ == b.variety_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty())
      return "0";
    const auto names = cox_variable_names(variety_);
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto &[e, c] = *it;
      Rational mag = abs(c);
      s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      first = false;
      bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      if (mag != 1 || is_const)
        s += fibstab::to_string(mag) + (is_const ? "" : "*");
      bool first_var = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!first_var)
          s += "*";
        first_var = false;
        s += names[i];
        if (e[i] > 1)
          s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

  std::size_t nvars() const { return cox_variable_degrees(variety_).size(); }

private:
  void check_compatible(const CoxPolynomial &o) const {
    if (!(o.variety_ == variety_))
      throw VarietyMismatch("Cox polynomials on " + variety_.to_string() + " and " +
                            o.variety_.to_string());
  }

  VarietyTag variety_;
  Degree degree_;
  std::map<Exponents, Rational> terms_;
};

} // namespace fibstab
