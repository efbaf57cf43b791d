#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fibstab/error.hpp"

namespace fibstab {

enum class VarietyKind { P1, P2, Hirzebruch, P2Bundle };

/// One of the model varieties: P^1, P^2, the Hirzebruch surface Y_l, or the
/// P^2-bundle Y_{a,b} = P(O + O(-a) + O(-b)) over P^1.
class VarietyTag {
public:
  static VarietyTag p1() { return VarietyTag(VarietyKind::P1, 0, 0); }
  static VarietyTag p2() { return VarietyTag(VarietyKind::P2, 0, 0); }
  static VarietyTag hirzebruch(long l) {
    if (l < 0)
      throw InvalidArgument("Hirzebruch surface needs l >= 0, got " + std::to_string(l));
    return VarietyTag(VarietyKind::Hirzebruch, l, 0);
  }
  static VarietyTag p2_bundle(long a, long b) {
    if (a < 0 || b < a)
      throw InvalidArgument("P2-bundle needs 0 <= a <= b, got (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    return VarietyTag(VarietyKind::P2Bundle, a, b);
  }

  /// Parses "p1", "p2", "hirzebruch:L", "p2bundle:A,B".
  static VarietyTag parse(std::string_view text);

  VarietyKind kind() const noexcept { return kind_; }
  long ell() const noexcept { return p_; }
  long a() const noexcept { return p_; }
  long b() const noexcept { return q_; }

  int dim() const noexcept {
    switch (kind_) {
    case VarietyKind::P1:
      return 1;
    case VarietyKind::P2:
    case VarietyKind::Hirzebruch:
      return 2;
    case VarietyKind::P2Bundle:
      return 3;
    }
    return 0;
  }

  bool fibred() const noexcept {
    return kind_ == VarietyKind::Hirzebruch || kind_ == VarietyKind::P2Bundle;
  }
  int picard_rank() const noexcept { return fibred() ? 2 : 1; }

  std::string to_string() const {
    switch (kind_) {
    case VarietyKind::P1:
      return "p1";
    case VarietyKind::P2:
      return "p2";
    case VarietyKind::Hirzebruch:
      return "hirzebruch:" + std::to_string(p_);
    case VarietyKind::P2Bundle:
      return "p2bundle:" + std::to_string(p_) + "," + std::to_string(q_);
    }
    return {};
  }

  friend bool operator==(const VarietyTag &, const VarietyTag &) = default;

private:
  VarietyTag(VarietyKind k, long p, long q) : kind_(k), p_(p), q_(q) {}

  VarietyKind kind_;
  long p_;
  long q_;
};

inline VarietyTag VarietyTag::parse(std::string_view text) {
  auto fail = [&] { return ParseError("unknown variety '" + std::string(text) + "'"); };
  auto to_long = [&](std::string_view s) {
    if (s.empty())
      throw fail();
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(std::string(s), &used);
    } catch (const std::exception &) {
      throw fail();
    }
    if (used != s.size())
      throw fail();
    return v;
  };
  if (text == "p1")
    return p1();
  if (text == "p2")
    return p2();
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw fail();
  auto head = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  if (head == "hirzebruch")
    return hirzebruch(to_long(rest));
  if (head == "p2bundle") {
    auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw fail();
    return p2_bundle(to_long(rest.substr(0, comma)), to_long(rest.substr(comma + 1)));
  }
  throw fail();
}

/// Picard-lattice element k*u + l*(fibre class). On P^1 and P^2 only k is
/// used (the hyperplane class).
struct Degree {
  long k = 0;
  long l = 0;

  friend Degree operator+(Degree x, Degree y) { return {x.k + y.k, x.l + y.l}; }
  friend Degree operator-(Degree x, Degree y) { return {x.k - y.k, x.l - y.l}; }
  friend auto operator<=>(const Degree &, const Degree &) = default;
};

/// Cox-ring variable names and degrees.
///   P1: w0 w1 (1);  P2: x0 x1 x2 (1)
///   Y_l: y0 (u), y1 (u - l f), w0 w1 (f)
///   Y_ab: z0 (u), z1 (u - a v), z2 (u - b v), w0 w1 (v)
inline std::vector<std::string> cox_variable_names(const VarietyTag &v) {
  switch (v.kind()) {
  case VarietyKind::P1:
    return {"w0", "w1"};
  case VarietyKind::P2:
    return {"x0", "x1", "x2"};
  case VarietyKind::Hirzebruch:
    return {"y0", "y1", "w0", "w1"};
  case VarietyKind::P2Bundle:
    return {"z0", "z1", "z2", "w0", "w1"};
  }
  return {};
}

inline std::vector<Degree> cox_variable_degrees(const VarietyTag &v) {
  switch (v.kind()) {
  case VarietyKind::P1:
    return {{1, 0}, {1, 0}};
  case VarietyKind::P2:
    return {{1, 0}, {1, 0}, {1, 0}};
  case VarietyKind::Hirzebruch:
    return {{1, 0}, {1, -v.ell()}, {0, 1}, {0, 1}};
  case VarietyKind::P2Bundle:
    return {{1, 0}, {1, -v.a()}, {1, -v.b()}, {0, 1}, {0, 1}};
  }
  return {};
}

/// Number of fibre variables (the first ones in the Cox ordering) of a fibred variety.
inline std::size_t fibre_variable_count(const VarietyTag &v) {
  return v.kind() == VarietyKind::P2Bundle ? 3 : 2;
}

} // namespace fibstab
