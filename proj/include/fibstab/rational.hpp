#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "fibstab/error.hpp"

namespace fibstab {

// mpq_class keeps numerator/denominator in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms (the two-argument mpq_class constructor does not
/// canonicalize).
inline Rational ratio(long n, long d) {
  if (d == 0)
    throw InvalidArgument("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational &q) { return q.get_den() == 1; }

inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// "p/q" form; integers are written without the "/1".
inline std::string to_string(const Rational &q) { return q.get_str(10); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_of(".eE ") != std::string::npos)
    throw ParseError("not a rational literal: '" + s + "'");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ParseError("not a rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

inline long to_long(const Rational &q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw NonIntegralResult("value " + to_string(q) + " is not a machine integer");
  return q.get_num().get_si();
}

/// Small random rationals for seeded property sweeps: numerator in
/// [-bound, bound], denominator in [1, max_den].
inline Rational random_rational(std::mt19937_64 &rng, long bound, long max_den = 1) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937_64 &rng, long bound, long max_den = 1) {
  Rational q;
  do {
    q = random_rational(rng, bound, max_den);
  } while (q == 0);
  return q;
}

} // namespace fibstab
