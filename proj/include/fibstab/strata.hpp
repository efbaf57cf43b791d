#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fibstab/error.hpp"

namespace fibstab {

/// Splitting type of a bundle O(-a_1)^r_1 + ... + O(-a_p)^r_p on P^1.
struct SplitType {
  std::vector<std::pair<long, long>> parts; // (a_j, r_j), a_j strictly increasing

  long rank() const {
    long r = 0;
    for (auto [a, m] : parts)
      r += m;
    return r;
  }
  long n_F() const {
    long n = 0;
    for (auto [a, m] : parts)
      n += a * m;
    return n;
  }
  bool valid() const {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].first < 0 || parts[j].second < 1)
        return false;
      if (j > 0 && parts[j].first <= parts[j - 1].first)
        return false;
    }
    return !parts.empty();
  }
  std::string to_string() const {
    std::string out;
    for (auto [a, m] : parts) {
      if (!out.empty())
        out += " + ";
      out += "O(" + std::to_string(-a) + ")^" + std::to_string(m);
    }
    return out;
  }
  friend bool operator==(const SplitType &, const SplitType &) = default;
  friend auto operator<=>(const SplitType &, const SplitType &) = default;
};

using BVector = std::vector<long>;

namespace detail {

inline void split_rec(long r_left, long n_left, long min_a, SplitType &cur,
                      std::vector<SplitType> &out) {
  if (r_left == 0) {
    if (n_left == 0)
      out.push_back(cur);
    return;
  }
  for (long a = min_a; a * r_left <= n_left || (a == 0 && n_left == 0); ++a) {
    for (long m = 1; m <= r_left && a * m <= n_left; ++m) {
      cur.parts.emplace_back(a, m);
      split_rec(r_left - m, n_left - a * m, a + 1, cur, out);
      cur.parts.pop_back();
    }
    if (a == 0 && n_left == 0)
      break;
  }
}

} // namespace detail

inline std::vector<SplitType> enumerate_split_types(long r, long n_F) {
  if (r < 1 || n_F < 0)
    throw InvalidArgument("need r >= 1 and n_F >= 0");
  std::vector<SplitType> out;
  SplitType cur;
  detail::split_rec(r, n_F, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline SplitType generic_split(long r, long n_F) {
  if (r < 1 || n_F < 0)
    throw InvalidArgument("need r >= 1 and n_F >= 0");
  const long a1 = n_F / r;
  const long r2 = n_F - r * a1;
  SplitType t;
  t.parts.emplace_back(a1, r - r2);
  if (r2 > 0)
    t.parts.emplace_back(a1 + 1, r2);
  return t;
}

inline long dim_end(const SplitType &t) {
  long d = 0;
  for (std::size_t i = 0; i < t.parts.size(); ++i)
    for (std::size_t k = i; k < t.parts.size(); ++k)
      d += t.parts[k].second * t.parts[i].second * (t.parts[k].first - t.parts[i].first + 1);
  return d;
}

inline long ext1_Q_piL(long r, long n, long n_F) {
  if (n_F < 0 || n < n_F)
    throw InvalidArgument("need n >= n_F >= 0");
  return r * (n + n_F);
}

struct ModuliDims {
  long moduli_dim;
  long hilb_fiber_dim;
  long group_dim;
  long extension_space_dim;
};

inline ModuliDims moduli_dims(long r, long n) {
  if (r < 2 || n < r)
    throw RankOutOfRange("need n >= r >= 2, got r=" + std::to_string(r) +
                         " n=" + std::to_string(n));
  ModuliDims d{2 * r * n - r * r + 1, 2 * r * n - r * r - n + 1, r * r + n - 1, 2 * n * r};
  if (d.extension_space_dim - d.group_dim != d.hilb_fiber_dim)
    throw std::logic_error("moduli dimension identity violated");
  return d;
}

/// Upper bound ext^1(F,F) - r(n - n_F) for the stratum of sheaves with given n_F.
inline long stratum_dim_bound(long r, long n, long n_F) {
  return moduli_dims(r, n).moduli_dim - r * (n - n_F);
}

inline bool check_ineq_FG(long r, long n, long r_prime, long n_prime) {
  if (r_prime < 1 || r_prime >= r || n_prime < r_prime || n_prime > n)
    throw InvalidArgument("need 1 <= r' < r and r' <= n' <= n");
  return 2 * r * n - r * r + 1 > 2 * r_prime * n_prime - r_prime * r_prime + 1;
}

inline std::vector<BVector> enumerate_bvectors(long n, long n_F) {
  if (n_F < 1 || n < n_F)
    throw InvalidArgument("need 1 <= n_F <= n");
  std::vector<BVector> out;
  BVector cur;
  auto rec = [&](auto &&self, long left, long slots) -> void {
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (long b = 1; b <= left - (slots - 1); ++b) {
      cur.push_back(b);
      self(self, left - b, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, n, n_F);
  return out;
}

} // namespace fibstab
