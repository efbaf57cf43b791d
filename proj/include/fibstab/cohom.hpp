#pragma once

#include <algorithm>
#include <vector>

#include "fibstab/chow.hpp"
#include "fibstab/cox.hpp"
#include "fibstab/error.hpp"
#include "fibstab/geom.hpp"
#include "fibstab/variety.hpp"

namespace fibstab {

/// Degrees of the line bundles on P^1 into which pi_* O_pi(k) splits
/// (ascending, with multiplicity). Y_l: {i l : 0 <= i <= k};
/// Y_ab: {i a + j b : i, j >= 0, i + j <= k}.
inline std::vector<long> pushforward_split(const VarietyTag &v, long k) {
  if (!v.fibred())
    throw WrongVariety(v.to_string() + " is not fibred over P^1");
  if (k < 0)
    throw NegativeTwist("pi_* O_pi(" + std::to_string(k) + ") vanishes");
  std::vector<long> out;
  if (v.kind() == VarietyKind::Hirzebruch) {
    for (long i = 0; i <= k; ++i)
      out.push_back(i * v.ell());
  } else {
    for (long i = 0; i <= k; ++i)
      for (long j = 0; i + j <= k; ++j)
        out.push_back(i * v.a() + j * v.b());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline long h0_p1(long d) { return d >= 0 ? d + 1 : 0; }
inline long h1_p1(long d) { return d <= -2 ? -d - 1 : 0; }

} // namespace detail

/// Cohomology of O(D) computed from the Leray decomposition over P^1,
/// D = k u + l (fibre class). For k >= 0 only pi_* is nonzero; for
/// k <= -(fibre dim + 1) only the top direct image is, and relative duality
/// identifies it with the dual of pi_*(O(-D) (x) omega_pi); in between every
/// direct image vanishes.
inline std::vector<long> h_line_bundle_leray(const VarietyTag &v, Degree d) {
  if (!v.fibred())
    throw WrongVariety("Leray decomposition needs a fibred variety");
  const int n = v.dim();
  std::vector<long> h(n + 1, 0);
  const long fibre_dim = n - 1;
  if (d.k >= 0) {
    for (long s : pushforward_split(v, d.k)) {
      h[0] += detail::h0_p1(d.l + s);
      h[1] += detail::h1_p1(d.l + s);
    }
  } else if (d.k <= -(fibre_dim + 1)) {
    const auto [rk, rl] = relative_canonical_class(v).divisor_coords();
    const long twist = to_long(rl);
    for (long s : pushforward_split(v, -d.k + to_long(rk))) {
      const long deg = d.l - twist - s;
      h[fibre_dim] += detail::h0_p1(deg);
      h[fibre_dim + 1] += detail::h1_p1(deg);
    }
  }
  return h;
}

/// h^i(V, O(D)) for i = 0..dim V, where D = k u + l (fibre class), or k h on
/// P^1 / P^2. h^0 counts Cox monomials of D, h^top counts Cox monomials of
/// K - D (Serre duality), and the middle groups come from the Leray
/// decomposition.
inline std::vector<long> h_line_bundle(const VarietyTag &v, Degree d) {
  const int n = v.dim();
  std::vector<long> h(n + 1, 0);
  h[0] = static_cast<long>(cox_basis(v, d).size());
  const auto [kk, kl] = canonical_class(v).divisor_coords();
  const Degree dual{to_long(kk) - d.k, to_long(kl) - d.l};
  h[n] = static_cast<long>(cox_basis(v, dual).size());
  if (v.fibred()) {
    const auto leray = h_line_bundle_leray(v, d);
    for (int i = 1; i < n; ++i)
      h[i] = leray[i];
  }
  // P^2 line bundles have h^1 = 0; P^1 has no middle group.
  return h;
}

inline std::vector<long> h_line_bundle(const ChowClass &cls) {
  const auto [k, l] = cls.divisor_coords();
  return h_line_bundle(cls.variety(), Degree{to_long(k), to_long(l)});
}

} // namespace fibstab
