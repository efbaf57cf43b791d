#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fibstab/canonical.hpp"
#include "fibstab/cohom.hpp"
#include "fibstab/geom.hpp"
#include "fibstab/monad.hpp"
#include "fibstab/stability.hpp"
#include "fibstab/strata.hpp"

namespace fibstab {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct CriterionResult {
  int id;
  std::string title;
  long checks = 0;
  long failures = 0;
  std::string first_failure{};
  long redraws = 0;
  double seconds = 0;

  bool pass() const { return failures == 0 && checks > 0; }

  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok) {
      if (failures == 0)
        first_failure = what;
      ++failures;
    }
  }
};

namespace sweep_detail {

inline const std::vector<std::pair<long, long>> &ab_list() {
  static const std::vector<std::pair<long, long>> v{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 3}};
  return v;
}

inline std::vector<VarietyTag> fibred_varieties() {
  std::vector<VarietyTag> out;
  for (long l = 0; l <= 3; ++l)
    out.push_back(VarietyTag::hirzebruch(l));
  for (auto [a, b] : ab_list())
    out.push_back(VarietyTag::p2_bundle(a, b));
  return out;
}

inline std::string ctx(const VarietyTag &v, const std::string &rest) {
  return v.to_string() + " " + rest;
}

/// 1 + (3u - (a+b-2)v)/2 + u^2 - (4(a+b)-9)uv/6 + u^2 v.
inline ChowClass closed_form_todd(long a, long b) {
  const auto v = VarietyTag::p2_bundle(a, b);
  const auto u = ChowClass::u(v), f = ChowClass::fibre(v);
  const Rational s = a + b;
  return ChowClass::one(v) + (u * 3 - f * (s - 2)) * ratio(1, 2) + u * u -
         u * f * ((4 * s - 9) / Rational(6)) + u * u * f;
}

/// Extension data with nonzero rational entries at the points 0, 1, ..., n-1.
inline MatrixPairE generic_pair(long r, long n, std::mt19937_64 &rng) {
  RationalMatrix l(r, n), rt(r, n);
  for (auto *m : {&l, &rt})
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < n; ++j)
        (*m)(i, j) = random_nonzero_rational(rng, 9, 7);
  return MatrixPairE(r, PointConfig::range(n), std::move(l), std::move(rt));
}

} // namespace sweep_detail

inline CriterionResult criterion_grr(std::uint64_t) {
  CriterionResult res{1, "GRR pushforward of (r, 0, n pt) on Y_l is (r, -n)"};
  for (long l = 0; l <= 3; ++l) {
    const auto y = VarietyTag::hirzebruch(l);
    for (long r = 1; r <= 5; ++r)
      for (long n = 0; n <= 8; ++n) {
        auto pf = grr_pushforward(
            ChernData::from_chern_classes(r, ChowClass(y), ChowClass::point(y) * n));
        res.expect(pf.rank() == r && pf.ch().degree() == -n,
                   sweep_detail::ctx(y, "r=" + std::to_string(r) + " n=" + std::to_string(n)));
      }
  }
  return res;
}

inline CriterionResult criterion_euler(std::uint64_t) {
  CriterionResult res{2, "chi(End F) on Y_l and Y_ab"};
  for (long r = 2; r <= 4; ++r)
    for (long n = r; n <= 8; ++n) {
      for (long l = 0; l <= 3; ++l) {
        const auto y = VarietyTag::hirzebruch(l);
        auto f = ChernData::from_chern_classes(r, ChowClass(y), ChowClass::point(y) * n);
        res.expect(euler_characteristic(f.endomorphisms()) == -2 * r * n + r * r,
                   sweep_detail::ctx(y, "r=" + std::to_string(r) + " n=" + std::to_string(n)));
      }
      for (auto [a, b] : sweep_detail::ab_list()) {
        const auto v = VarietyTag::p2_bundle(a, b);
        const auto u = ChowClass::u(v);
        auto f = ChernData::from_chern_classes(r, ChowClass(v), u * u * n);
        const long m = 2 * (1 + a + b) * n * r - r * r + 1;
        res.expect(euler_characteristic(f.endomorphisms()) == 1 - m,
                   sweep_detail::ctx(v, "r=" + std::to_string(r) + " n=" + std::to_string(n)));
      }
    }
  return res;
}

inline CriterionResult criterion_minus_one(std::uint64_t) {
  CriterionResult res{3, "chi(S(-1,-1)) = 0 with the closed-form Todd class"};
  for (auto [a, b] : sweep_detail::ab_list()) {
    const auto v = VarietyTag::p2_bundle(a, b);
    const auto td = sweep_detail::closed_form_todd(a, b);
    res.expect(td == todd_class(v), sweep_detail::ctx(v, "Todd class"));
    const auto u = ChowClass::u(v);
    const auto twist = ChowClass::divisor(v, -1, -1);
    for (long r = 1; r <= 4; ++r)
      for (long n = 0; n <= 8; ++n) {
        auto s = ChernData::from_chern_classes(r, ChowClass(v), u * u * n).twist(twist);
        res.expect((s.ch() * td).degree() == 0,
                   sweep_detail::ctx(v, "r=" + std::to_string(r) + " n=" + std::to_string(n)));
      }
  }
  return res;
}

inline CriterionResult criterion_hodge(std::uint64_t seed) {
  CriterionResult res{4, "Hodge index inequality on random divisor classes"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-10, 10);
  for (const auto &v : sweep_detail::fibred_varieties()) {
    FibrationFrame f(v);
    for (int t = 0; t < 1000; ++t) {
      const long x = coef(rng), y = coef(rng);
      const Rational c = abs(random_rational(rng, 20, 7));
      auto h = hodge_inequality_check(f, ChowClass::divisor(v, x, y), c);
      res.expect(h.holds, sweep_detail::ctx(v, "xi=(" + std::to_string(x) + "," +
                                                   std::to_string(y) + ") c=" + to_string(c)));
    }
  }
  return res;
}

inline CriterionResult criterion_threshold(std::uint64_t) {
  CriterionResult res{5, "c_F specializes to r(r-1)n and r(r-1)n(a+b)"};
  for (long r = 2; r <= 4; ++r)
    for (long n = r; n <= 8; ++n) {
      for (long l = 0; l <= 3; ++l) {
        const auto y = VarietyTag::hirzebruch(l);
        SheafNumData s(r, ChowClass(y), ChowClass::point(y) * n);
        res.expect(threshold_cF(FibrationFrame(y), s) == r * (r - 1) * n,
                   sweep_detail::ctx(y, "r=" + std::to_string(r) + " n=" + std::to_string(n)));
      }
      for (auto [a, b] : sweep_detail::ab_list()) {
        const auto v = VarietyTag::p2_bundle(a, b);
        const auto u = ChowClass::u(v);
        SheafNumData s(r, ChowClass(v), u * u * n);
        res.expect(threshold_cF(FibrationFrame(v), s) == r * (r - 1) * n * (a + b),
                   sweep_detail::ctx(v, "r=" + std::to_string(r) + " n=" + std::to_string(n)));
      }
    }
  return res;
}

inline CriterionResult criterion_strata(std::uint64_t) {
  CriterionResult res{6, "End dimension, moduli identity and dimension inequality"};
  for (long r = 1; r <= 5; ++r)
    for (long nf = 0; nf <= 12; ++nf) {
      const auto gen = generic_split(r, nf);
      for (const auto &t : enumerate_split_types(r, nf)) {
        const long d = dim_end(t);
        res.expect(d >= r * r && (d == r * r) == (t == gen), "split type " + t.to_string());
      }
    }
  for (long r = 2; r <= 6; ++r)
    for (long n = r; n <= 12; ++n) {
      auto d = moduli_dims(r, n);
      res.expect(d.extension_space_dim - d.group_dim == d.hilb_fiber_dim,
                 "moduli dims r=" + std::to_string(r) + " n=" + std::to_string(n));
      for (long rp = 1; rp < r; ++rp)
        for (long np = rp; np <= n; ++np)
          res.expect(check_ineq_FG(r, n, rp, np), "inequality r=" + std::to_string(r) +
                                                      " n=" + std::to_string(n) + " r'=" +
                                                      std::to_string(rp) + " n'=" +
                                                      std::to_string(np));
    }
  return res;
}

inline CriterionResult criterion_canonical(std::uint64_t seed) {
  CriterionResult res{7, "canonical form: reduction, slice property, stabilizers, torus"};
  for (auto [r, n] : std::vector<std::pair<long, long>>{{2, 3}, {2, 4}, {3, 5}, {3, 7}}) {
    const std::string shape = "(" + std::to_string(r) + "," + std::to_string(n) + ")";
    for (std::uint64_t s = 0; s < 50; ++s) {
      std::mt19937_64 rng(seed + 1000 * r + 100 * n + s);
      const std::string where = shape + " seed " + std::to_string(s);
      // Draws outside the genericity conditions of the reductions are redrawn.
      MatrixPairE e;
      Reduction red;
      TReduction base;
      bool generic = false;
      for (int attempt = 0; attempt < 10 && !generic; ++attempt) {
        e = sweep_detail::generic_pair(r, n, rng);
        try {
          red = autL_reduce(e);
          base = t_reduce(e);
          generic = true;
        } catch (const GenericityFailure &) {
          ++res.redraws;
        } catch (const ZeroEvaluationEntry &) {
          ++res.redraws;
        }
      }
      if (!generic) {
        res.expect(false, where + ": no generic sample in 10 draws");
        continue;
      }
      res.expect(is_canonical(red.canonical) && act_autL(red.g_used, e) == red.canonical,
                 where + ": reduction");
      res.expect(autL_reduce(red.canonical).g_used.is_identity(), where + ": idempotence");
      for (int k = 0; k < 20; ++k) {
        const auto g = AutLElement::random(e.r1, e.r2, rng);
        res.expect(autL_reduce(act_autL(g, e)).canonical == red.canonical,
                   where + ": orbit constancy");
      }
      res.expect(stabilizer_solve(red.canonical).trivial(), where + ": stabilizer");
      std::vector<Rational> t;
      for (long i = 0; i < n; ++i)
        t.push_back(random_nonzero_rational(rng, 5, 3));
      res.expect(t_reduce(act_torus(t, e)).scaled == base.scaled,
                 where + ": torus orbit constancy");
    }
  }
  return res;
}

inline CriterionResult criterion_monad(std::uint64_t seed) {
  CriterionResult res{8, "monads: compose, pointwise, Lambda, completion, Chern"};
  const auto p2 = pulled_back_p2_monad();
  res.expect(monad_compose_check(p2).ok, "P^2 monad compose check");
  const auto pw = pointwise_check(p2, 500, seed);
  res.expect(pw.A_injective && pw.B_surjective, "P^2 monad pointwise check");
  res.expect(restrict_to_Lambda(p2).trivial_on_Lambda, "P^2 monad trivial on Lambda");
  std::mt19937_64 rng(seed);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {0, 1}})
    for (auto [r, n] : std::vector<std::pair<long, long>>{{2, 1}, {2, 2}, {3, 2}}) {
      const auto v = VarietyTag::p2_bundle(a, b);
      for (int t = 0; t < 20; ++t) {
        auto m = random_monad(v, r, n, rng);
        res.expect(monad_compose_check(m).ok,
                   sweep_detail::ctx(v, "completion r=" + std::to_string(r) +
                                            " n=" + std::to_string(n)));
      }
    }
  for (long a = 0; a <= 3; ++a)
    for (long b = a; b <= 3; ++b) {
      const auto v = VarietyTag::p2_bundle(a, b);
      const auto u = ChowClass::u(v);
      for (long r = 1; r <= 5; ++r)
        for (long n = 0; n <= 5; ++n) {
          const auto ch = monad_chern(v, r, n);
          res.expect(ch.rank() == r && ch.c1().is_zero() && ch.c2() == u * u * n &&
                         ch.c3().is_zero(),
                     sweep_detail::ctx(v, "Chern r=" + std::to_string(r) +
                                              " n=" + std::to_string(n)));
        }
    }
  return res;
}

inline CriterionResult criterion_cohom(std::uint64_t seed) {
  CriterionResult res{9, "line bundle cohomology: Euler characteristic and Serre duality"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-6, 6);
  std::vector<VarietyTag> vs{VarietyTag::p1(), VarietyTag::p2()};
  for (const auto &v : sweep_detail::fibred_varieties())
    vs.push_back(v);
  for (const auto &v : vs) {
    const int n = v.dim();
    const auto [kk, kl] = canonical_class(v).divisor_coords();
    for (int t = 0; t < 200; ++t) {
      const long k = dist(rng), l = v.fibred() ? dist(rng) : 0;
      const auto h = h_line_bundle(v, Degree{k, l});
      const auto cls = v.fibred() ? ChowClass::divisor(v, k, l) : ChowClass::u(v) * k;
      long alt = 0;
      for (int i = 0; i <= n; ++i)
        alt += (i % 2 == 0 ? 1 : -1) * h[i];
      const std::string where =
          sweep_detail::ctx(v, "D=(" + std::to_string(k) + "," + std::to_string(l) + ")");
      res.expect(alt == euler_characteristic(ChernData::line_bundle(cls)), where + ": chi");
      const auto hd = h_line_bundle(v, Degree{to_long(kk) - k, v.fibred() ? to_long(kl) - l : 0});
      bool sym = true;
      for (int i = 0; i <= n; ++i)
        sym = sym && h[i] == hd[n - i];
      res.expect(sym, where + ": Serre duality");
    }
  }
  return res;
}

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed) {
  const std::vector<std::function<CriterionResult(std::uint64_t)>> suites{
      criterion_grr,       criterion_euler,    criterion_minus_one,
      criterion_hodge,     criterion_threshold, criterion_strata,
      criterion_canonical, criterion_monad,    criterion_cohom};
  std::vector<CriterionResult> out;
  for (const auto &suite : suites) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = suite(seed);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace fibstab
