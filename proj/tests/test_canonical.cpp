#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fibstab/canonical.hpp"

using namespace fibstab;

namespace {

const std::vector<std::pair<long, long>> kShapes{{2, 3}, {2, 4}, {3, 5}, {3, 7}, {2, 5}, {4, 9}};

PointConfig random_config(std::size_t n, std::mt19937_64 &rng) {
  for (;;) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i)
      xs.push_back(random_rational(rng, 9, 2));
    try {
      return PointConfig(xs);
    } catch (const InvalidArgument &) {
    }
  }
}

// Canonical data built by hand: [I] = 1, [III] = 0, [IV] = 1, [V] = 0, rest random.
MatrixPairE random_canonical(long r, long n, std::mt19937_64 &rng) {
  auto e = MatrixPairE::random(r, PointConfig::range(n), rng);
  const long r1 = e.r1, r2 = e.r2;
  e.left.set_block(0, 0, RationalMatrix::identity(r1));
  e.left.set_block(0, r1, RationalMatrix(r1, r2));
  e.left.set_block(r1, r1, RationalMatrix::identity(r2));
  e.left.set_block(0, r, RationalMatrix(r1, r2));
  return e;
}

} // namespace

TEST_CASE("point configurations", "[canonical]") {
  PointConfig p({Rational(1), Rational(2)});
  CHECK(p.s(0) == 1);
  CHECK(p.s(1) == 3);
  CHECK(p.s(2) == 2);
  CHECK_THROWS_AS(PointConfig({Rational(1), Rational(1)}), InvalidArgument);
  PointConfig q({Rational(0), Rational(1), Rational(2)});
  CHECK(q.s(1) == 3);
  CHECK(q.s(2) == 2);
  CHECK(q.s(3) == 0);
}

TEST_CASE("shift is multiplication by z", "[canonical]") {
  PointConfig p({Rational(1), Rational(2)});
  MatrixPairE e(2, p, RationalMatrix(2, 2), RationalMatrix(2, 2));
  // V = [v0 v1] with v0 = (1), v1 = (10).
  RationalMatrix V{{1, 10}};
  CHECK(shift(e, V) == RationalMatrix{{-20, 31}});

  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto cfg = random_config(n, rng);
    MatrixPairE f(1, cfg, RationalMatrix(1, n), RationalMatrix(1, n));
    auto W = RationalMatrix::random(3, n, rng);
    auto sw = shift(f, W);
    CHECK(to_evaluation_basis(f, sw) == to_evaluation_basis(f, W) * diagonal(cfg.points()));
    // Column 0 of the shift is (-1)^(n-1) s_n v_{n-1}.
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(sw(i, 0) == ((n - 1) % 2 == 0 ? 1 : -1) * cfg.s(n) * W(i, n - 1));
  }
}

TEST_CASE("group action", "[canonical]") {
  std::mt19937_64 rng(8);
  for (auto [r, n] : kShapes) {
    auto e = MatrixPairE::random(r, random_config(n, rng), rng);
    CHECK(act_autL(AutLElement::identity(e.r1, e.r2), e) == e);
    for (int t = 0; t < 10; ++t) {
      auto g = AutLElement::random(e.r1, e.r2, rng);
      auto h = AutLElement::random(e.r1, e.r2, rng);
      CHECK(act_autL(compose(g, h), e) == act_autL(g, act_autL(h, e)));
      auto gl = act_autL(g, e, Half::Left);
      CHECK(gl.right == e.right);
      CHECK(act_autL(g, e, Half::Right).left == e.left);
      CHECK(gl.left == act_autL(g, e).left);

      auto b = extract_blocks(e);
      auto gb = extract_blocks(gl);
      CHECK(gb.I == g.A * b.I + g.H0 * b.II + g.H1 * b.IIp);
      CHECK(gb.III == g.A * b.III + g.H0 * b.IV + g.H1 * b.IVp);
      CHECK(gb.V == g.A * b.V + g.H0 * b.VI + g.H1 * b.VIp);
      CHECK(gb.IV == g.B * b.IV);
      CHECK(gb.VI == g.B * b.VI);
    }
  }
  auto e = MatrixPairE::random(2, PointConfig::range(3), rng);
  CHECK_THROWS_AS(act_autL(AutLElement::identity(2, 0), e), ShapeMismatch);
  CHECK_THROWS_AS(MatrixPairE(2, PointConfig::range(3), RationalMatrix(2, 2), RationalMatrix(2, 3)),
                  ShapeMismatch);
}

TEST_CASE("block extraction", "[canonical]") {
  std::mt19937_64 rng(2);
  auto e = MatrixPairE::random(3, PointConfig::range(7), rng);
  CHECK(e.r1 == 2);
  CHECK(e.r2 == 1);
  auto b = extract_blocks(e);
  CHECK(b.I.shape() == "2x2");
  CHECK(b.III.shape() == "2x1");
  CHECK(b.V.shape() == "2x1");
  CHECK(b.IV.shape() == "1x1");
  CHECK(b.V(0, 0) == e.left(0, 3));
  CHECK(b.VI(0, 0) == e.left(2, 3));

  auto d = MatrixPairE::random(2, PointConfig::range(4), rng);
  CHECK(d.r2 == 0);
  auto bd = extract_blocks(d);
  CHECK(bd.I.shape() == "2x2");
  CHECK(bd.III.empty());
  CHECK(bd.IV.empty());
  CHECK(bd.V.empty());

  // n >= r always leaves enough columns; r = 3, n = 2 splits as (1, 2) and needs 5.
  auto short_e = MatrixPairE::random(3, PointConfig::range(2), rng);
  CHECK_THROWS_AS(extract_blocks(short_e), TooFewColumns);
}

TEST_CASE("reduction to the slice", "[canonical]") {
  std::mt19937_64 rng(23);
  for (auto [r, n] : kShapes) {
    for (int seed = 0; seed < 50; ++seed) {
      auto e = MatrixPairE::random(r, random_config(n, rng), rng);
      Reduction red;
      try {
        red = autL_reduce(e);
      } catch (const GenericityFailure &) {
        continue;
      }
      CHECK(is_canonical(red.canonical));
      CHECK(act_autL(red.g_used, e) == red.canonical);
      auto again = autL_reduce(red.canonical);
      CHECK(again.g_used.is_identity());
      CHECK(again.canonical == red.canonical);
      auto g = AutLElement::random(e.r1, e.r2, rng);
      auto moved = act_autL(g, e);
      CHECK(autL_reduce(moved).canonical == red.canonical);
    }
  }
  auto c = random_canonical(2, 3, rng);
  CHECK(autL_reduce(c).g_used.is_identity());
}

TEST_CASE("reduction genericity failures", "[canonical]") {
  std::mt19937_64 rng(3);
  auto e = MatrixPairE::random(3, PointConfig::range(7), rng);
  // [IV] is the 1x1 block in row 2, column 2.
  e.left(2, 2) = 0;
  try {
    autL_reduce(e);
    FAIL("expected a genericity failure");
  } catch (const GenericityFailure &f) {
    CHECK(f.block() == "IV");
  }

  // x = (0, 1, 2): shift(V) = (0, v0 - 2 v2, v1 + 3 v2), so with [IV] = v1 = 1 and
  // [VI] = v2 = 1 the block W = (v0 - 2) - 4 vanishes at v0 = 6.
  auto w = MatrixPairE(2, PointConfig::range(3), RationalMatrix{{1, 2, 3}, {6, 1, 1}},
                       RationalMatrix{{1, 0, 0}, {0, 1, 0}});
  try {
    autL_reduce(w);
    FAIL("expected a genericity failure");
  } catch (const GenericityFailure &f) {
    CHECK(f.block() == "W");
  }

  auto i = MatrixPairE::random(2, PointConfig::range(4), rng);
  i.left.set_block(0, 0, RationalMatrix{{1, 2}, {2, 4}});
  try {
    autL_reduce(i);
    FAIL("expected a genericity failure");
  } catch (const GenericityFailure &f) {
    CHECK(f.block() == "I");
  }
}

TEST_CASE("stabilizers of canonical points", "[canonical]") {
  std::mt19937_64 rng(50);
  for (auto [r, n] : std::vector<std::pair<long, long>>{{2, 3}, {3, 5}, {3, 7}}) {
    int solved = 0;
    for (int seed = 0; seed < 50; ++seed) {
      auto e = MatrixPairE::random(r, PointConfig::range(n), rng);
      Reduction red;
      try {
        red = autL_reduce(e);
      } catch (const GenericityFailure &) {
        continue;
      }
      auto s = stabilizer_solve(red.canonical);
      CHECK(s.trivial());
      ++solved;
    }
    CHECK(solved >= 40);
  }
  // Canonical data with everything else zero has a positive-dimensional stabilizer.
  MatrixPairE z(3, PointConfig::range(5),
                RationalMatrix{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}},
                RationalMatrix(3, 5));
  auto s = stabilizer_solve(z);
  CHECK(s.particular.is_identity());
  CHECK_FALSE(s.directions.empty());
  auto e = MatrixPairE::random(2, PointConfig::range(3), rng);
  if (!is_canonical(e))
    CHECK_THROWS_AS(stabilizer_solve(e), InvalidArgument);
}

TEST_CASE("torus reduction", "[canonical]") {
  PointConfig p({Rational(1), Rational(2)});
  MatrixPairE e(2, p, RationalMatrix{{1, 0}, {0, 1}}, RationalMatrix{{1, 1}, {0, 0}});
  auto t = t_reduce(e);
  CHECK(t.t == std::vector<Rational>{ratio(1, 2), ratio(1, 3)});
  CHECK(t.c == 1);
  auto evr = to_evaluation_basis(t.scaled, t.scaled.right);
  CHECK(evr(0, 0) == 1);
  CHECK(evr(0, 1) == 1);
  auto t2 = t_reduce(t.scaled);
  CHECK(t2.t == std::vector<Rational>{1, 1});
  CHECK(t2.scaled == t.scaled);

  MatrixPairE bad(2, p, RationalMatrix(2, 2), RationalMatrix{{2, -1}, {0, 0}});
  CHECK_THROWS_AS(t_reduce(bad), ZeroEvaluationEntry);

  std::mt19937_64 rng(77);
  for (auto [r, n] : kShapes) {
    for (int seed = 0; seed < 20; ++seed) {
      auto f = MatrixPairE::random(r, random_config(n, rng), rng);
      TReduction base;
      try {
        base = t_reduce(f);
      } catch (const ZeroEvaluationEntry &) {
        continue;
      }
      std::vector<Rational> tor;
      for (long i = 0; i < n; ++i)
        tor.push_back(random_nonzero_rational(rng, 5, 3));
      CHECK(t_reduce(act_torus(tor, f)).scaled == base.scaled);
    }
  }
}

TEST_CASE("slice codimension bookkeeping", "[canonical]") {
  auto a = slice_report(2, 3);
  CHECK(a.codim == 6);
  CHECK(a.autL_constraints == 4);
  CHECK(a.torus_constraints == 2);
  auto b = slice_report(3, 7);
  CHECK(b.codim == 15);
  CHECK(b.autL_constraints == 9);
  CHECK(b.torus_constraints == 6);
  CHECK(slice_report(2, 4).autL_constraints == 4);
  CHECK_THROWS_AS(slice_report(3, 2), RankOutOfRange);
}
