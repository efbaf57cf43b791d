#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibstab/canonical.hpp"
#include "fibstab/cohom.hpp"
#include "fibstab/geom.hpp"
#include "fibstab/io.hpp"
#include "fibstab/monad.hpp"
#include "fibstab/stability.hpp"
#include "fibstab/strata.hpp"
#include "fibstab/sweep.hpp"

namespace fibstab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

inline std::vector<std::string> split_list(const std::string &s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    out.push_back(cur);
  if (!s.empty() && s.back() == sep)
    out.emplace_back();
  return out;
}

inline std::vector<Rational> parse_rationals(const std::string &s) {
  std::vector<Rational> out;
  for (const auto &part : split_list(s))
    out.push_back(parse_rational(part));
  return out;
}

inline long parse_long(const std::string &s) {
  const Rational q = parse_rational(s);
  if (!is_integer(q))
    throw ParseError("expected an integer, got '" + s + "'");
  return to_long(q);
}

/// Class of pure degree d from its coefficients on the basis monomials of
/// that degree, in basis order ("k,l" for k u + l f on a fibred surface).
inline ChowClass class_from_list(const VarietyTag &v, int d, const std::string &text) {
  const auto &basis = chow_basis(v);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k].i + basis[k].j == d)
      idx.push_back(k);
  ChowClass out(v);
  if (text.empty())
    return out;
  const auto vals = parse_rationals(text);
  if (vals.size() != idx.size()) {
    const auto names = chow_basis_names(v);
    std::string expect;
    for (auto k : idx)
      expect += (expect.empty() ? "" : ",") + names[k];
    throw ParseError("degree-" + std::to_string(d) + " class on " + v.to_string() + " needs " +
                     std::to_string(idx.size()) + " coefficients (" + expect + ")");
  }
  for (std::size_t k = 0; k < idx.size(); ++k)
    out[idx[k]] = vals[k];
  return out;
}

inline Degree parse_degree(const VarietyTag &v, const std::string &text) {
  const auto vals = split_list(text);
  if (vals.size() == 1 && !v.fibred())
    return Degree{parse_long(vals[0]), 0};
  if (vals.size() != 2)
    throw ParseError("degree must be 'k,l', got '" + text + "'");
  return Degree{parse_long(vals[0]), parse_long(vals[1])};
}

inline VarietyTag parse_variety(const std::string &text) {
  try {
    return VarietyTag::parse(text);
  } catch (const InvalidArgument &e) {
    throw ParseError(e.what());
  }
}

inline Json vector_json(const std::vector<long> &v) {
  Json j = Json::array();
  for (long x : v)
    j.push_back(x);
  return j;
}

inline Json rationals_json(const std::vector<Rational> &v) {
  Json j = Json::array();
  for (const auto &x : v)
    j.push_back(to_string(x));
  return j;
}

inline void flatten(const Json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

inline void emit(const Json &report, bool table, std::ostream &out) {
  if (!table) {
    out << report.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto &r : rows)
    width = std::max(width, r.first.size());
  for (const auto &[k, v] : rows)
    out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

inline Json header(const std::string &command) {
  Json j;
  j["format"] = 1;
  j["command"] = command;
  return j;
}

struct Options {
  bool table = false;
  std::uint64_t seed = kDefaultSeed;
  std::string variety;
  std::string alpha = "1";
  std::string L;
  long r = 1;
  long n = 0;
  std::string c1, c2, c3;
  std::string c = "0";
  std::string M, m;
  std::string deg;
  std::vector<std::string> terms;
  std::string monad;
  std::string family;
  std::optional<long> nF;
  std::string file;
  std::string out;
  std::string fiber;
  bool lambda = false;
  long samples = 100;
  std::string points;
};

inline Json cmd_slope(const Options &o) {
  const auto v = parse_variety(o.variety);
  const FibrationFrame f = o.L.empty() ? FibrationFrame(v, parse_rational(o.alpha))
                                       : FibrationFrame(class_from_list(v, 1, o.L),
                                                        parse_rational(o.alpha));
  const SheafNumData s(o.r, class_from_list(v, 1, o.c1), class_from_list(v, 2, o.c2));
  const Rational c = parse_rational(o.c);
  Json j = header("slope");
  j["variety"] = v.to_string();
  j["c"] = to_string(c);
  j["xi"] = to_json(s.xi());
  j["slope_Lc"] = to_string(slope_Lc(f, s, c));
  j["slope_usual"] = to_string(slope_usual(f, s, c));
  j["discriminant"] = to_json(discriminant(s));
  return j;
}

inline ChowClass default_c2(const VarietyTag &v, long n) {
  if (v.kind() == VarietyKind::P2Bundle)
    return ChowClass::u(v) * ChowClass::u(v) * n;
  return ChowClass::point(v) * n;
}

inline Json cmd_threshold(const Options &o) {
  const auto v = parse_variety(o.variety);
  const FibrationFrame f(v, parse_rational(o.alpha));
  const auto c2 = o.c2.empty() ? default_c2(v, o.n) : class_from_list(v, 2, o.c2);
  const SheafNumData s(o.r, class_from_list(v, 1, o.c1), c2);
  Json j = header("threshold");
  j["variety"] = v.to_string();
  j["r"] = o.r;
  j["c2"] = to_json(c2);
  if (s.c1.is_zero()) {
    const Rational cf = threshold_cF(f, s);
    j["c_F"] = to_string(cf);
    j["c_F_usual"] = to_string(compare_bound(f.d_x(), f.d_y(), cf));
  } else {
    j["c_F"] = nullptr;
  }
  j["c_F_prime"] = to_string(threshold_cF_prime(f, s));
  if (!o.M.empty() && !o.m.empty())
    j["a_F"] = to_string(threshold_aF(f, o.r, parse_rational(o.M), parse_rational(o.m)));
  if (o.r >= 2) {
    const auto b = relative_bounds_mu(f, s);
    j["relative_bounds"] = Json{{"mu_lower", to_string(b.mu1)},
                                {"mu_lower_split", to_string(b.mu2)},
                                {"c2_bound", to_string(b.mu3)}};
  }
  return j;
}

inline Json cmd_cohom(const Options &o) {
  const auto v = parse_variety(o.variety);
  const Degree d = parse_degree(v, o.deg);
  const auto h = h_line_bundle(v, d);
  long chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    chi += (i % 2 == 0 ? 1 : -1) * h[i];
  Json j = header("cohom");
  j["variety"] = v.to_string();
  j["degree"] = vector_json({d.k, d.l});
  j["h"] = vector_json(h);
  j["chi"] = chi;
  if (v.fibred() && d.k >= 0)
    j["pushforward_split"] = vector_json(pushforward_split(v, d.k));
  return j;
}

inline Json cmd_chern(const Options &o) {
  const auto v = parse_variety(o.variety);
  Json j = header("chern");
  j["variety"] = v.to_string();
  std::optional<ChernData> data;
  if (!o.family.empty()) {
    Family kind;
    if (o.family == "ft")
      kind = Family::F0_Ft;
    else if (o.family == "serre")
      kind = Family::Serre_rank2;
    else
      throw ParseError("family must be 'ft' or 'serre'");
    if (v.kind() != VarietyKind::P2Bundle)
      throw ParseError("families live on p2bundle varieties");
    auto rep = family_chern(kind, v, o.n, o.r);
    data = rep.mechanical;
    if (rep.asserted_c2)
      j["asserted_c2"] = to_json(*rep.asserted_c2);
  } else if (!o.monad.empty()) {
    const auto rn = split_list(o.monad);
    if (rn.size() != 2)
      throw ParseError("--monad takes 'r,n'");
    if (v.kind() != VarietyKind::P2Bundle)
      throw ParseError("monads live on p2bundle varieties");
    data = monad_chern(v, parse_long(rn[0]), parse_long(rn[1]));
  } else if (!o.terms.empty()) {
    std::vector<ResolutionTerm> terms;
    for (const auto &t : o.terms) {
      const auto pos = t.find(':');
      if (pos == std::string::npos)
        throw ParseError("term must be 'mult:class', got '" + t + "'");
      terms.push_back({parse_long(t.substr(0, pos)), class_from_list(v, 1, t.substr(pos + 1))});
    }
    data = chern_from_resolution(terms);
  } else {
    data = ChernData::from_chern_classes(o.r, class_from_list(v, 1, o.c1),
                                         class_from_list(v, 2, o.c2),
                                         o.c3.empty() ? Rational(0) : parse_rational(o.c3));
  }
  j["chern"] = to_json(*data);
  j["chi"] = to_string(Rational(euler_characteristic(*data)));
  return j;
}

inline Json cmd_grr(const Options &o) {
  const auto v = parse_variety(o.variety);
  const auto d = ChernData::from_chern_classes(o.r, class_from_list(v, 1, o.c1),
                                               class_from_list(v, 2, o.c2),
                                               o.c3.empty() ? Rational(0) : parse_rational(o.c3));
  const auto pf = grr_pushforward(d);
  Json j = header("grr");
  j["variety"] = v.to_string();
  j["input"] = to_json(d);
  j["pushforward"] = Json{{"rank", to_string(pf.rank())}, {"degree", to_string(pf.ch().degree())}};
  j["chi"] = to_string(euler_characteristic(d));
  return j;
}

inline Json cmd_strata(const Options &o) {
  const long nF = o.nF.value_or(o.n);
  Json j = header("strata");
  j["r"] = o.r;
  j["n"] = o.n;
  j["n_F"] = nF;
  const auto gen = generic_split(o.r, nF);
  j["generic_split"] = gen.to_string();
  Json types = Json::array();
  for (const auto &t : enumerate_split_types(o.r, nF))
    types.push_back(Json{{"split", t.to_string()}, {"dim_end", dim_end(t)}});
  j["split_types"] = types;
  if (nF >= 1 && nF <= o.n) {
    Json bs = Json::array();
    for (const auto &b : enumerate_bvectors(o.n, nF))
      bs.push_back(vector_json(b));
    j["bvectors"] = bs;
    j["ext1_Q"] = ext1_Q_piL(o.r, o.n, nF);
  }
  const auto d = moduli_dims(o.r, o.n);
  j["dims"] = Json{{"moduli_dim", d.moduli_dim},
                   {"hilb_fiber_dim", d.hilb_fiber_dim},
                   {"group_dim", d.group_dim},
                   {"extension_space_dim", d.extension_space_dim}};
  if (nF <= o.n)
    j["stratum_dim_bound"] = stratum_dim_bound(o.r, o.n, nF);
  const auto s = slice_report(o.r, o.n);
  j["slice"] = Json{{"codim", s.codim},
                    {"autL_constraints", s.autL_constraints},
                    {"torus_constraints", s.torus_constraints}};
  return j;
}

inline Json monad_summary(const MonadData &m, std::size_t samples, std::uint64_t seed) {
  Json j;
  m.validate();
  const auto cc = monad_compose_check(m);
  j["pass"] = cc.ok;
  j["compose_ok"] = cc.ok;
  if (!cc.ok)
    j["residual"] = to_json(cc.residual);
  const auto pw = pointwise_check(m, samples, seed);
  j["pointwise"] = Json{{"A_injective", pw.A_injective},
                        {"B_surjective", pw.B_surjective},
                        {"points_checked", pw.points_checked},
                        {"failures", pw.failures.size()}};
  if (!pw.failures.empty()) {
    const auto &f = pw.failures.front();
    j["pointwise"]["first_failure"] =
        Json{{"map", f.map}, {"rank", f.rank}, {"point", rationals_json(f.point)}};
  }
  const auto lr = restrict_to_Lambda(m);
  j["lambda"] = Json{{"constant", lr.constant}, {"trivial", lr.trivial_on_Lambda}};
  j["chern"] = to_json(monad_chern(m.variety, m.r, m.n));
  if (m.r >= 2 && m.n >= m.r) {
    const auto e = expected_dims(m.variety.a(), m.variety.b(), m.r, m.n);
    j["expected"] = Json{{"m", e.m}, {"chi_end", e.chi_end}};
  }
  return j;
}

inline Json cmd_monad_check(const Options &o, bool &pass) {
  const auto m = monad_from_json(read_json_file(o.file));
  Json j = header("monad check");
  j["variety"] = m.variety.to_string();
  j["r"] = m.r;
  j["n"] = m.n;
  j.update(monad_summary(m, o.samples, o.seed));
  pass = j["pass"].get<bool>();
  return j;
}

inline Json cmd_monad_complete(const Options &o) {
  std::mt19937_64 rng(o.seed);
  std::optional<MonadData> m;
  if (!o.file.empty()) {
    m = monad_from_json(read_json_file(o.file));
  } else {
    const auto v = parse_variety(o.variety);
    if (v.kind() != VarietyKind::P2Bundle)
      throw ParseError("monads live on p2bundle varieties");
    m = random_monad(v, o.r, o.n, rng);
  }
  const auto basis = monad_complete(m->variety, m->r, m->n, m->A);
  m->B = random_completion(m->variety, m->r, m->n, basis, rng);
  Json j = header("monad complete");
  j["variety"] = m->variety.to_string();
  j["solution_dim"] = basis.size();
  j["compose_ok"] = monad_compose_check(*m).ok;
  if (o.out.empty())
    j["monad"] = to_json(*m);
  else {
    write_json_file(o.out, to_json(*m));
    j["written"] = o.out;
  }
  return j;
}

inline Json cmd_monad_restrict(const Options &o) {
  const auto m = monad_from_json(read_json_file(o.file));
  Json j = header("monad restrict");
  if (o.lambda) {
    const auto lr = restrict_to_Lambda(m);
    j["lambda"] = Json{{"A", to_json(lr.A_const)},
                       {"B", to_json(lr.B_const)},
                       {"constant", lr.constant},
                       {"trivial", lr.trivial_on_Lambda}};
  }
  if (!o.fiber.empty()) {
    const auto w = parse_rationals(o.fiber);
    if (w.size() != 2)
      throw ParseError("--fiber takes 'w0,w1'");
    const auto res = restrict_to_fiber(m, w[0], w[1]);
    j["fiber"] = Json{{"point", rationals_json(w)},
                      {"A", to_json(res.A)},
                      {"B", to_json(res.B)},
                      {"compose_ok", (res.B * res.A).is_zero()}};
  }
  if (!o.lambda && o.fiber.empty())
    throw ParseError("monad restrict needs --fiber or --lambda");
  return j;
}

inline Json cmd_canon_random(const Options &o) {
  std::mt19937_64 rng(o.seed);
  const auto cfg = o.points.empty() ? PointConfig::range(o.n)
                                    : PointConfig(parse_rationals(o.points));
  const auto e = MatrixPairE::random(o.r, cfg, rng, 9, 7);
  Json j = header("canon random");
  if (o.out.empty())
    j["data"] = to_json(e);
  else {
    write_json_file(o.out, to_json(e));
    j["written"] = o.out;
  }
  return j;
}

inline Json cmd_canon_reduce(const Options &o) {
  const auto e = pair_from_json(read_json_file(o.file));
  const auto red = autL_reduce(e);
  Json j = header("canon reduce");
  j["r1"] = e.r1;
  j["r2"] = e.r2;
  j["canonical"] = to_json(red.canonical);
  j["g_used"] = to_json(red.g_used);
  return j;
}

inline Json cmd_canon_stabilizer(const Options &o) {
  auto e = pair_from_json(read_json_file(o.file));
  Json j = header("canon stabilizer");
  j["reduced_first"] = !is_canonical(e);
  if (!is_canonical(e))
    e = autL_reduce(e).canonical;
  const auto s = stabilizer_solve(e);
  j["trivial"] = s.trivial();
  j["dimension"] = s.directions.size();
  j["particular"] = to_json(s.particular);
  return j;
}

inline Json cmd_canon_treduce(const Options &o) {
  const auto e = pair_from_json(read_json_file(o.file));
  const auto t = t_reduce(e);
  Json j = header("canon treduce");
  j["basis"] = "evaluation";
  j["t"] = rationals_json(t.t);
  j["c"] = to_string(t.c);
  j["scaled"] = to_json(t.scaled);
  return j;
}

inline Json cmd_sweep(const Options &o, bool &all_pass) {
  Json j = header("sweep");
  j["seed"] = o.seed;
  Json rows = Json::array();
  all_pass = true;
  for (const auto &r : run_acceptance(o.seed)) {
    Json row{{"criterion", r.id},
             {"title", r.title},
             {"pass", r.pass()},
             {"checks", r.checks},
             {"failures", r.failures},
             {"redraws", r.redraws}};
    if (!r.pass())
      row["first_failure"] = r.first_failure;
    rows.push_back(row);
    all_pass = all_pass && r.pass();
  }
  j["criteria"] = rows;
  j["all_pass"] = all_pass;
  return j;
}

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact computations for sheaves on fibrations over P^1", "fibstab"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--table", o.table, "Plain key/value table instead of JSON");
  app.add_option("--seed", o.seed, "Seed for every randomized step")->capture_default_str();

  auto variety_opt = [&](CLI::App *sub, bool required) {
    auto *opt = sub->add_option("--variety", o.variety,
                                "p1 | p2 | hirzebruch:L | p2bundle:A,B");
    if (required)
      opt->required();
  };

  auto *slope = app.add_subcommand("slope", "L_c slope and usual slope of a sheaf");
  variety_opt(slope, true);
  slope->add_option("--alpha", o.alpha, "Degree of A on the base");
  slope->add_option("--L", o.L, "Class L as k,l (default u)");
  slope->add_option("--r", o.r, "Rank");
  slope->add_option("--c1", o.c1, "c1 as k,l");
  slope->add_option("--c2", o.c2, "c2 coefficients on the degree-2 basis");
  slope->add_option("--c", o.c, "Polarization parameter c >= 0");

  auto *threshold = app.add_subcommand("threshold", "Stability thresholds c_F, c'_F, a_F");
  variety_opt(threshold, true);
  threshold->add_option("--alpha", o.alpha, "Degree of A on the base");
  threshold->add_option("--r", o.r, "Rank")->required();
  threshold->add_option("--n", o.n, "c2 = n u^2 (or n pt on surfaces)");
  threshold->add_option("--c1", o.c1, "c1 as k,l");
  threshold->add_option("--c2", o.c2, "c2 coefficients on the degree-2 basis");
  threshold->add_option("--M", o.M, "Largest L-slope of the first HN term");
  threshold->add_option("--m", o.m, "Smallest L-slope of the first HN term");

  auto *cohom = app.add_subcommand("cohom", "Cohomology of a line bundle");
  variety_opt(cohom, true);
  cohom->add_option("--deg", o.deg, "Degree k,l of k u + l f")->required();

  auto *chern = app.add_subcommand("chern", "Chern data and Euler characteristic");
  variety_opt(chern, true);
  chern->add_option("--term", o.terms, "Resolution term mult:k,l (repeatable)");
  chern->add_option("--monad", o.monad, "Monad parameters r,n");
  chern->add_option("--family", o.family, "Example family: ft | serre");
  chern->add_option("--r", o.r, "Rank");
  chern->add_option("--n", o.n, "Family parameter n");
  chern->add_option("--c1", o.c1, "c1 as k,l");
  chern->add_option("--c2", o.c2, "c2 coefficients on the degree-2 basis");
  chern->add_option("--c3", o.c3, "c3 degree (threefolds)");

  auto *grr = app.add_subcommand("grr", "Pushforward to P^1 by Grothendieck-Riemann-Roch");
  variety_opt(grr, true);
  grr->add_option("--r", o.r, "Rank");
  grr->add_option("--c1", o.c1, "c1 as k,l");
  grr->add_option("--c2", o.c2, "c2 coefficients on the degree-2 basis");
  grr->add_option("--c3", o.c3, "c3 degree (threefolds)");

  auto *strata = app.add_subcommand("strata", "Stratification data on Hirzebruch surfaces");
  strata->add_option("--r", o.r, "Rank")->required();
  strata->add_option("--n", o.n, "c2 = n")->required();
  strata->add_option("--nF", o.nF, "n_F of the stratum (default n)");

  auto *monad = app.add_subcommand("monad", "Monads on P^2-bundles");
  monad->require_subcommand(1);
  auto *mcheck = monad->add_subcommand("check", "Verify a monad file");
  mcheck->add_option("--file", o.file, "Monad JSON file")->required();
  mcheck->add_option("--samples", o.samples, "Random sample points");
  auto *mcomplete = monad->add_subcommand("complete", "Complete A to a monad");
  variety_opt(mcomplete, false);
  mcomplete->add_option("--r", o.r, "Rank");
  mcomplete->add_option("--n", o.n, "n");
  mcomplete->add_option("--file", o.file, "Monad JSON file providing A");
  mcomplete->add_option("--out", o.out, "Write the completed monad here");
  auto *mrestrict = monad->add_subcommand("restrict", "Restrict to a fibre or to Lambda");
  mrestrict->add_option("--file", o.file, "Monad JSON file")->required();
  mrestrict->add_option("--fiber", o.fiber, "Base point w0,w1");
  mrestrict->add_flag("--lambda", o.lambda, "Restrict to Lambda");

  auto *canon = app.add_subcommand("canon", "Canonical forms of extension data");
  canon->require_subcommand(1);
  auto *crandom = canon->add_subcommand("random", "Random extension data");
  crandom->add_option("--r", o.r, "Rank")->required();
  crandom->add_option("--n", o.n, "Number of points")->required();
  crandom->add_option("--points", o.points, "Points x_1,...,x_n (default 0..n-1)");
  crandom->add_option("--out", o.out, "Write the data here");
  auto *creduce = canon->add_subcommand("reduce", "Reduce to the slice form");
  creduce->add_option("--file", o.file, "Matrix pair JSON file")->required();
  auto *cstab = canon->add_subcommand("stabilizer", "Stabilizer of the canonical form");
  cstab->add_option("--file", o.file, "Matrix pair JSON file")->required();
  auto *ctred = canon->add_subcommand("treduce", "Torus reduction");
  ctred->add_option("--file", o.file, "Matrix pair JSON file")->required();

  auto *sweep = app.add_subcommand("sweep", "Run the acceptance property suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::string command;
  try {
    Json report;
    int code = kExitOk;
    if (slope->parsed())
      command = "slope", report = cmd_slope(o);
    else if (threshold->parsed())
      command = "threshold", report = cmd_threshold(o);
    else if (cohom->parsed())
      command = "cohom", report = cmd_cohom(o);
    else if (chern->parsed())
      command = "chern", report = cmd_chern(o);
    else if (grr->parsed())
      command = "grr", report = cmd_grr(o);
    else if (strata->parsed())
      command = "strata", report = cmd_strata(o);
    else if (mcheck->parsed()) {
      command = "monad check";
      bool pass = true;
      report = cmd_monad_check(o, pass);
      code = pass ? kExitOk : kExitMath;
    }
    else if (mcomplete->parsed()) {
      command = "monad complete";
      if (o.file.empty() && o.variety.empty())
        throw ParseError("monad complete needs --file or --variety with --r and --n");
      report = cmd_monad_complete(o);
    } else if (mrestrict->parsed())
      command = "monad restrict", report = cmd_monad_restrict(o);
    else if (crandom->parsed())
      command = "canon random", report = cmd_canon_random(o);
    else if (creduce->parsed())
      command = "canon reduce", report = cmd_canon_reduce(o);
    else if (cstab->parsed())
      command = "canon stabilizer", report = cmd_canon_stabilizer(o);
    else if (ctred->parsed())
      command = "canon treduce", report = cmd_canon_treduce(o);
    else if (sweep->parsed()) {
      command = "sweep";
      bool all = true;
      report = cmd_sweep(o, all);
      code = all ? kExitOk : kExitMath;
    }
    emit(report, o.table, out);
    return code;
  } catch (const ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    Json j = header(command);
    j["error"] = Json{{"name", e.name()}, {"message", e.what()}};
    emit(j, o.table, out);
    return kExitMath;
  }
}

} // namespace fibstab::cli
