#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "fibstab/cli.hpp"

using namespace fibstab;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "fibstab_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

} // namespace

TEST_CASE("documented command examples") {
  auto t = run({"threshold", "--variety", "p2bundle:0,1", "--r", "2", "--n", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.json()["c_F"] == "4");
  CHECK(t.out.find("\"c_F\": \"4\"") != std::string::npos);

  auto s = run({"strata", "--r", "2", "--n", "3"});
  REQUIRE(s.code == 0);
  const auto dims = s.json()["dims"];
  CHECK(dims["moduli_dim"] == 9);
  CHECK(dims["hilb_fiber_dim"] == 6);
  CHECK(dims["group_dim"] == 6);
  CHECK(dims["extension_space_dim"] == 12);

  auto c = run({"cohom", "--variety", "hirzebruch:1", "--deg", "0,0"});
  REQUIRE(c.code == 0);
  CHECK(c.json()["h"] == Json::parse("[1,0,0]"));
  CHECK(c.json()["chi"] == 1);
}

TEST_CASE("threshold scales with a + b and r") {
  for (long a = 0; a <= 2; ++a)
    for (long b = a; b <= 3; ++b)
      for (long r = 2; r <= 4; ++r)
        for (long n = 1; n <= 4; ++n) {
          const std::string var = "p2bundle:" + std::to_string(a) + "," + std::to_string(b);
          auto t = run({"threshold", "--variety", var, "--r", std::to_string(r), "--n",
                        std::to_string(n)});
          REQUIRE(t.code == 0);
          CHECK(t.json()["c_F"] == std::to_string(r * (r - 1) * n * (a + b)));
        }
}

TEST_CASE("every report carries the format header") {
  const std::vector<std::vector<std::string>> cmds{
      {"slope", "--variety", "hirzebruch:1", "--r", "2", "--c1", "1,1", "--c2", "2", "--c", "1/2"},
      {"cohom", "--variety", "p2", "--deg", "-3"},
      {"chern", "--variety", "p2bundle:0,1", "--monad", "2,3"},
      {"grr", "--variety", "hirzebruch:2", "--r", "2", "--c1", "1,0", "--c2", "3"},
      {"strata", "--r", "3", "--n", "4", "--nF", "2"}};
  for (const auto &cmd : cmds) {
    auto o = run(cmd);
    INFO(cmd.front());
    REQUIRE(o.code == 0);
    CHECK(o.json()["format"] == 1);
    CHECK(o.json()["command"] == cmd.front());
  }
}

TEST_CASE("chern subcommand") {
  auto m = run({"chern", "--variety", "p2bundle:1,2", "--monad", "2,3"});
  REQUIRE(m.code == 0);
  CHECK(m.json()["chern"]["c2"]["u^2"] == "3");
  CHECK(m.json()["chern"]["c1"]["u"] == "0");

  auto s = run({"chern", "--variety", "p2bundle:0,1", "--family", "serre", "--n", "3"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["chern"]["c2"]["u^2"] == "2");
  CHECK(s.json()["asserted_c2"]["u^2"] == "3");

  // 2 O - O(u - f) on F_1
  auto r = run({"chern", "--variety", "hirzebruch:1", "--term", "2:0,0", "--term", "-1:1,-1"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["chern"]["rank"] == "1");

  auto p = run({"cohom", "--variety", "p1", "--deg", "-3"});
  REQUIRE(p.code == 0);
  CHECK(p.json()["h"] == Json::parse("[0,2]"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"cohom", "--variety", "hirzebruch:1"}).code == 2);
  CHECK(run({"cohom", "--variety", "torus", "--deg", "0,0"}).code == 2);
  CHECK(run({"cohom", "--variety", "hirzebruch:1", "--deg", "1.5,0"}).code == 2);
  CHECK(run({"slope", "--variety", "hirzebruch:1", "--c", "1e3"}).code == 2);
  CHECK(run({"slope", "--variety", "hirzebruch:1", "--c1", "1,2,3"}).code == 2);
  CHECK(run({"monad", "check", "--file", temp_path("missing.json")}).code == 2);
  CHECK(run({"monad"}).code == 2);
  CHECK(run({"chern", "--variety", "p2", "--family", "xyz"}).code == 2);
}

TEST_CASE("help exits 0") {
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("threshold") != std::string::npos);
}

TEST_CASE("mathematical failures exit 1 with the error name") {
  const auto path = temp_path("w_failure.json");
  const auto w = MatrixPairE(2, PointConfig::range(3), RationalMatrix{{1, 2, 3}, {6, 1, 1}},
                             RationalMatrix{{1, 0, 0}, {0, 1, 0}});
  write_json_file(path, to_json(w));
  auto o = run({"canon", "reduce", "--file", path});
  CHECK(o.code == 1);
  CHECK(o.json()["error"]["name"] == "GenericityFailure");
  CHECK(o.json()["format"] == 1);

  auto t = run({"strata", "--r", "1", "--n", "2"});
  CHECK(t.code == 1);
  CHECK(t.json()["error"]["name"] == "RankOutOfRange");

  auto s = run({"grr", "--variety", "p2", "--r", "1"});
  CHECK(s.code == 1);
  CHECK(s.json()["error"]["name"] == "WrongVariety");
}

TEST_CASE("monad complete then monad check passes") {
  for (const std::string var : {"p2bundle:0,0", "p2bundle:0,1", "p2bundle:1,2"})
    for (const auto &[r, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}})
      for (int seed = 1; seed <= 3; ++seed) {
        const auto path = temp_path("m_" + std::to_string(seed) + ".json");
        auto c = run({"--seed", std::to_string(seed), "monad", "complete", "--variety", var,
                      "--r", std::to_string(r), "--n", std::to_string(n), "--out", path});
        INFO(var << " r=" << r << " n=" << n << " seed=" << seed);
        REQUIRE(c.code == 0);
        CHECK(c.json()["compose_ok"] == true);
        auto k = run({"monad", "check", "--file", path, "--samples", "5"});
        CHECK(k.code == 0);
        CHECK(k.json()["pass"] == true);

        // completing the written file again keeps B A = 0
        auto again = run({"monad", "complete", "--file", path});
        CHECK(again.code == 0);
        CHECK(again.json()["compose_ok"] == true);
      }
}

TEST_CASE("monad file round trip and pulled-back example") {
  const auto path = temp_path("pulled.json");
  const auto m = pulled_back_p2_monad();
  write_json_file(path, to_json(m));
  const auto back = monad_from_json(read_json_file(path));
  CHECK(back.A == m.A);
  CHECK(back.B == m.B);

  auto k = run({"monad", "check", "--file", path, "--samples", "50"});
  REQUIRE(k.code == 0);
  const auto j = k.json();
  CHECK(j["pass"] == true);
  CHECK(j["pointwise"]["A_injective"] == true);
  CHECK(j["pointwise"]["B_surjective"] == true);
  CHECK(j["lambda"]["trivial"] == true);

  auto r = run({"monad", "restrict", "--file", path, "--fiber", "1,2", "--lambda"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["fiber"]["compose_ok"] == true);
  CHECK(r.json()["lambda"]["constant"] == true);
  CHECK(run({"monad", "restrict", "--file", path}).code == 2);
}

TEST_CASE("broken monad file fails the check") {
  const auto path = temp_path("broken.json");
  auto m = pulled_back_p2_monad();
  m.B = PolyMatrix(m.variety, kDegreeU, m.B.rows(), m.B.cols());
  m.B.set(0, 0, CoxPolynomial::variable(m.variety, 0));
  m.B.set(0, 1, CoxPolynomial::variable(m.variety, 0));
  write_json_file(path, to_json(m));
  auto k = run({"monad", "check", "--file", path, "--samples", "5"});
  CHECK(k.code == 1);
  CHECK(k.json()["pass"] == false);
}

TEST_CASE("canon pipeline on seeded data") {
  int reduced = 0;
  for (int seed = 1; seed <= 12; ++seed) {
    const auto path = temp_path("e_" + std::to_string(seed) + ".json");
    auto g = run({"--seed", std::to_string(seed), "canon", "random", "--r", "3", "--n", "5",
                  "--out", path});
    REQUIRE(g.code == 0);
    auto red = run({"canon", "reduce", "--file", path});
    REQUIRE((red.code == 0 || red.code == 1));
    if (red.code == 1) {
      CHECK(red.json()["error"]["name"] == "GenericityFailure");
      continue;
    }
    ++reduced;
    auto canon_path = temp_path("c_" + std::to_string(seed) + ".json");
    write_json_file(canon_path, red.json()["canonical"]);
    const auto canon = pair_from_json(read_json_file(canon_path));
    CHECK(is_canonical(canon));

    auto st = run({"canon", "stabilizer", "--file", path});
    REQUIRE(st.code == 0);
    CHECK(st.json()["trivial"] == true);

    auto tr = run({"canon", "treduce", "--file", path});
    REQUIRE((tr.code == 0 || tr.code == 1));
    if (tr.code == 0)
      CHECK(tr.json()["basis"] == "evaluation");
    else
      CHECK(tr.json()["error"]["name"] == "ZeroEvaluationEntry");
  }
  CHECK(reduced >= 6);
}

TEST_CASE("fixed seed gives byte-identical output") {
  const std::vector<std::string> gen{"--seed", "77", "canon", "random", "--r", "2", "--n", "4"};
  CHECK(run(gen).out == run(gen).out);
  auto other = gen;
  other[1] = "78";
  CHECK(run(gen).out != run(other).out);

  const std::vector<std::string> mon{"--seed", "5",   "monad", "complete", "--variety",
                                     "p2bundle:0,1", "--r", "2", "--n", "2"};
  CHECK(run(mon).out == run(mon).out);
}

TEST_CASE("table mode") {
  auto t = run({"--table", "threshold", "--variety", "p2bundle:0,1", "--r", "2", "--n", "2"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("{") == std::string::npos);
  bool found = false;
  std::istringstream in(t.out);
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string key, value;
    words >> key >> value;
    if (key == "c_F") {
      found = true;
      CHECK(value == "4");
    }
  }
  CHECK(found);

  auto s = run({"strata", "--r", "2", "--n", "3", "--table"});
  CHECK(s.out.find("dims.moduli_dim") != std::string::npos);
}
