#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "zinbiel/cli.hpp"
#include "zinbiel/io.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

namespace {

const std::filesystem::path kFixtures = ZINBIEL_FIXTURES;

std::string fixture(const char* name) { return (kFixtures / name).string(); }

struct Run {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "zinbiel_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("certify builds {0} < span(e2) < Z for the two-dimensional example") {
  const auto r = run({"certify", fixture("nil2_q.json")});
  CHECK(r.code == 0);
  const Json rep = r.doc()["report"];
  CHECK(rep["flag_verified"] == true);
  CHECK(rep["flag_length"] == 2);
  const Json chain = rep["certificate"]["chain"];
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == Json::array());
  CHECK(chain[1] == Json::parse(R"([["0","1"]])"));
  CHECK(chain[2] == Json::parse(R"([["1","0"],["0","1"]])"));
  CHECK(r.doc()["exit_code"] == 0);
}

TEST_CASE("check reports the single violation of e∘e = e") {
  const auto r = run({"check", fixture("idempotent1_q.json")});
  CHECK(r.code == 1);
  const Json rep = r.doc()["report"];
  CHECK(rep["zinbiel"] == false);
  REQUIRE(rep["violations"].size() == 1);
  CHECK(rep["violations"][0] == Json::parse(R"({"i":0,"j":0,"k":0,"lhs":["1"],"rhs":["2"]})"));
  CHECK(run({"check", fixture("nil2_gf2.json")}).code == 0);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--p", "2", "--dim", "1", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"enumerate", "--p", "3", "--dim", "2", "--count-only"}).out == "9\n");
  CHECK(run({"enumerate", "--p", "3", "--dim", "2", "--count-only", "--jobs", "3"}).out == "9\n");

  std::uint64_t total = 0;
  for (int i = 0; i < 4; ++i) {
    const auto s = run({"enumerate", "--p", "2", "--dim", "2", "--count-only", "--shard",
                        std::to_string(i) + "/4"});
    REQUIRE(s.code == 0);
    total += std::stoull(s.out);
  }
  CHECK(total == 4);

  r = run({"enumerate", "--p", "2", "--dim", "2"});
  CHECK(r.code == 0);
  const Json list = r.doc();
  REQUIRE(list.size() == 4);
  for (const auto& j : list) {
    CHECK(j["label"].get<std::string>().rfind("GF(2) d=2 #", 0) == 0);
    const auto a = std::get<Algebra<Modp>>(algebra_from_json(j));
    CHECK(is_zinbiel(a));
  }

  CHECK(run({"enumerate", "--p", "5", "--dim", "1"}).code == 2);
  CHECK(run({"enumerate", "--p", "2", "--dim", "4"}).code == 2);
  CHECK(run({"enumerate", "--p", "2", "--dim", "3", "--count-only"}).code == 2);
  CHECK(run({"enumerate", "--p", "2", "--dim", "1", "--shard", "2/2"}).code == 2);
  CHECK(run({"enumerate", "--p", "2", "--dim", "1", "--shard", "x"}).code == 2);
}

TEST_CASE("free") {
  const auto r = run({"free", "--generators", "1", "--degree", "2"});
  CHECK(r.code == 0);
  const auto a = std::get<Algebra<Rational>>(parse_algebra_text(r.out));
  CHECK(a == nil2<Rational>(Q()));
  const auto g = run({"free", "--generators", "2", "--degree", "2", "--field", "3"});
  CHECK(g.code == 0);
  CHECK(std::get<Algebra<Modp>>(parse_algebra_text(g.out)).dim() == 6);
  CHECK(run({"free", "--generators", "1", "--degree", "2", "--field", "4"}).code == 2);
  CHECK(run({"free", "--generators", "3", "--degree", "6"}).code == 2);
  CHECK(run({"free", "--generators", "1"}).code == 2);
}

TEST_CASE("series") {
  auto r = run({"series", fixture("nil2_q.json")});
  CHECK(r.code == 0);
  CHECK(r.doc()["report"]["series"]["lcs_dims"] == Json::parse("[2,1,0]"));
  CHECK(r.doc()["report"]["series"]["nilpotency_index"] == 3);
  r = run({"series", fixture("idempotent1_gf2.json")});
  CHECK(r.code == 0);
  CHECK(r.doc()["report"]["series"]["nilpotent"] == false);
  CHECK(r.doc()["report"]["series"]["nilpotency_index"].is_null());
}

TEST_CASE("certify on non-Zinbiel input and with supplied flags") {
  CHECK(run({"certify", fixture("idempotent1_q.json")}).code == 2);

  const std::string free13 = scratch("free13.json").string();
  {
    std::ofstream f(free13);
    f << run({"free", "--generators", "1", "--degree", "3"}).out;
  }
  CHECK(run({"certify", free13, "--flag", fixture("free13_flag_good.json")}).code == 0);
  for (const char* bad : {"free13_flag_dropped.json", "free13_flag_nonideal.json"}) {
    const auto r = run({"certify", free13, "--flag", fixture(bad)});
    CHECK(r.code == 1);
    CHECK(r.doc()["report"]["flag_verified"] == false);
    CHECK(r.doc()["report"].contains("flag_defect"));
  }
  CHECK(run({"certify", fixture("nil2_q.json"), "--flag", fixture("nil2_flag_noncentral.json")}).code == 1);
  CHECK(run({"certify", fixture("idempotent1_q.json"), "--flag", fixture("idempotent1_flag_noncentral.json")})
            .code == 1);
  // certificate for a different dimension
  CHECK(run({"certify", fixture("nil2_q.json"), "--flag", fixture("free13_flag_good.json")}).code == 2);

  const std::string cert = scratch("nil2_cert.json").string();
  CHECK(run({"certify", fixture("nil2_q.json"), "--cert-out", cert}).code == 0);
  CHECK(run({"certify", fixture("nil2_q.json"), "--flag", cert}).code == 0);
}

TEST_CASE("frattini") {
  auto r = run({"frattini", fixture("nil2_gf2.json")});
  CHECK(r.code == 0);
  const Json rep = r.doc()["report"];
  CHECK(rep["modes_agree"] == true);
  CHECK(rep["oracle_equals_z2"] == true);
  CHECK(rep["oracle"]["F"] == Json::parse("[[0,1]]"));
  CHECK(run({"frattini", fixture("nil2_q.json"), "--mode", "formula"}).code == 0);
  CHECK(run({"frattini", fixture("nil2_q.json"), "--mode", "oracle"}).code == 2);
  CHECK(run({"frattini", fixture("idempotent1_gf2.json"), "--mode", "formula"}).code == 2);
  CHECK(run({"frattini", fixture("nil2_gf2.json"), "--mode", "bogus"}).code == 2);
}

TEST_CASE("maximal") {
  auto r = run({"maximal", fixture("zero2_gf3.json")});
  CHECK(r.code == 0);
  CHECK(r.doc()["report"]["count"] == 4);
  CHECK(r.doc()["report"]["all_ideals"] == true);
  CHECK(run({"maximal", fixture("nil2_q.json")}).code == 2);
  // e∘e = e has {0} as its only maximal subalgebra
  CHECK(run({"maximal", fixture("idempotent1_gf2.json")}).code == 0);
}

TEST_CASE("products") {
  CHECK(run({"products", fixture("nil2_q.json"), "--n", "3"}).code == 0);
  auto r = run({"products", fixture("nil2_q.json"), "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.doc()["report"]["all_products_vanish"] == false);
  CHECK(run({"products", fixture("nil2_q.json"), "--n", "0"}).code == 2);
  CHECK(run({"products", fixture("nil2_q.json"), "--n", "9"}).code == 2);
  CHECK(run({"products", fixture("nil2_q.json")}).code == 2);
}

TEST_CASE("oracle-prop") {
  auto r = run({"oracle-prop", fixture("nil2_gf2.json")});
  CHECK(r.code == 0);
  CHECK(r.doc()["report"]["passed"] == true);
  r = run({"oracle-prop", fixture("idempotent1_gf2.json")});
  CHECK(r.code == 1);
  CHECK(r.doc()["report"]["checks"][0]["status"] == "fail");
}

TEST_CASE("malformed inputs exit 2 on every report subcommand") {
  for (const char* cmd : {"check", "series", "certify", "frattini", "maximal", "oracle-prop"})
    for (const char* bad : {"bad_composite_p.json", "bad_index.json", "bad_nonreduced.json", "bad_malformed.json",
                            "bad_duplicate.json", "missing.json"}) {
      INFO(cmd << " " << bad);
      const auto r = run({cmd, fixture(bad)});
      CHECK(r.code == 2);
      CHECK_FALSE(r.err.empty());
    }
  CHECK(run({"products", fixture("bad_index.json"), "--n", "2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", fixture("nil2_q.json"), "--format", "xml"}).code == 2);
}

TEST_CASE("report sections are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", fixture("mixed_q.json")},
        std::vector<std::string>{"series", fixture("nil2_gf2.json")},
        std::vector<std::string>{"certify", fixture("nil2_q.json")},
        std::vector<std::string>{"frattini", fixture("nil2_gf2.json")},
        std::vector<std::string>{"oracle-prop", fixture("zero2_gf3.json")}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.doc()["report"].dump(2) == b.doc()["report"].dump(2));
  }
  CHECK(run({"enumerate", "--p", "3", "--dim", "2"}).out == run({"enumerate", "--p", "3", "--dim", "2", "--jobs", "2"}).out);
}

TEST_CASE("text format and --out") {
  auto r = run({"series", fixture("nil2_q.json"), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("report.series.nilpotency_index: 3") != std::string::npos);
  const auto path = scratch("series.json");
  r = run({"series", fixture("nil2_q.json"), "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_json_file(path)["report"]["series"]["nilpotency_index"] == 3);
}
