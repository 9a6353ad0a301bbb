#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sdual;
using Json = nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_status = 0)
{
  args.push_back("--json");
  const Run r = run(args);
  CHECK_MESSAGE(r.status == expected_status, r.err);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("weight list shorthand")
{
  CHECK(parse_weight_list("[1,0]x4") == std::vector<std::vector<int>>(4, {1, 0}));
  CHECK(parse_weight_list("[1,0]x2,[0,1]") == std::vector<std::vector<int>>{{1, 0}, {1, 0}, {0, 1}});
  CHECK(parse_weight_list("[0,0,0,1] [1,0,0,0]") == std::vector<std::vector<int>>{{0, 0, 0, 1}, {1, 0, 0, 0}});
  CHECK(parse_weight_list("").empty());
  CHECK(parse_weight_list("[1,0]x0").empty());
  CHECK_THROWS_AS(parse_weight_list("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_list("[1,0]x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_list("[1,0"), std::invalid_argument);
}

TEST_CASE("verlinde subcommand")
{
  CHECK(run_json({"verlinde", "--algebra", "E8", "--level", "1", "--genus", "3"})["dimension"] == 1);
  CHECK(run_json({"verlinde", "--algebra", "G2", "--level", "1", "--genus", "0", "--weights", "[1,0]x3"})["dimension"] == 1);
  CHECK(run_json({"verlinde", "--algebra", "G2", "--genus", "2", "--weights", "[1,0]x4"})["dimension"] ==
        run_json({"verlinde", "--algebra", "F4", "--genus", "2", "--weights", "[0,0,0,1]x4"})["dimension"]);
  const Json j = run_json({"verlinde", "--algebra", "G2", "--genus", "2", "--closed-form"});
  CHECK(j["dimension"] == 5);
  CHECK(j["closed_form"] == Json{{"a", "5"}, {"b", "0"}});
  CHECK(run({"verlinde", "--algebra", "G2", "--weights", "[2,0]"}).status == kExitUsage);
  CHECK(run({"verlinde", "--algebra", "G2", "--weights", "[1,0,0]"}).status == kExitUsage);
  CHECK(run({"verlinde", "--algebra", "Q7"}).status == kExitUsage);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"nope"}).status == kExitUsage);
  CHECK(run({"fusion", "--level", "0"}).status == kExitUsage);
  CHECK(run({"fusion", "--frobnicate"}).status == kExitUsage);
  CHECK(run({"pic-relation", "--genus", "0", "--markings", "2"}).status == kExitUsage);
  CHECK(run({"correlator"}).status == kExitUsage);
  CHECK(run({"correlator", "--case", "IV"}).status == kExitUsage);
  CHECK(run({"embedding", "check", "--name", "e9-in-e10"}).status == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.status == kExitOk);
  CHECK(help.out.find("verify-all") != std::string::npos);
}

TEST_CASE("root system and fusion output")
{
  const Json g2 = run_json({"root-system", "--algebra", "G2"});
  CHECK(g2["cartan"] == Json::parse("[[2,-1],[-3,2]]"));
  CHECK(g2["dual_coxeter"] == 4);
  CHECK(g2["fundamental_dimensions"] == Json::parse("[7,14]"));
  const Json f4 = run_json({"root-system", "--algebra", "F4"});
  CHECK(f4["fundamental_dimensions"] == Json::parse("[52,1274,273,26]"));

  const Json fu = run_json({"fusion", "--algebra", "G2", "--level", "1"});
  CHECK(fu["basis"] == Json::parse("[[0,0],[1,0]]"));
  const Json last = fu["products"].back();
  CHECK(last["result"] == Json::parse(R"([{"weight":[0,0],"multiplicity":1},{"weight":[1,0],"multiplicity":1}])"));
  CHECK(fu["axioms"]["associative"] == true);
}

TEST_CASE("embedding subcommand")
{
  const Json j = run_json({"embedding", "check", "--name", "g2xf4-in-e8"});
  CHECK(j["pass"] == true);
  CHECK(j["criteria"]["conformal_anomaly"]["pass"] == true);
  CHECK(j["criteria"]["dynkin_index"]["pass"] == true);
  CHECK(j["criteria"]["rank"]["deficiency"] == 2);
  const Json bad = run_json({"embedding", "check", "--name", "G2-in-G2@2"}, kExitVerificationFailed);
  CHECK(bad["pass"] == false);
  const Json list = run_json({"embedding", "list"});
  CHECK(list["pass"] == true);
  CHECK(list["embeddings"].size() > 10);
}

TEST_CASE("branch-verify, correlator and pic-relation")
{
  const Json b = run_json({"branch-verify", "--depth", "2"});
  CHECK(b["pass"] == true);
  CHECK(b["rows"][2]["left"] == 4124);
  CHECK(b["rows"][2]["right"] == 4124);

  CHECK(run_json({"correlator", "--case", "I"})["value"]["text"] == "1");
  CHECK(run_json({"correlator", "--case", "II"})["value"]["text"] == "-pa");
  CHECK(run_json({"correlator", "--case", "III", "--level", "3"})["value"]["terms"][0]["coeff"] == "3");

  const auto path = std::filesystem::temp_directory_path() / "sdual_cli_test.txt";
  {
    std::ofstream f(path);
    f << "level 1\nset pb = 2\nslot1: H(-1)\nslot2: X+b(-1)\nslot3: X-b(-1)\n";
  }
  const Json s = run_json({"correlator", "--script", path.string()});
  CHECK(s["substituted"]["text"] == "2*bH");
  {
    std::ofstream f(path);
    f << "slot1: H(-1\n";
  }
  const Run bad = run({"correlator", "--script", path.string()});
  CHECK(bad.status == kExitUsage);
  CHECK(bad.err.find("line 1") != std::string::npos);
  std::filesystem::remove(path);

  const Json p = run_json({"pic-relation", "--genus", "2", "--markings", "0"});
  CHECK(p["lhs"]["lambda"] == 4);
  CHECK(p["rhs"]["g2_block"] == "1/5");
  CHECK(p["rhs"]["f4_block"] == 1);
  CHECK(p["rhs"]["irr"] == "3/5");
  CHECK(p["rhs"]["boundary"] == Json::parse(R"([{"h":1,"A":[],"coeff":"1/5"}])"));
  CHECK(run_json({"pic-relation", "--genus", "1", "--markings", "1"})["rhs"]["irr"] == "1");
  CHECK(run_json({"pic-relation", "--genus", "0", "--markings", "5"})["lhs"]["psi"].size() == 5);
}

TEST_CASE("s-matrix subcommand")
{
  const Json j = run_json({"s-matrix", "--algebra", "G2", "--level", "1", "--digits", "40"});
  CHECK(j["digits"] == 40);
  CHECK(j["verlinde_matches_kac_walton"] == true);
  CHECK(j["s"].size() == 2);
  CHECK(j["quantum_dimensions"][1].get<std::string>().rfind("1.6180339887498948482045868343", 0) == 0);
  const Json e8 = run_json({"s-matrix", "--algebra", "E8", "--level", "1"});
  CHECK(e8.contains("note"));
  CHECK(run({"s-matrix", "--digits", "5"}).status == kExitUsage);
}

TEST_CASE("JSON output is byte-stable")
{
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"fusion", "--algebra", "F4", "--level", "2", "--json"},
        std::vector<std::string>{"pic-relation", "--genus", "3", "--markings", "3", "--json"},
        std::vector<std::string>{"verify-all", "--criterion", "8", "--json"},
        std::vector<std::string>{"embedding", "list", "--json"}}) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(Json::accept(a.out));
  }
}

TEST_CASE("verify-all")
{
  const Json j = run_json({"verify-all"});
  CHECK(j["pass"] == true);
  CHECK(j["criteria"].size() == 10);
  CHECK(run({"verify-all", "--criterion", "11"}).status == kExitUsage);
  const Run text = run({"verify-all", "--criterion", "3", "-v"});
  CHECK(text.out.find("criterion 3 PASS") != std::string::npos);
}
