#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "superlink/blocks.hpp"
#include "superlink/cli.hpp"
#include "test_support.hpp"

using namespace superlink;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"block-label", "--family", "p", "--n", "2", "--weight", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"family\":\"p\",\"j\":1}\n");
  r = run({"classify", "--family", "gl", "--m", "2", "--n", "1", "--zeta", "1", "--weight", "0,-2|5"});
  CHECK(r.code == 0);
  CHECK(r.out == "(-3,1|5)\n");
  r = run({"dot", "--family", "p", "--n", "2", "--w", "(1 2)", "--weight", "0,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "(-1,1)\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"dot", "--family", "p", "--n", "2", "--weight", "0,0"}).code == cli::kExitUsage);
  CHECK(run({"dot", "--family", "p", "--n", "2", "--w", "(1 2)", "--weight", "0,x"}).code == cli::kExitUsage);
  CHECK(run({"dot", "--family", "p", "--n", "2", "--w", "(1 2)", "--weight", "0,0,0"}).code == cli::kExitUsage);
  CHECK(run({"root-data", "--family", "q"}).code == cli::kExitUsage);
  CHECK(run({"root-data", "--family", "gl", "--m", "0", "--n", "1"}).code == cli::kExitUsage);
  CHECK(run({"classify", "--family", "p", "--n", "2", "--zeta", "3", "--weight", "0,0"}).code == cli::kExitUsage);
  CHECK(run({"block-label", "--family", "p", "--n", "2", "--weight", "1/2,0"}).code == cli::kExitUnsupported);
  CHECK(run({"mult", "--family", "reductive", "--type", "A1", "--weight", "-1/2,1/2", "--mu", "-1/2,1/2"}).code ==
        cli::kExitUnsupported);
  CHECK(run({"validate", "--family", "p", "--n", "3", "--box=-10..10", "--config", "/nonexistent"}).code ==
        cli::kExitUsage);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("superlink.<command>/1") != std::string::npos);
}

TEST_CASE("config caps") {
  const std::string path = "superlink_test_config.txt";
  {
    std::ofstream f(path);
    f << "# caps\nbox_cap = 10\n";
  }
  CHECK(run({"validate", "--family", "p", "--n", "2", "--box=-6..6", "--config", path}).code == cli::kExitUnsupported);
  {
    std::ofstream f(path);
    f << "bogus = 3\n";
  }
  CHECK(run({"validate", "--family", "p", "--n", "2", "--box=-1..1", "--config", path}).code == cli::kExitUsage);
  std::remove(path.c_str());
}

TEST_CASE("validate") {
  auto r = run({"validate", "--family", "p", "--n", "2", "--box=-6..6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("components 3\n") != std::string::npos);
  r = run({"validate", "--family", "gl", "--m", "1", "--n", "1", "--box=-5..5", "--json", "--jobs", "2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sound"] == true);
  CHECK(j["components"] == 111);
}

TEST_CASE("json round trip") {
  const auto g21 = test::gl(2, 1);
  auto r = run({"antidom", "--family", "gl", "--m", "2", "--n", "1", "--weight", "0,-2|5", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "superlink.antidom/1");
  CHECK(parse_weight(g21, j["rep"].get<std::string>()) == test::wt(g21, "-3,1|5"));
  CHECK(parse_weyl_element(g21, j["w"].get<std::string>()) == test::we(g21, "(1 2)"));

  r = run({"block-label", "--family", "osp", "--n", "2", "--weight", "1;0,-3", "--json"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  const auto o2 = test::osp(2);
  CHECK(label_from_json(j["label"].dump()) == block_label(o2, test::wt(o2, "1;0,-3")));

  r = run({"enumerate-block", "--family", "p", "--n", "2", "--weight", "0,0", "--box=-4..4", "--json"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["size"] == 41);
  const auto p2 = test::p(2);
  for (const auto& pt : j["points"]) CHECK(block_label(p2, parse_weight(p2, pt.get<std::string>())) == block_label(p2, Weight(2)));
  auto r4 = run({"enumerate-block", "--family", "p", "--n", "2", "--weight", "0,0", "--box=-4..4", "--json", "--jobs", "4"});
  CHECK(r4.out == r.out);
}

TEST_CASE("remaining commands") {
  CHECK(run({"root-data", "--family", "osp32"}).out.find("rho (-1/2,1/2)") != std::string::npos);
  CHECK(run({"stab", "--family", "p", "--n", "2", "--weight", "-1,0"}).out == "(1,-1)\n");
  CHECK(run({"upsilon", "--family", "p", "--n", "2", "--weight", "-1,0"}).out == "1\n");
  CHECK(run({"typicality", "--family", "gl", "--m", "1", "--n", "1", "--weight", "2|-2"}).out == "atypical 1\n");
  CHECK(run({"same-block", "--family", "p", "--n", "2", "--weight", "0,0", "--mu", "1,0"}).out == "NoLinkKnown\n");
  CHECK(run({"in-x", "--family", "osp32", "--nu", "-1,-1/2", "--weight", "0,-2"}).out == "true\n");
  CHECK(run({"klpoly", "--family", "reductive", "--type", "A3", "--x", "(2 3)", "--w", "(1 3)(2 4)"}).out == "1 + q\n");
  CHECK(run({"mult", "--family", "reductive", "--type", "A1", "--weight", "0,0", "--zeta", "all", "--length"}).out == "1\n");
  CHECK(run({"mult", "--family", "reductive", "--type", "A1", "--weight", "0,0", "--zeta", "none", "--mu", "-1,1"}).out ==
        "1\n");
}
