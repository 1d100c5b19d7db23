#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "jetscheme/cli.hpp"

using namespace jetscheme;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("order ranges") {
  CHECK(parse_order_range("5") == std::vector<unsigned>{5});
  CHECK(parse_order_range("3..5") == std::vector<unsigned>{3, 4, 5});
  CHECK_THROWS(parse_order_range("5..3"));
  CHECK_THROWS(parse_order_range("a"));
  CHECK_THROWS(parse_order_range("3.."));
}

TEST_CASE("expand") {
  const auto r = run({"expand", "x*y - z^2", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "f^(0) = x0*y0 - z0^2\n"
        "f^(1) = x1*y0 + x0*y1 - 2*z0*z1\n"
        "f^(2) = x2*y0 + x1*y1 + x0*y2 - z1^2 - 2*z0*z2\n");
  CHECK(run({"expand", "x^2 - y^2*z + z^3", "--m", "0"}).out == "f^(0) = -y0^2*z0 + z0^3 + x0^2\n");
  const auto bad = run({"expand", "x*y -", "--m", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"expand", "x1*y", "--m", "2"}).code == 1);
  const auto j = nlohmann::json::parse(run({"expand", "x*y - z^2", "--m", "1", "--format", "json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["config"]["command"] == "expand");
  CHECK(j["result"]["coefficients"][1] == "x1*y0 + x0*y1 - 2*z0*z1");
}

TEST_CASE("an commands") {
  const auto t = run({"an", "table", "--n", "3", "--m", "3..7", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out ==
        "m,dim_Z,dim_Z1_Z2,dim_Z1_Z3,codim_Z,codim_Z1_Z2,codim_Z1_Z3,N12,N13\n"
        "3,7,6,5,5,6,7,1,1\n"
        "4,9,8,7,6,7,8,1,1\n"
        "5,11,10,10,7,8,8,2,1\n"
        "6,13,12,12,8,9,9,3,2\n"
        "7,15,14,14,9,10,10,4,3\n");
  const auto g = run({"an", "graph", "--n", "4", "--format", "dot"});
  CHECK(g.code == 0);
  CHECK(g.out ==
        "graph {\n  \"Z1\";\n  \"Z2\";\n  \"Z3\";\n  \"Z4\";\n"
        "  \"Z1\" -- \"Z2\";\n  \"Z2\" -- \"Z3\";\n  \"Z3\" -- \"Z4\";\n}\n");
  const auto d = run({"an", "decompose", "--n", "3", "--m", "8", "--i", "1", "--j", "2", "--format", "json"});
  CHECK(d.code == 0);
  const auto dj = nlohmann::json::parse(d.out);
  CHECK(dj["result"]["decompositions"][0]["case"] == "d");
  CHECK(dj["result"]["decompositions"][0]["count"] == 4);
  CHECK(run({"an", "verify", "--n", "2", "--m", "2..5"}).code == 0);
  CHECK(run({"an", "decompose", "--n", "3", "--m", "2", "--i", "1", "--j", "2"}).code == 1);
  CHECK(run({"an", "table", "--n", "3", "--m", "3", "--format", "dot"}).code == 1);
  CHECK(run({"an"}).code == 1);
}

TEST_CASE("d4 commands") {
  const auto v = run({"d4", "verify", "--m", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("[verified] h(Q) = -32") != std::string::npos);
  const auto g = run({"d4", "graph", "--m", "6", "--format", "dot"});
  CHECK(g.code == 0);
  CHECK(g.out.find("\"Z0\" -- \"Z1\";\n  \"Z0\" -- \"Z2\";\n  \"Z0\" -- \"Z3\";") != std::string::npos);
  CHECK(run({"d4", "verify", "--m", "4"}).code == 1);
  CHECK(run({"d4", "verify", "--m", "6", "--budget-spairs", "2"}).code == 3);
  const auto i = nlohmann::json::parse(run({"d4", "ideals", "--m", "5", "--format", "json"}).out);
  CHECK(i["result"]["families"][0]["I0"].size() == 13);
}

TEST_CASE("identical configs give identical bytes") {
  const std::vector<std::string> args{"d4", "verify", "--m", "5..6", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const auto j = nlohmann::json::parse(run(args).out);
  CHECK(j["result"]["seconds"].is_null());
  CHECK(j["config"]["budget_spairs"] == 100000);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "jetscheme_cli_test.dot";
  std::filesystem::remove(path);
  CHECK(run({"an", "graph", "--n", "2", "--format", "dot", "--out", path.string()}).out.empty());
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == "graph {\n  \"Z1\";\n  \"Z2\";\n  \"Z1\" -- \"Z2\";\n}\n");
  std::filesystem::remove(path);
}
