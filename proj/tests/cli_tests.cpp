// End-to-end checks of the command line surface. The binary path comes from
// the TES_CLI environment variable (set by CTest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("TES_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_tmp_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("trees subcommand lists Y_3 in canonical order") {
  RunResult r = run_cli("trees --order 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1010100\n1011000\n1100100\n1101000\n1110000\n");
  RunResult rj = run_cli("--format json trees --order 2");
  CHECK(rj.exit_code == 0);
  json j = json::parse(rj.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0] == "10100");
  CHECK(j[1] == "11000");
}

TEST_CASE("coproduct subcommand reproduces the ACA table row") {
  RunResult r = run_cli("--format json coproduct --algebra dif --tree 1100100");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.size() == 4);  // ACA(x)1 + AB(x)BA + BA(x)AB + 1(x)ACA
  bool found_ab_ba = false;
  for (const json& row : j)
    if (row["left"] == json::array({"11000"}) && row["right"] == json::array({"10100"}))
      found_ab_ba = row["q"] == "1";
  CHECK(found_ab_ba);
}

TEST_CASE("compose subcommand reproduces the sixteen-term example") {
  auto poly1 = [](const char* v) {
    return json::array({{{"vars", {{v, 1}}}, {"q", "1"}}});
  };
  json phi = {{"carrier", "operad"},
              {"instance", "dup"},
              {"p2", nullptr},
              {"truncation", 3},
              {"terms",
               {{{"key", "100"}, {"coeff", "1"}},
                {{"key", "11000"}, {"coeff", poly1("a")}},
                {{"key", "10100"}, {"coeff", poly1("b")}}}}};
  json psi = phi;
  psi["terms"][1]["coeff"] = poly1("c");
  psi["terms"][2]["coeff"] = poly1("d");
  std::string phi_path = write_temp("phi.json", phi.dump());
  std::string psi_path = write_temp("psi.json", psi.dump());
  RunResult r =
      run_cli("--format json compose --lhs " + phi_path + " --rhs " + psi_path + " -N 3");
  CHECK(r.exit_code == 0);
  json out = json::parse(r.out);
  CHECK(out["terms"].size() == 16);
  bool aca_ok = false;
  for (const json& term : out["terms"])
    if (term["key"] == "1100100")  // coefficient of ACA is ad + bc
      aca_ok = term["coeff"] == json::parse(
                   R"([{"vars":{"a":1,"d":1},"q":"1"},{"vars":{"b":1,"c":1},"q":"1"}])");
  CHECK(aca_ok);
  std::remove(phi_path.c_str());
  std::remove(psi_path.c_str());
}

TEST_CASE("parse errors report the column and exit 2") {
  RunResult r = run_cli("coproduct --algebra dif --tree \"((v\"");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("column 3") != std::string::npos);
}

TEST_CASE("alpha membership exit codes") {
  json member = {{"carrier", "operad"},
                 {"instance", "dup"},
                 {"p2", nullptr},
                 {"truncation", 1},
                 {"terms", {{{"key", "100"}, {"coeff", "1"}}}}};
  std::string path = write_temp("member.json", member.dump());
  RunResult ok = run_cli("alpha --member " + path);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("member") != std::string::npos);
  json non = member;
  non["truncation"] = 2;
  non["terms"].push_back({{"key", "10100"}, {"coeff", "1"}});  // BA is not in im(rho)
  std::string path2 = write_temp("nonmember.json", non.dump());
  RunResult bad = run_cli("alpha --member " + path2);
  CHECK(bad.exit_code == 1);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("invert round trip through the CLI") {
  json f = {{"carrier", "monoid"},
            {"instance", "dup"},
            {"p2", "over"},
            {"truncation", 3},
            {"terms", {{{"key", "0"}, {"coeff", "1"}}, {{"key", "100"}, {"coeff", "-1"}}}}};
  std::string path = write_temp("f.json", f.dump());
  RunResult r = run_cli("--format json invert --input " + path);
  CHECK(r.exit_code == 0);
  json inv = json::parse(r.out);
  // geometric series on the left combs
  CHECK(inv["terms"].size() == 4);
  for (const json& term : inv["terms"]) CHECK(term["coeff"] == "1");
  std::remove(path.c_str());
}

TEST_CASE("verify smoke run") {
  RunResult r = run_cli("verify --suite trees -N 2 --seed 42");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("seed: 42") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output path flag") {
  RunResult r = run_cli("trees --order 1 -o cli_tmp_out.txt");
  CHECK(r.exit_code == 0);
  std::ifstream in("cli_tmp_out.txt");
  std::string line;
  std::getline(in, line);
  CHECK(line == "100");
  std::remove("cli_tmp_out.txt");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("trees").exit_code == 2);  // missing --order
}
