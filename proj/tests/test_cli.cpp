#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// NCV_CLI_PATH is injected by the build: the absolute path of the ncvc
// binary these tests drive end to end.

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string capture = "cli_capture_" + std::to_string(++counter) + ".txt";
  const std::string cmd =
      std::string(NCV_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int raw = std::system(cmd.c_str());
  CliResult res;
  if (raw != -1 && WIFEXITED(raw)) res.code = WEXITSTATUS(raw);
  res.out = slurp(capture);
  std::remove(capture.c_str());
  return res;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("overhead --examples emits the reference table") {
  const auto res = run_cli("overhead --examples --format csv");
  REQUIRE(res.code == 0);
  const auto lines = lines_of(res.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] ==
        "scheme,n,m,w,feasible,k,syndrome_bytes,id_bytes,ext_degree,side_bytes,"
        "total_bits,total_bytes");
  const std::vector<std::string> totals{"30", "22", "30",  "255", "182",
                                        "216", "172", "118", "147"};
  for (std::size_t i = 0; i < totals.size(); ++i) {
    const auto& line = lines[i + 1];
    CHECK(line.substr(line.rfind(',') + 1) == totals[i]);
  }
  // The infeasible row is flagged, everything else is not.
  CHECK(lines[4].find("error,255,150,8,0,") == 0);
  CHECK(lines[5].find("erasure,255,150,8,1,") == 0);
}

TEST_CASE("overhead single configuration as json") {
  const auto res = run_cli("overhead --n 50 --m 15 --scheme erasure --format json");
  REQUIRE(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0].at("scheme") == "erasure");
  CHECK(j[0].at("k") == 35);
  CHECK(j[0].at("total_bytes") == 22);
  CHECK(j[0].at("feasible") == true);

  const auto all = run_cli("overhead --n 50 --m 15 --format table");
  REQUIRE(all.code == 0);
  CHECK(all.out.find("error") != std::string::npos);
  CHECK(all.out.find("erasure") != std::string::npos);
  CHECK(all.out.find("list") != std::string::npos);
}

TEST_CASE("roundtrip reports full recovery and is reproducible") {
  const std::string cmd =
      "roundtrip --scheme erasure --n 30 --m 8 --trials 40 --seed 3 --format json";
  const auto res = run_cli(cmd);
  REQUIRE(res.code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j.at("trials") == 40);
  CHECK(j.at("recovered") == 40);
  CHECK(j.at("mis_decoded") == 0);
  const auto res2 = run_cli(cmd);
  CHECK(res2.out == res.out);

  const auto err = run_cli(
      "roundtrip --scheme error --n 30 --m 5 --trials 25 --seed 4 --format json");
  REQUIRE(err.code == 0);
  CHECK(nlohmann::json::parse(err.out).at("mis_decoded") == 0);

  const auto lst = run_cli(
      "roundtrip --scheme list --n 15 --m 6 --w 4 --trials 10 --seed 5 --format json");
  REQUIRE(lst.code == 0);
  const auto lj = nlohmann::json::parse(lst.out);
  CHECK(lj.at("mis_decoded") == 0);
  CHECK(lj.at("recovered") == 10);
}

TEST_CASE("simulate writes reproducible reports and topologies") {
  const auto res = run_cli(
      "simulate --diamond --enforcement counter --trials 10 --seed 2 "
      "--format json --out sim_a.json");
  REQUIRE(res.code == 0);
  const auto ja = nlohmann::json::parse(slurp("sim_a.json"));
  CHECK(ja.at("n") == 4);
  CHECK(ja.at("scheme") == "erasure");
  CHECK(ja.at("enforcement") == "counter");
  CHECK(ja.at("overestimate_events") == 10);
  CHECK(ja.at("invariant_violations") == 0);

  const auto res2 = run_cli(
      "simulate --diamond --enforcement counter --trials 10 --seed 2 "
      "--format json --out sim_b.json");
  REQUIRE(res2.code == 0);
  CHECK(slurp("sim_a.json") == slurp("sim_b.json"));
  std::remove("sim_a.json");
  std::remove("sim_b.json");

  const auto gen = run_cli(
      "simulate --n 20 --locality 10 --m 10 --scheme erasure --trials 10 "
      "--seed 6 --format json --write-topology topo.txt");
  REQUIRE(gen.code == 0);
  const auto jg = nlohmann::json::parse(gen.out);
  CHECK(jg.at("full_recoveries") == 10);
  CHECK(jg.at("decode_failures") == 0);
  const std::string topo = slurp("topo.txt");
  CHECK(topo.find("S0 ") != std::string::npos);
  CHECK(topo.find(" T0") != std::string::npos);
  std::remove("topo.txt");

  const auto truth = run_cli(
      "simulate --n 20 --locality 10 --scheme none --trials 5 --seed 6 --format json");
  REQUIRE(truth.code == 0);
  CHECK(nlohmann::json::parse(truth.out).at("scheme") == "none");
}

TEST_CASE("oracle-check cross-validates the list decoder") {
  const auto full = run_cli("oracle-check --n 15 --m 6 --w 4 --trials 8 --seed 1");
  REQUIRE(full.code == 0);
  CHECK(full.out.find("mismatches=0") != std::string::npos);
  CHECK(full.out.find("planted-missing=0") != std::string::npos);

  const auto shortened = run_cli("oracle-check --n 12 --m 6 --w 4 --trials 8 --seed 2");
  REQUIRE(shortened.code == 0);
  CHECK(shortened.out.find("(12,3)") != std::string::npos);
  CHECK(shortened.out.find("mismatches=0") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("overhead --m 5").code == 2);
  CHECK(run_cli("roundtrip --scheme bogus --n 20 --m 4").code == 2);
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("simulate --diamond --scheme error --m 1 --enforcement id-popcount")
            .code == 2);
}

}  // TEST_SUITE
