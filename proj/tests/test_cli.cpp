#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "semitsp/instance_io.hpp"
#include "semitsp/oracle.hpp"
#include "semitsp/generators.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "semitsp");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = semitsp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("semitsp_cli_" + name);
  std::ofstream(p) << body;
  return p.string();
}

const std::string kExample = SEMITSP_DATA_DIR "/example1.json";

}  // namespace

TEST_CASE("analyze the example fixture") {
  auto r = run({"analyze", kExample});
  CHECK(r.code == 0);
  CHECK(r.out.find("beta=4 gamma=5") != std::string::npos);
  CHECK(r.out.find("gamma_witness=(0,4)") != std::string::npos);
  CHECK(r.out.find("classification=beta_metric") != std::string::npos);

  auto j = run({"analyze", kExample, "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"gamma\": 5.0") != std::string::npos);
}

TEST_CASE("solve the example fixture exactly") {
  auto r = run({"solve", kExample, "--method", "exact"});
  CHECK(r.code == 0);
  const double opt = semitsp::exact_tsp_enumerate(semitsp::gen_example1()).tour.weight;
  std::ostringstream expect;
  expect.precision(12);
  expect << "tour_weight=" << opt << "\n";
  CHECK(r.out.find(expect.str()) != std::string::npos);

  auto v = run({"solve", kExample, "--method", "christofides", "--verify"});
  CHECK(v.code == 0);
  CHECK(v.out.find("verify=passed") != std::string::npos);
}

TEST_CASE("invalid input maps to exit code 2") {
  auto bad = temp_file("bad.json", R"({"n":2,"matrix":[[0,1],[2,0]]})");
  auto r = run({"solve", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("ValidationError") != std::string::npos);
  CHECK(r.err.find("AsymmetricWeight") != std::string::npos);

  CHECK(run({"analyze", temp_file("garbage.json", "{not json")}).code == 2);
  CHECK(run({"analyze", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("usage errors map to exit code 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"solve", kExample, "--method", "greedy"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"bench", "--sizes", "x", "--seeds", "1"}).code == 1);
}

TEST_CASE("solver errors map to exit code 3") {
  auto big = temp_file("big.json", semitsp::serialize_json(semitsp::gen_random(22, 0, 1, 10)));
  auto r = run({"solve", big, "--method", "exact"});
  CHECK(r.code == 3);
  CHECK(r.err.find("SolverError") != std::string::npos);
}

TEST_CASE("complete, gen and bench write files") {
  auto path = temp_file("edges.json", R"({"n":3,"edges":[[0,1,1],[1,2,2]]})");
  auto out = (std::filesystem::temp_directory_path() / "semitsp_cli_completed.json").string();
  CHECK(run({"complete", path, "-o", out}).code == 0);
  auto inst = semitsp::load_instance(out);
  REQUIRE(inst.is_complete());
  CHECK(std::get<semitsp::CompleteWeightedGraph>(inst.graph).weight(0, 2) == 3);

  auto gen = (std::filesystem::temp_directory_path() / "semitsp_cli_star.json").string();
  CHECK(run({"gen", "star", "--n", "6", "--gamma", "2", "-o", gen}).code == 0);
  auto s = run({"solve", gen});
  CHECK(s.out.find("tour_weight=18\n") != std::string::npos);

  auto csv = run({"bench", "--sizes", "4-5", "--seeds", "0,1", "--methods", "mst2"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
}
