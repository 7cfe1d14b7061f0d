#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "buckleopt/cli.hpp"
#include "oracles.hpp"

using namespace buckleopt;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("buckleopt_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<double> lambdas(const std::string& out) {
  std::vector<double> v;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("Lambda_", 0) == 0) v.push_back(std::stod(line.substr(line.find('=') + 1)));
  }
  return v;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    for (std::string c; std::getline(cs, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eig on the unit square") {
    const fs::path dir = scratch("eig");
    write(dir / "square.json", R"({"type":"rect","corner":[0,0],"w":1,"h":1})");
    const Result r = invoke({"eig", (dir / "square.json").string(), "--h", "0.03125", "--count", "3", "--out",
                             (dir / "rec.json").string(), "--dump-mask", (dir / "mask.csv").string()});
    REQUIRE(r.code == 0);
    const auto v = lambdas(r.out);
    REQUIRE(v.size() == 3);
    CHECK(v[0] <= v[1]);
    CHECK(v[1] <= v[2]);
    CHECK(std::abs(v[0] / 52.3447 - 1) < 0.1);

    const auto rec = nlohmann::json::parse(slurp(dir / "rec.json"));
    CHECK(rec["lambda"].size() == 3);
    const auto manifest = nlohmann::json::parse(slurp(dir / "rec.manifest.json"));
    CHECK(manifest["command"] == "eig");
    CHECK(manifest["status"] == "ok");
    CHECK(!manifest["finished_at"].is_null());
    CHECK(fs::exists(dir / "mask.csv"));
  }

  TEST_CASE("eig with extrapolation on the disk") {
    const fs::path dir = scratch("disk");
    write(dir / "disk.json", R"({"type":"disk","center":[0,0],"radius":1})");
    const Result r = invoke({"eig", (dir / "disk.json").string(), "--h", "0.03125", "--extrapolate"});
    REQUIRE(r.code == 0);
    const double j11 = oracle::bessel_j1_first_zero();
    CHECK(std::abs(lambdas(r.out)[0] / (j11 * j11) - 1) < 0.02);
    CHECK(r.out.find("Richardson") != std::string::npos);
  }

  TEST_CASE("usage and input errors exit with code 2") {
    const fs::path dir = scratch("errors");
    Result r = invoke({"eig", (dir / "missing.json").string()});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    write(dir / "bad.json", R"({"type":"disk","center":[0,0]})");
    r = invoke({"eig", (dir / "bad.json").string()});
    CHECK(r.code == 2);

    write(dir / "square.json", R"({"type":"rect","corner":[0,0],"w":1,"h":1})");
    CHECK(invoke({"eig", (dir / "square.json").string(), "--count", "0"}).code == 2);
    CHECK(invoke({"eig", (dir / "square.json").string(), "--h", "-1"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);

    write(dir / "opt.json", R"({"family": {"type": "star"}, "target_perimeter": -1})");
    CHECK(invoke({"optimize", (dir / "opt.json").string(), "--out-dir", (dir / "run").string()}).code == 2);
  }

  TEST_CASE("sweep toward the disk") {
    const fs::path dir = scratch("sweep");
    write(dir / "sweep.json", R"({"family":"regular-polygon","n":[4,8,16],"grid_h":0.0625,"extrapolate":false})");
    const Result r = invoke({"--threads", "2", "sweep", (dir / "sweep.json").string()});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0][0] == "n");
    CHECK(rows[0].size() == 6);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][5]) == doctest::Approx(2 * oracle::kPi));

    write(dir / "one.json", R"({"family":"regular-polygon","n":[6],"grid_h":0.0625,"extrapolate":false,
                                "out":")" + (dir / "one.csv").generic_string() + R"("})");
    REQUIRE(invoke({"sweep", (dir / "one.json").string()}).code == 0);
    CHECK(csv_rows(slurp(dir / "one.csv")).size() == 2);
    CHECK(fs::exists(dir / "one.manifest.json"));

    write(dir / "bad.json", R"({"family":"regular-polygon","n":[2]})");
    CHECK(invoke({"sweep", (dir / "bad.json").string()}).code == 2);
  }

  TEST_CASE("optimize writes its run directory") {
    const fs::path dir = scratch("optimize");
    write(dir / "opt.json", R"({"family": {"type": "star", "K": 2}, "target_perimeter": 6.283185307179586,
                                "start": {"type":"star","center":[0,0],"r0":1,"coeffs":[[0,0],[0.2,0]]},
                                "grid_h": 0.0625, "report_grid_h": 0.0625, "extrapolate": false, "max_evals": 12})");
    const Result r = invoke({"optimize", (dir / "opt.json").string(), "--out-dir", (dir / "run").string()});
    REQUIRE(r.code == 0);
    for (const char* f : {"manifest.json", "trace.csv", "evaluations.csv", "final_domain.json", "final_record.json",
                          "start_record.json"}) {
      CHECK(fs::exists(dir / "run" / f));
    }
    const auto manifest = nlohmann::json::parse(slurp(dir / "run" / "manifest.json"));
    CHECK(manifest["command"] == "optimize");
    CHECK(manifest["status"] == "ok");
    CHECK(manifest["outputs"].size() == 5);
    const auto evals = csv_rows(slurp(dir / "run" / "evaluations.csv"));
    CHECK(evals.size() <= 13);
    CHECK(evals[0][0] == "eval_count");
  }

  TEST_CASE("seed from the environment") {
    CHECK(!cli::seed_from_environment().has_value());
    setenv("BUCKLEOPT_SEED", "42", 1);
    CHECK(cli::seed_from_environment() == 42u);
    setenv("BUCKLEOPT_SEED", "nope", 1);
    CHECK_THROWS(cli::seed_from_environment());
    unsetenv("BUCKLEOPT_SEED");
  }

  TEST_CASE("manifest helpers") {
    CHECK(cli::manifest_path_for("out/report.json") == fs::path("out/report.manifest.json"));
    CHECK(cli::utc_timestamp().size() == 20);
    CHECK(!cli::tool_version().empty());
    cli::SweepConfig c;
    c.sides = {4};
    CHECK(cli::regular_polygon_hausdorff(4, c) > cli::regular_polygon_hausdorff(64, c));
  }
}
