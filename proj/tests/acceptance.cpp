#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "buckleopt/cli.hpp"
#include "buckleopt/raster.hpp"
#include "buckleopt/shapeopt.hpp"
#include "oracles.hpp"

using namespace buckleopt;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path workdir() {
  const fs::path dir = fs::temp_directory_path() / "buckleopt_acceptance";
  fs::create_directories(dir);
  return dir;
}

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct VerifyRuns {
  nlohmann::json report;
  std::string first;
  std::string second;
  int first_code = -1;
  int second_code = -1;
};

const VerifyRuns& verify_runs() {
  static const VerifyRuns runs = [] {
    VerifyRuns r;
    const fs::path dir = workdir();
    std::ostringstream out;
    std::ostringstream err;
    const std::string t = std::to_string(threads());
    r.first_code = cli::run({"--threads", t, "verify", "--seed", "1", "--out", (dir / "verify_a.json").string()}, out, err);
    r.second_code = cli::run({"--threads", t, "verify", "--seed", "1", "--out", (dir / "verify_b.json").string()}, out, err);
    r.first = slurp(dir / "verify_a.json");
    r.second = slurp(dir / "verify_b.json");
    r.report = nlohmann::json::parse(r.first);
    return r;
  }();
  return runs;
}

// Every check under the prefix passes, controls included, and the group did not throw.
Outcome group(const std::string& prefix, std::size_t min_checks) {
  const auto& report = verify_runs().report;
  std::size_t total = 0;
  std::size_t primary = 0;
  std::vector<std::string> failed;
  for (const auto& c : report["checks"]) {
    const std::string name = c["name"];
    if (name.rfind(prefix, 0) != 0) continue;
    ++total;
    if (!c["control"].get<bool>()) ++primary;
    if (!c["passed"].get<bool>()) failed.push_back(name);
  }
  Outcome o;
  o.passed = failed.empty() && primary >= min_checks;
  o.detail = std::to_string(total - failed.size()) + "/" + std::to_string(total) + " checks";
  for (const auto& f : failed) o.detail += "; failed " + f;
  if (primary < min_checks) o.detail += "; expected at least " + std::to_string(min_checks);
  return o;
}

Outcome disk_eigenvalue() {
  const fs::path file = workdir() / "disk.json";
  std::ofstream(file) << R"({"type":"disk","center":[0,0],"radius":1})";
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"eig", file.string(), "--h", "0.015625", "--extrapolate"}, out, err);
  const double secs = seconds_since(t0);
  double lambda = NAN;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("Lambda_1", 0) == 0) lambda = std::stod(line.substr(line.find('=') + 1));
  }
  const double j11 = oracle::bessel_j1_first_zero();
  const double rel = std::abs(lambda / (j11 * j11) - 1);
  return {code == 0 && rel < 0.01 && secs < 60.0,
          fmt("Lambda_1 = %.6f, j11^2 = %.6f, rel = %.2e (< 1e-2), %.1f s (< 60 s)", lambda, j11 * j11, rel, secs)};
}

Outcome disk_optimality() {
  OptimizerConfig c;
  c.family = FamilyKind::kStar;
  c.family_size = 4;
  c.start = StarShape{{0, 0}, 1.0, {{0, 0}, {0.3, 0}, {0, 0}, {0, 0}}};
  c.target_perimeter = 2 * std::numbers::pi;
  c.simplex.max_evals = 2000;
  c.threads = threads();
  const auto t0 = std::chrono::steady_clock::now();
  const OptTrace trace = optimize(c);
  const double secs = seconds_since(t0);

  bool saturated = true;
  for (const auto& e : trace.evaluations) {
    if (e.record && std::abs(e.record->perimeter / c.target_perimeter - 1) > 1e-9) saturated = false;
  }
  const double j11 = oracle::bessel_j1_first_zero();
  const double disk = 4 * std::numbers::pi * std::numbers::pi * j11 * j11;
  const double value = objective_scale_invariant(trace.final);
  const double rel = std::abs(value / disk - 1);
  const int components = connected_components(rasterize(trace.final.domain, trace.final.grid_h));
  const std::size_t evals = trace.evaluations.size();
  Outcome o;
  o.passed = rel < 0.02 && trace.hausdorff_to_disk < 0.05 && evals <= 2000 && secs < 1800.0 && saturated && components == 1;
  o.detail = fmt("P^2 Lambda_1 = %.4f vs %.4f, rel = %.2e (< 2e-2), d_H = %.4f (< 0.05)", value, disk, rel,
                 trace.hausdorff_to_disk) +
             fmt(", %.0f evals, %.0f s, components = %.0f", static_cast<double>(evals), secs, components) +
             (saturated ? ", P saturated" : ", P NOT saturated");
  return o;
}

Outcome convex_second_eigenvalue() {
  OptimizerConfig c;
  c.family = FamilyKind::kPolygon;
  c.family_size = 5;
  c.start = regular_polygon(5, 1.0, {0, 0}, std::numbers::pi / 2);
  c.convexify = true;
  c.eigen_index = 2;
  c.simplex.max_evals = 150;
  c.threads = threads();
  const OptTrace trace = optimize(c);

  bool convex = true;
  bool ordered = true;
  for (const auto& e : trace.evaluations) {
    if (!e.record) continue;
    convex = convex && is_convex(e.record->domain);
    ordered = ordered && e.record->lambda[0] <= e.record->lambda[1];
  }
  ordered = ordered && trace.final.lambda[0] <= trace.final.lambda[1];
  const ObjectiveRecord start = buckling_of_domain(trace.start.domain, trace.final.grid_h, 2, c.extrapolate);
  const bool decreased = trace.final.lambda[1] <= start.lambda[1];
  Outcome o;
  o.passed = convex && ordered && decreased;
  o.detail = fmt("Lambda_2 start %.6f -> final %.6f, %.0f evals", start.lambda[1], trace.final.lambda[1],
                 static_cast<double>(trace.evaluations.size())) +
             (convex ? ", all iterates convex" : ", NON-CONVEX iterate") +
             (ordered ? ", Lambda_1 <= Lambda_2" : ", ORDER VIOLATED");
  return o;
}

Outcome determinism() {
  const auto& runs = verify_runs();
  const bool same = !runs.first.empty() && runs.first == runs.second;
  return {same && runs.first_code == runs.second_code,
          std::string(same ? "reports byte-identical" : "reports DIFFER") + " (" + std::to_string(runs.first.size()) +
              " bytes), exit codes " + std::to_string(runs.first_code) + "/" + std::to_string(runs.second_code)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"disk eigenvalue vs Bessel oracle", disk_eigenvalue},
      {"exact discrete scaling law", [] { return group("scaling/matrix/", 24); }},
      {"nested-mask monotonicity", [] { return group("monotonicity/", 20); }},
      {"Payne inequality", [] { return group("payne/", 16); }},
      {"penalized argmin at t = 1", [] { return group("penalized/", 24); }},
      {"convexification", [] { return group("convexification/", 7); }},
      {"disk optimality probe", disk_optimality},
      {"convex second-eigenvalue run", convex_second_eigenvalue},
      {"dense oracle equivalence", [] { return group("dense-equivalence/", 8); }},
      {"verify determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
