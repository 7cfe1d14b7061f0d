#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace buckleopt::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,      // bad flags, unreadable or invalid input files
  kNumerical = 3,  // solver failure or failed verification
};

// Written with status "running" before a command computes anything and
// rewritten with the end timestamp and final status afterwards.
struct RunManifest {
  std::string command;
  std::string config_json;  // echo of the effective configuration
  std::uint64_t seed = 0;
  std::string version;
  std::string started_at;
  std::string finished_at;
  std::string status = "running";
  std::vector<std::filesystem::path> outputs;

  std::string to_json() const;
  void write(const std::filesystem::path& path) const;
};

std::string utc_timestamp();
std::string tool_version();

// "<dir>/<stem>.manifest.json" next to an output file.
std::filesystem::path manifest_path_for(const std::filesystem::path& output);

// BUCKLEOPT_SEED when set; InvalidArgument when it is not an integer.
std::optional<std::uint64_t> seed_from_environment();

enum class SweepNormalization {
  kPerimeter,  // every member saturated to the target perimeter
  kInscribed,  // fixed circumradius
};

struct SweepConfig {
  std::vector<int> sides;
  SweepNormalization normalization = SweepNormalization::kPerimeter;
  double target_perimeter = 6.283185307179586;
  double circumradius = 1.0;
  double grid_h = 1.0 / 64.0;
  bool extrapolate = true;
  double solver_tol = 1e-8;
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> out;  // stdout when empty

  void validate() const;
  std::string to_json() const;
};

SweepConfig sweep_config_from_json(const std::string& text);

struct SweepRow {
  int sides = 0;
  double hausdorff_to_limit = 0.0;
  double lambda1 = 0.0;
  double lambda1_limit = 0.0;
  double perimeter = 0.0;
};

// Regular n-gon against its limit disk, both centered at the origin.
double regular_polygon_hausdorff(int sides, const SweepConfig& config);
double limit_radius(const SweepConfig& config);
std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads);
// n,hausdorff_to_limit,lambda1,lambda1_limit,relative_to_limit,perimeter
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

// Full command line without the program name, e.g. {"eig", "disk.json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace buckleopt::cli
