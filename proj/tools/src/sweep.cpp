#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "buckleopt/cli.hpp"
#include "buckleopt/errors.hpp"
#include "buckleopt/geometry.hpp"
#include "buckleopt/parallel.hpp"
#include "buckleopt/shapeopt.hpp"

namespace buckleopt::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

const std::set<std::string> kSweepKeys{"family", "n",       "normalization", "target_perimeter", "circumradius",
                                       "grid_h", "extrapolate", "solver_tol", "seed",          "out"};

double circumradius_of(int sides, const SweepConfig& c) {
  if (c.normalization == SweepNormalization::kInscribed) return c.circumradius;
  return c.target_perimeter / (2.0 * sides * std::sin(kPi / sides));
}

}  // namespace

void SweepConfig::validate() const {
  if (sides.empty()) throw InvalidArgument("sweep needs at least one polygon");
  for (int n : sides) {
    if (n < 3) throw InvalidArgument("polygons need at least 3 sides");
  }
  if (!(target_perimeter > 0.0) || !std::isfinite(target_perimeter)) throw InvalidArgument("target_perimeter must be positive");
  if (!(circumradius > 0.0) || !std::isfinite(circumradius)) throw InvalidArgument("circumradius must be positive");
  if (!(grid_h > 0.0) || !std::isfinite(grid_h)) throw InvalidArgument("grid_h must be positive");
  if (!(solver_tol > 0.0)) throw InvalidArgument("solver_tol must be positive");
}

std::string SweepConfig::to_json() const {
  nlohmann::ordered_json j;
  j["family"] = "regular-polygon";
  j["n"] = sides;
  j["normalization"] = normalization == SweepNormalization::kPerimeter ? "perimeter" : "inscribed";
  j["target_perimeter"] = target_perimeter;
  j["circumradius"] = circumradius;
  j["grid_h"] = grid_h;
  j["extrapolate"] = extrapolate;
  j["solver_tol"] = solver_tol;
  j["seed"] = seed;
  if (out) j["out"] = out->string();
  return j.dump();
}

SweepConfig sweep_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  if (!j.is_object()) throw FormatError("sweep config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kSweepKeys.contains(key)) throw FormatError("unknown sweep config field '" + key + "'");
  }
  SweepConfig c;
  try {
    if (j.value("family", std::string("regular-polygon")) != "regular-polygon") {
      throw FormatError("sweep family must be 'regular-polygon'");
    }
    if (!j.contains("n")) throw FormatError("sweep config needs 'n'");
    c.sides = j.at("n").get<std::vector<int>>();
    const auto norm = j.value("normalization", std::string("perimeter"));
    if (norm == "perimeter") {
      c.normalization = SweepNormalization::kPerimeter;
    } else if (norm == "inscribed") {
      c.normalization = SweepNormalization::kInscribed;
    } else {
      throw FormatError("normalization must be 'perimeter' or 'inscribed'");
    }
    c.target_perimeter = j.value("target_perimeter", c.target_perimeter);
    c.circumradius = j.value("circumradius", c.circumradius);
    c.grid_h = j.value("grid_h", c.grid_h);
    c.extrapolate = j.value("extrapolate", c.extrapolate);
    c.solver_tol = j.value("solver_tol", c.solver_tol);
    c.seed = j.value("seed", c.seed);
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  return c;
}

double limit_radius(const SweepConfig& config) {
  return config.normalization == SweepNormalization::kPerimeter ? config.target_perimeter / (2.0 * kPi)
                                                                 : config.circumradius;
}

double regular_polygon_hausdorff(int sides, const SweepConfig& config) {
  const double r = circumradius_of(sides, config);
  const double apothem = r * std::cos(kPi / sides);
  const double limit = limit_radius(config);
  return std::max(r - limit, limit - apothem);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, int threads) {
  config.validate();
  SolverOptions opts;
  opts.tol = config.solver_tol;
  opts.seed = config.seed;

  // Slot 0 is the limit disk.
  std::vector<double> lambda(config.sides.size() + 1);
  parallel_for(lambda.size(), threads, [&](std::size_t i) {
    const DomainSpec d = i == 0 ? DomainSpec{Disk{{0.0, 0.0}, limit_radius(config)}}
                                : DomainSpec{regular_polygon(config.sides[i - 1], circumradius_of(config.sides[i - 1], config),
                                                             {}, kPi / 2.0)};
    lambda[i] = buckling_of_domain(d, config.grid_h, 1, config.extrapolate, opts).lambda.front();
  });

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < config.sides.size(); ++i) {
    const int n = config.sides[i];
    rows.push_back({n, regular_polygon_hausdorff(n, config), lambda[i + 1], lambda[0],
                    2.0 * n * circumradius_of(n, config) * std::sin(kPi / n)});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,hausdorff_to_limit,lambda1,lambda1_limit,relative_to_limit,perimeter\n";
  for (const auto& r : rows) {
    os << r.sides << ',' << format_number(r.hausdorff_to_limit) << ',' << format_number(r.lambda1) << ','
       << format_number(r.lambda1_limit) << ',' << format_number((r.lambda1 - r.lambda1_limit) / r.lambda1_limit) << ','
       << format_number(r.perimeter) << '\n';
  }
  return os.str();
}

}  // namespace buckleopt::cli
