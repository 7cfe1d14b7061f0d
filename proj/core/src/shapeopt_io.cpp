#include <cstdio>
#include <set>
#include <sstream>

#include "buckleopt/errors.hpp"
#include "buckleopt/shapeopt.hpp"
#include "json_support.hpp"

namespace buckleopt {

namespace {

using detail::json;

const std::set<std::string> kConfigKeys = {
    "family",      "start",    "target_perimeter", "eigen_index", "convexify", "grid_h",
    "report_grid_h", "extrapolate", "simplex",    "max_evals",   "stop_tolerance", "seed",
    "solver_tol",  "threads",  "trace_hausdorff",
};
const std::set<std::string> kSimplexKeys = {"reflection", "expansion", "contraction", "shrink", "initial_step"};

template <class T>
T optional_field(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OptimizerConfig optimizer_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  if (!j.is_object()) throw FormatError("optimizer config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kConfigKeys.contains(key)) throw FormatError("unknown optimizer config field '" + key + "'");
  }
  OptimizerConfig c;
  if (!j.contains("family") || !j.at("family").is_object()) throw FormatError("optimizer config needs 'family'");
  const json& fam = j.at("family");
  const auto type = optional_field<std::string>(fam, "type", "");
  if (type == "star") {
    c.family = FamilyKind::kStar;
    c.family_size = optional_field<int>(fam, "K", 4);
  } else if (type == "polygon") {
    c.family = FamilyKind::kPolygon;
    c.family_size = optional_field<int>(fam, "n", 5);
  } else {
    throw FormatError("family.type must be 'star' or 'polygon'");
  }
  if (j.contains("start")) c.start = detail::domain_from_json_value(j.at("start"));
  c.target_perimeter = detail::require_number(j, "target_perimeter");
  c.eigen_index = optional_field<int>(j, "eigen_index", c.eigen_index);
  c.convexify = optional_field<bool>(j, "convexify", c.convexify);
  c.grid_h = optional_field<double>(j, "grid_h", c.grid_h);
  c.report_grid_h = optional_field<double>(j, "report_grid_h", c.report_grid_h);
  c.extrapolate = optional_field<bool>(j, "extrapolate", c.extrapolate);
  if (j.contains("simplex")) {
    const json& s = j.at("simplex");
    if (!s.is_object()) throw FormatError("'simplex' must be an object");
    for (const auto& [key, value] : s.items()) {
      if (!kSimplexKeys.contains(key)) throw FormatError("unknown simplex field '" + key + "'");
    }
    c.simplex.reflection = optional_field<double>(s, "reflection", c.simplex.reflection);
    c.simplex.expansion = optional_field<double>(s, "expansion", c.simplex.expansion);
    c.simplex.contraction = optional_field<double>(s, "contraction", c.simplex.contraction);
    c.simplex.shrink = optional_field<double>(s, "shrink", c.simplex.shrink);
    c.simplex.initial_step = optional_field<double>(s, "initial_step", c.simplex.initial_step);
  }
  c.simplex.max_evals = optional_field<int>(j, "max_evals", c.simplex.max_evals);
  c.simplex.stop_tolerance = optional_field<double>(j, "stop_tolerance", c.simplex.stop_tolerance);
  c.seed = optional_field<std::uint64_t>(j, "seed", c.seed);
  c.solver_tol = optional_field<double>(j, "solver_tol", c.solver_tol);
  c.threads = optional_field<int>(j, "threads", c.threads);
  c.trace_hausdorff = optional_field<bool>(j, "trace_hausdorff", c.trace_hausdorff);
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return c;
}

std::string optimizer_config_to_json(const OptimizerConfig& c) {
  json j;
  j["family"] = c.family == FamilyKind::kStar ? json{{"type", "star"}, {"K", c.family_size}}
                                              : json{{"type", "polygon"}, {"n", c.family_size}};
  if (c.start) j["start"] = detail::to_json_value(*c.start);
  j["target_perimeter"] = c.target_perimeter;
  j["eigen_index"] = c.eigen_index;
  j["convexify"] = c.convexify;
  j["grid_h"] = c.grid_h;
  j["report_grid_h"] = c.report_grid_h;
  j["extrapolate"] = c.extrapolate;
  j["simplex"] = {{"reflection", c.simplex.reflection},
                  {"expansion", c.simplex.expansion},
                  {"contraction", c.simplex.contraction},
                  {"shrink", c.simplex.shrink},
                  {"initial_step", c.simplex.initial_step}};
  j["max_evals"] = c.simplex.max_evals;
  j["stop_tolerance"] = c.simplex.stop_tolerance;
  j["seed"] = c.seed;
  j["solver_tol"] = c.solver_tol;
  j["threads"] = c.threads;
  j["trace_hausdorff"] = c.trace_hausdorff;
  return j.dump(2);
}

std::string record_to_json(const ObjectiveRecord& rec, int indent) {
  json j;
  j["domain"] = detail::to_json_value(rec.domain);
  j["grid_h"] = rec.grid_h;
  j["lambda"] = rec.lambda;
  j["perimeter"] = rec.perimeter;
  j["area"] = rec.area;
  j["objective_value"] = rec.objective_value;
  j["objective_kind"] = rec.kind == ObjectiveKind::kPenalized ? "penalized" : "scale_invariant";
  j["eigen_index"] = rec.eigen_index;
  if (rec.kind == ObjectiveKind::kPenalized) j["beta"] = rec.beta;
  j["extrapolated"] = rec.extrapolated;
  j["unknowns"] = rec.unknowns;
  return j.dump(indent);
}

std::string trace_to_csv(const OptTrace& trace, int eigen_count) {
  std::ostringstream os;
  os << "eval_count,objective,perimeter";
  for (int i = 1; i <= eigen_count; ++i) os << ",lambda" << i;
  os << ",hausdorff_to_disk\n";
  for (const auto& row : trace.iterations) {
    os << row.eval_count << ',' << format_number(row.best_objective);
    const auto& best = trace.evaluations[row.best];
    if (best.record) {
      os << ',' << format_number(best.record->perimeter);
      for (int i = 0; i < eigen_count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        os << ',' << format_number(idx < best.record->lambda.size() ? best.record->lambda[idx] : HUGE_VAL);
      }
    } else {
      os << ",nan";
      for (int i = 0; i < eigen_count; ++i) os << ",nan";
    }
    os << ',' << format_number(row.hausdorff_to_disk) << '\n';
  }
  return os.str();
}

}  // namespace buckleopt
