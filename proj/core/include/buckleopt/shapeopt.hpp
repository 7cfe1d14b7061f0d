#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "buckleopt/eigensolve.hpp"
#include "buckleopt/geometry.hpp"
#include "buckleopt/nelder_mead.hpp"

namespace buckleopt {

enum class ObjectiveKind {
  kScaleInvariant,  // P^(2/(d-1)) * Lambda_h, dimensionless
  kPenalized,       // Lambda_1 + beta * P, length^-2
};

struct ObjectiveRecord {
  DomainSpec domain;
  double grid_h = 0.0;
  std::vector<double> lambda;  // Lambda_1..Lambda_h, ascending
  double perimeter = 0.0;
  double area = 0.0;
  double objective_value = 0.0;
  ObjectiveKind kind = ObjectiveKind::kScaleInvariant;
  int eigen_index = 1;  // which Lambda enters the objective
  double beta = 0.0;    // penalized objective only
  bool extrapolated = false;
  int unknowns = 0;     // grid unknowns of the (finest) solve
};

// Objective value from the stored fields (planar setting, d = 2).
double recompute_objective(const ObjectiveRecord& rec);

// Rasterize -> assemble -> solve. With extrapolate, solves at grid_h and
// grid_h / 2 and reports 2 L(h/2) - L(h) per eigenvalue.
ObjectiveRecord buckling_of_domain(const DomainSpec& d, double grid_h, int h_count, bool extrapolate,
                                   const SolverOptions& opts = {});

// P^(2/(dim-1)) * Lambda_1.
double objective_scale_invariant(const ObjectiveRecord& rec, int dim = 2);

// beta = 2 Lambda_1 / ((dim - 1) P), the penalty weight whose profile
// F(t) = t^-2 Lambda_1 + beta t^(dim-1) P is stationary at t = 1.
double beta_star(double lambda1, double perimeter, int dim);

// Closed-form F(t) over t_grid from one record; no further solves.
std::vector<std::pair<double, double>> penalized_profile(const ObjectiveRecord& base, double beta,
                                                         const std::vector<double>& t_grid, int dim = 2);
std::vector<std::pair<double, double>> penalized_profile(const DomainSpec& d, double beta,
                                                         const std::vector<double>& t_grid, double grid_h);

// Lambda_1 of d and of its convex hull on the common lattice of spacing grid_h.
std::pair<double, double> convexification_gain(const DomainSpec& d, double grid_h, const SolverOptions& opts = {});

enum class FamilyKind { kStar, kPolygon };

struct OptimizerConfig {
  FamilyKind family = FamilyKind::kStar;
  int family_size = 4;  // K Fourier modes for stars, n vertices for polygons
  // Starting shape. Stars: coefficients relative to r0 seed the parameter
  // vector (padded to K). Polygons: the starting vertices (n of them).
  std::optional<DomainSpec> start;
  double target_perimeter = 2.0 * 3.14159265358979323846;
  int eigen_index = 1;
  bool convexify = false;
  double grid_h = 0.0;         // 0: diameter of the saturated start / 96
  double report_grid_h = 0.0;  // 0: diameter of the final domain / 192
  bool extrapolate = true;     // Richardson on the final report
  NelderMeadOptions simplex{.initial_step = 0.1, .max_evals = 2000, .stop_tolerance = 1e-7};
  std::uint64_t seed = 1;
  double solver_tol = 1e-8;
  int threads = 1;
  bool trace_hausdorff = true;  // track hausdorff_to_disk on each improvement

  void validate() const;
};

struct EvaluationEntry {
  int eval_count = 0;  // 1-based
  std::vector<double> params;
  std::optional<ObjectiveRecord> record;  // empty when the candidate was rejected
  double objective = HUGE_VAL;
};

struct TraceRow {
  int eval_count = 0;
  std::size_t best = 0;  // index into OptTrace::evaluations
  double best_objective = HUGE_VAL;
  double hausdorff_to_disk = HUGE_VAL;
};

struct OptTrace {
  std::vector<EvaluationEntry> evaluations;
  std::vector<TraceRow> iterations;  // one per evaluation, best so far
  ObjectiveRecord start;             // first evaluation (the saturated start)
  ObjectiveRecord final;             // best domain re-solved at report resolution
  bool converged = false;
  double hausdorff_to_disk = 0.0;    // final domain vs. disk of perimeter p about its centroid

  const ObjectiveRecord& best_record() const { return *evaluations.at(iterations.back().best).record; }
};

// Domain described by a parameter vector of the configured family (before
// convexification and saturation).
DomainSpec family_domain(const OptimizerConfig& config, const std::vector<double>& params);
std::vector<double> family_start_params(const OptimizerConfig& config);

// Distance from d to the disk with perimeter p centered at d's centroid.
double hausdorff_to_disk(const DomainSpec& d, double p);

// Nelder-Mead over the family. Each candidate is optionally convexified,
// saturated to the target perimeter and scored by P^2 Lambda_h. Rejected
// candidates score +inf.
OptTrace optimize(const OptimizerConfig& config);

// JSON / CSV surfaces.
OptimizerConfig optimizer_config_from_json(const std::string& text);
std::string optimizer_config_to_json(const OptimizerConfig& config);
std::string record_to_json(const ObjectiveRecord& rec, int indent = 2);
// eval_count,objective,perimeter,lambda1..lambdah,hausdorff_to_disk
std::string trace_to_csv(const OptTrace& trace, int eigen_count);

// 17 significant digits.
std::string format_number(double v);

}  // namespace buckleopt
