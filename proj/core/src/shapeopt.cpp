#include "buckleopt/shapeopt.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "buckleopt/errors.hpp"
#include "buckleopt/operators.hpp"
#include "buckleopt/parallel.hpp"
#include "buckleopt/raster.hpp"

namespace buckleopt {

namespace {

struct GridSolve {
  GridEmbedding grid;
  Spectrum spectrum;
};

GridSolve solve_on_grid(const DomainSpec& d, double h, int count, const SolverOptions& opts) {
  GridSolve out{rasterize(d, h), {}};
  const auto a = assemble_biharmonic(out.grid);
  const auto b = assemble_laplacian(out.grid);
  SolverOptions local = opts;
  if (local.initial_block.size() > 0 && local.initial_block.rows() != out.grid.n) local.initial_block.resize(0, 0);
  out.spectrum = generalized_smallest(a, b, count, local);
  return out;
}

ObjectiveRecord make_record(const DomainSpec& d, double grid_h, std::vector<double> lambda, bool extrapolated,
                            int unknowns) {
  ObjectiveRecord rec;
  rec.domain = d;
  rec.grid_h = grid_h;
  rec.lambda = std::move(lambda);
  rec.perimeter = perimeter(d);
  rec.area = area(d);
  rec.extrapolated = extrapolated;
  rec.unknowns = unknowns;
  rec.eigen_index = static_cast<int>(rec.lambda.size());
  rec.objective_value = recompute_objective(rec);
  return rec;
}

// Eigenvectors of a previous solve carried over to a new mask on the same lattice.
Eigen::MatrixXd transfer_vectors(const GridEmbedding& from, const Eigen::MatrixXd& vectors, const GridEmbedding& to) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(to.n, vectors.cols());
  for (int j = 0; j < to.ny; ++j) {
    for (int i = 0; i < to.nx; ++i) {
      const int k = to.unknown(i, j);
      if (k < 0) continue;
      const int src = from.unknown(static_cast<int>(to.i0 + i - from.i0), static_cast<int>(to.j0 + j - from.j0));
      if (src >= 0) out.row(k) = vectors.row(src);
    }
  }
  return out;
}

struct WarmStart {
  GridEmbedding grid;
  Eigen::MatrixXd vectors;
};

struct CandidateResult {
  EvaluationEntry entry;
  std::optional<WarmStart> warm;
};

}  // namespace

double recompute_objective(const ObjectiveRecord& rec) {
  if (rec.lambda.empty()) return HUGE_VAL;
  if (rec.kind == ObjectiveKind::kPenalized) return rec.lambda.front() + rec.beta * rec.perimeter;
  const auto idx = static_cast<std::size_t>(std::clamp(rec.eigen_index, 1, static_cast<int>(rec.lambda.size())) - 1);
  return rec.perimeter * rec.perimeter * rec.lambda[idx];
}

ObjectiveRecord buckling_of_domain(const DomainSpec& d, double grid_h, int h_count, bool extrapolate,
                                   const SolverOptions& opts) {
  validate(d);
  if (!(grid_h > 0.0)) throw InvalidArgument("grid spacing must be positive");
  const GridSolve coarse = solve_on_grid(d, grid_h, h_count, opts);
  if (!extrapolate) return make_record(d, grid_h, coarse.spectrum.values, false, coarse.grid.n);
  const GridSolve fine = solve_on_grid(d, 0.5 * grid_h, h_count, opts);
  std::vector<double> lambda(static_cast<std::size_t>(h_count));
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] = 2.0 * fine.spectrum.values[i] - coarse.spectrum.values[i];
  std::sort(lambda.begin(), lambda.end());
  return make_record(d, grid_h, std::move(lambda), true, fine.grid.n);
}

double objective_scale_invariant(const ObjectiveRecord& rec, int dim) {
  if (dim < 2) throw InvalidArgument("dimension must be at least 2");
  if (rec.lambda.empty()) throw InvalidArgument("record has no eigenvalues");
  return std::pow(rec.perimeter, 2.0 / static_cast<double>(dim - 1)) * rec.lambda.front();
}

double beta_star(double lambda1, double perimeter, int dim) {
  if (!(lambda1 > 0.0) || !(perimeter > 0.0)) throw InvalidArgument("beta_star needs positive Lambda_1 and perimeter");
  if (dim < 2) throw InvalidArgument("dimension must be at least 2");
  return 2.0 * lambda1 / (static_cast<double>(dim - 1) * perimeter);
}

std::vector<std::pair<double, double>> penalized_profile(const ObjectiveRecord& base, double beta,
                                                         const std::vector<double>& t_grid, int dim) {
  if (base.lambda.empty()) throw InvalidArgument("record has no eigenvalues");
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0)) throw InvalidArgument("profile dilation factors must be positive");
    out.emplace_back(t, base.lambda.front() / (t * t) + beta * std::pow(t, dim - 1) * base.perimeter);
  }
  return out;
}

std::vector<std::pair<double, double>> penalized_profile(const DomainSpec& d, double beta,
                                                         const std::vector<double>& t_grid, double grid_h) {
  return penalized_profile(buckling_of_domain(d, grid_h, 1, false), beta, t_grid);
}

std::pair<double, double> convexification_gain(const DomainSpec& d, double grid_h, const SolverOptions& opts) {
  const DomainSpec hull = convex_hull(d);
  const double original = solve_on_grid(d, grid_h, 1, opts).spectrum.values.front();
  const double convexified = solve_on_grid(hull, grid_h, 1, opts).spectrum.values.front();
  return {original, convexified};
}

void OptimizerConfig::validate() const {
  if (!(target_perimeter > 0.0) || !std::isfinite(target_perimeter)) {
    throw InvalidArgument("target perimeter must be positive");
  }
  if (eigen_index < 1) throw InvalidArgument("eigen_index must be at least 1");
  if (family == FamilyKind::kStar && (family_size < 1 || family_size > 32)) {
    throw InvalidArgument("star family needs 1 <= K <= 32");
  }
  if (family == FamilyKind::kPolygon && (family_size < 3 || family_size > 256)) {
    throw InvalidArgument("polygon family needs 3 <= n <= 256");
  }
  if (grid_h < 0.0 || report_grid_h < 0.0) throw InvalidArgument("grid spacings must be non-negative");
  if (!(solver_tol > 0.0)) throw InvalidArgument("solver_tol must be positive");
  if (simplex.max_evals < 1) throw InvalidArgument("max_evals must be positive");
  if (!(simplex.initial_step > 0.0)) throw InvalidArgument("initial_step must be positive");
  if (start) {
    buckleopt::validate(*start);
    if (family == FamilyKind::kStar && !std::holds_alternative<StarShape>(*start)) {
      throw InvalidArgument("star family needs a star start domain");
    }
    if (family == FamilyKind::kPolygon) {
      const auto* p = std::get_if<Polygon>(&*start);
      if (!p || static_cast<int>(p->vertices.size()) != family_size) {
        throw InvalidArgument("polygon family needs a polygon start with n vertices");
      }
    }
  }
}

std::vector<double> family_start_params(const OptimizerConfig& config) {
  if (config.family == FamilyKind::kStar) {
    std::vector<double> x(2 * static_cast<std::size_t>(config.family_size), 0.0);
    if (config.start) {
      const auto& s = std::get<StarShape>(*config.start);
      for (std::size_t k = 0; k < s.coeffs.size() && k < static_cast<std::size_t>(config.family_size); ++k) {
        x[2 * k] = s.coeffs[k].a / s.r0;
        x[2 * k + 1] = s.coeffs[k].b / s.r0;
      }
    }
    return x;
  }
  return std::vector<double>(2 * static_cast<std::size_t>(config.family_size), 0.0);
}

namespace {

Polygon polygon_start(const OptimizerConfig& config) {
  if (config.start) return std::get<Polygon>(*config.start);
  return regular_polygon(config.family_size, 1.0, {}, 0.5 * std::numbers::pi);
}

}  // namespace

DomainSpec family_domain(const OptimizerConfig& config, const std::vector<double>& params) {
  if (params.size() != 2 * static_cast<std::size_t>(config.family_size)) {
    throw InvalidArgument("parameter vector does not match the family size");
  }
  if (config.family == FamilyKind::kStar) {
    StarShape s{{0.0, 0.0}, 1.0, {}};
    for (std::size_t k = 0; k < static_cast<std::size_t>(config.family_size); ++k) {
      s.coeffs.push_back({params[2 * k], params[2 * k + 1]});
    }
    return s;
  }
  Polygon p = polygon_start(config);
  const double scale = diameter(p);
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    p.vertices[k] = p.vertices[k] + scale * Vec2{params[2 * k], params[2 * k + 1]};
  }
  return p;
}

double hausdorff_to_disk(const DomainSpec& d, double p) {
  return hausdorff_distance(d, Disk{centroid(d), p / (2.0 * std::numbers::pi)});
}

OptTrace optimize(const OptimizerConfig& config) {
  config.validate();
  const std::vector<double> x0 = family_start_params(config);

  auto shape_of = [&](const std::vector<double>& params) {
    DomainSpec d = family_domain(config, params);
    validate(d);
    if (config.convexify) d = convex_hull(d);
    return saturate_perimeter(d, config.target_perimeter);
  };

  const double search_h = config.grid_h > 0.0 ? config.grid_h : diameter(shape_of(x0)) / 96.0;
  SolverOptions solver;
  solver.tol = config.solver_tol;
  solver.seed = config.seed;

  OptTrace trace;
  std::optional<WarmStart> warm;
  std::size_t best = 0;
  bool have_best = false;

  auto evaluate_one = [&](const std::vector<double>& params, const std::optional<WarmStart>& seed_vectors) {
    CandidateResult out;
    out.entry.params = params;
    try {
      const DomainSpec d = shape_of(params);
      const GridEmbedding grid = rasterize(d, search_h);
      SolverOptions local = solver;
      if (seed_vectors) local.initial_block = transfer_vectors(seed_vectors->grid, seed_vectors->vectors, grid);
      const auto a = assemble_biharmonic(grid);
      const auto b = assemble_laplacian(grid);
      Spectrum s = generalized_smallest(a, b, config.eigen_index, local);
      ObjectiveRecord rec = make_record(d, search_h, s.values, false, grid.n);
      out.entry.objective = rec.objective_value;
      out.entry.record = std::move(rec);
      out.warm = WarmStart{grid, std::move(s.vectors)};
    } catch (const InvalidDomain&) {
    } catch (const DegenerateDomain&) {
    } catch (const ResolutionTooCoarse&) {
    } catch (const SolverFailure&) {
    } catch (const InvalidArgument&) {
    }
    return out;
  };

  const BatchObjective batch = [&](const std::vector<std::vector<double>>& points) {
    std::vector<CandidateResult> results(points.size());
    const std::optional<WarmStart> snapshot = warm;
    parallel_for(points.size(), config.threads,
                 [&](std::size_t i) { results[i] = evaluate_one(points[i], snapshot); });
    std::vector<double> values;
    values.reserve(points.size());
    for (auto& r : results) {
      r.entry.eval_count = static_cast<int>(trace.evaluations.size()) + 1;
      values.push_back(r.entry.objective);
      const bool improved = r.entry.record && (!have_best || r.entry.objective < trace.evaluations[best].objective);
      trace.evaluations.push_back(std::move(r.entry));
      TraceRow row;
      row.eval_count = trace.evaluations.back().eval_count;
      if (improved) {
        best = trace.evaluations.size() - 1;
        have_best = true;
        warm = std::move(r.warm);
        if (config.trace_hausdorff) {
          row.hausdorff_to_disk = hausdorff_to_disk(trace.evaluations[best].record->domain, config.target_perimeter);
        }
      } else if (!trace.iterations.empty()) {
        row.hausdorff_to_disk = trace.iterations.back().hausdorff_to_disk;
      }
      row.best = best;
      row.best_objective = have_best ? trace.evaluations[best].objective : HUGE_VAL;
      trace.iterations.push_back(row);
    }
    return values;
  };

  const NelderMeadResult nm = nelder_mead(batch, x0, config.simplex);
  trace.converged = nm.converged;
  if (!have_best) throw SolverFailure("no feasible candidate was found", {});
  if (trace.evaluations.front().record) trace.start = *trace.evaluations.front().record;

  const ObjectiveRecord& winner = *trace.evaluations[best].record;
  const double report_h = config.report_grid_h > 0.0 ? config.report_grid_h : diameter(winner.domain) / 192.0;
  trace.final = buckling_of_domain(winner.domain, report_h, config.eigen_index, config.extrapolate, solver);
  trace.hausdorff_to_disk = hausdorff_to_disk(winner.domain, config.target_perimeter);
  return trace;
}

}  // namespace buckleopt
