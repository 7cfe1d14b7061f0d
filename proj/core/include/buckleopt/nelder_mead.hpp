#pragma once

#include <functional>
#include <vector>

namespace buckleopt {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double initial_step = 0.1;  // axis offsets of the starting simplex
  int max_evals = 1000;
  // Converged when f_worst - f_best <= stop_tolerance * max(1, |f_best|).
  double stop_tolerance = 1e-8;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Evaluates a batch of points and returns their objective values in order.
// Infeasible points may return +inf. The batch form lets the caller evaluate
// the starting simplex and shrink steps concurrently.
using BatchObjective = std::function<std::vector<double>(const std::vector<std::vector<double>>&)>;

// Vertices are ordered by (value, evaluation index), so ties resolve
// deterministically. Never exceeds opts.max_evals evaluations.
NelderMeadResult nelder_mead(const BatchObjective& f, std::vector<double> x0, const NelderMeadOptions& opts);

}  // namespace buckleopt
