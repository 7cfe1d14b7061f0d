#include "buckleopt/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "buckleopt/errors.hpp"

namespace buckleopt {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
  int index = 0;  // evaluation counter value, the tie-breaker
};

bool before(const Vertex& a, const Vertex& b) {
  // +inf compares equal to +inf; order falls back to the index.
  if (a.f < b.f) return true;
  if (b.f < a.f) return false;
  return a.index < b.index;
}

std::vector<double> affine(const std::vector<double>& base, const std::vector<double>& toward, double t) {
  std::vector<double> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * (toward[i] - base[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const BatchObjective& f, std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  if (n == 0) throw InvalidArgument("Nelder-Mead needs at least one parameter");
  if (opts.max_evals < static_cast<int>(n) + 1) {
    throw InvalidArgument("max_evals must cover the starting simplex");
  }
  if (!(opts.reflection > 0.0) || !(opts.expansion > opts.reflection) || !(opts.contraction > 0.0) ||
      !(opts.contraction < 1.0) || !(opts.shrink > 0.0) || !(opts.shrink < 1.0)) {
    throw InvalidArgument("invalid simplex coefficients");
  }

  int evals = 0;
  auto evaluate = [&](const std::vector<std::vector<double>>& pts) {
    auto values = f(pts);
    std::vector<Vertex> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double v = std::isnan(values[i]) ? HUGE_VAL : values[i];
      out[i] = {pts[i], v, evals++};
    }
    return out;
  };

  std::vector<std::vector<double>> start(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) start[i + 1][i] += opts.initial_step;
  std::vector<Vertex> simplex = evaluate(start);

  NelderMeadResult result;
  while (true) {
    std::sort(simplex.begin(), simplex.end(), before);
    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();
    const double spread = worst.f - best.f;
    if (std::isfinite(spread) && spread <= opts.stop_tolerance * std::max(1.0, std::abs(best.f))) {
      result.converged = true;
      break;
    }
    const int remaining = opts.max_evals - evals;
    if (remaining < 2) break;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    const Vertex reflected = evaluate({affine(centroid, worst.x, -opts.reflection)})[0];
    const Vertex& second_worst = simplex[n - 1];
    if (before(reflected, best)) {
      const Vertex expanded = evaluate({affine(centroid, worst.x, -opts.expansion)})[0];
      simplex.back() = before(expanded, reflected) ? expanded : reflected;
      continue;
    }
    if (before(reflected, second_worst)) {
      simplex.back() = reflected;
      continue;
    }
    // Outside contraction when the reflection beat the worst vertex, inside otherwise.
    const bool outside = before(reflected, worst);
    const Vertex contracted =
        evaluate({affine(centroid, outside ? reflected.x : worst.x, opts.contraction)})[0];
    if (before(contracted, outside ? reflected : worst)) {
      simplex.back() = contracted;
      continue;
    }
    if (opts.max_evals - evals < static_cast<int>(n)) break;
    std::vector<std::vector<double>> shrunk;
    shrunk.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) shrunk.push_back(affine(simplex.front().x, simplex[v].x, opts.shrink));
    auto fresh = evaluate(shrunk);
    for (std::size_t v = 1; v <= n; ++v) simplex[v] = std::move(fresh[v - 1]);
  }

  std::sort(simplex.begin(), simplex.end(), before);
  result.x = simplex.front().x;
  result.f = simplex.front().f;
  result.evaluations = evals;
  return result;
}

}  // namespace buckleopt
