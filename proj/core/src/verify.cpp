#include "buckleopt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <span>

#include <json.hpp>

#include "buckleopt/domain_io.hpp"
#include "buckleopt/eigensolve.hpp"
#include "buckleopt/errors.hpp"
#include "buckleopt/operators.hpp"
#include "buckleopt/parallel.hpp"
#include "buckleopt/raster.hpp"
#include "buckleopt/shapeopt.hpp"

namespace buckleopt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExactTol = 1e-12;
constexpr double kResidualTol = 1e-8;
constexpr double kConvergentTol = 0.02;

class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 rng_;
};

std::string fmt_h(double h) {
  const double inv = 1.0 / h;
  char buf[64];
  if (std::abs(inv - std::round(inv)) < 1e-9) {
    std::snprintf(buf, sizeof buf, "h=1/%.0f", inv);
  } else {
    std::snprintf(buf, sizeof buf, "h=%.6g", h);
  }
  return buf;
}

std::string fmt_t(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "t=%g", t);
  return buf;
}

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

SolverOptions tight_options() {
  SolverOptions opts;
  opts.tol = 1e-10;
  return opts;
}

Spectrum buckling_spectrum(const GridEmbedding& g, int count, const SolverOptions& opts = {}) {
  return generalized_smallest(assemble_biharmonic(g), assemble_laplacian(g), std::min(count, g.n), opts);
}

double first_buckling(const GridEmbedding& g, const SolverOptions& opts = {}) {
  return buckling_spectrum(g, 1, opts).values.front();
}

Polygon l_shape() { return Polygon{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}; }

Polygon t_shape() {
  return Polygon{{{-0.5, -1.0}, {0.5, -1.0}, {0.5, 1.0}, {1.5, 1.0}, {1.5, 2.0}, {-1.5, 2.0}, {-1.5, 1.0}, {-0.5, 1.0}}};
}

StarShape random_star(SeededStream& rng, double r0, Vec2 center) {
  StarShape s{center, r0, {}};
  for (int k = 1; k <= 4; ++k) {
    const double amp = 0.2 * r0 / k;
    s.coeffs.push_back({rng.uniform(-amp, amp), rng.uniform(-amp, amp)});
  }
  return s;
}

Check make_check(std::string name, std::string anchor, std::string domain, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.domain = std::move(domain);
  c.tolerance = tolerance;
  return c;
}

}  // namespace

double seeded_uniform(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(seed);
  rng.discard(index);
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

int VerificationReport::failed() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.control && !c.passed; }));
}

int VerificationReport::controls() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.control; }));
}

int VerificationReport::controls_failed() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.control && !c.passed; }));
}

std::string VerificationReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["seed"] = seed;
  doc["summary"] = {{"checks", checks.size()},
                    {"passed", passed()},
                    {"failed", failed()},
                    {"controls", controls()},
                    {"controls_failed", controls_failed()},
                    {"ok", ok()}};
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json q = ordered_json::object();
    for (const auto& [key, value] : c.quantities) q[key] = value;
    ordered_json item = {{"name", c.name},         {"anchor", c.anchor},   {"domain", c.domain},
                         {"quantities", q},         {"passed", c.passed},   {"tolerance", c.tolerance},
                         {"control", c.control}};
    if (!c.note.empty()) item["note"] = c.note;
    list.push_back(std::move(item));
  }
  doc["checks"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
  std::string out;
  char line[512];
  std::size_t width = 4;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    const char* status = c.passed ? "PASS" : "FAIL";
    std::string values;
    for (const auto& [key, value] : c.quantities) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%s%s=%.6g", values.empty() ? "" : " ", key.c_str(), value);
      values += buf;
    }
    std::snprintf(line, sizeof line, "%s%s  %-*s  tol=%-8.2g  ", status, c.control ? "*" : " ", static_cast<int>(width),
                  c.name.c_str(), c.tolerance);
    out += line;
    out += values;
    out += '\n';
  }
  std::snprintf(line, sizeof line, "%zu checks, %d passed, %d failed; %d negative controls (*), %d misbehaved\n",
                checks.size(), passed(), failed(), controls(), controls_failed());
  out += line;
  return out;
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> corpus{
      {"disk", Disk{{0.0, 0.0}, 1.0}},
      {"unit-square", Rectangle{{0.0, 0.0}, 1.0, 1.0}},
      {"rectangle-2x1", Rectangle{{0.0, 0.0}, 2.0, 1.0}},
      {"pentagon", regular_polygon(5, 1.0, {}, kPi / 2.0)},
      {"L-shape", l_shape()},
  };
  SeededStream rng(seed);
  for (int i = 0; i < 3; ++i) {
    const Vec2 center{rng.uniform(-0.25, 0.25), rng.uniform(-0.25, 0.25)};
    StarShape s = random_star(rng, 1.0, center);
    validate(s);
    corpus.push_back({"star-" + std::to_string(i + 1), s});
  }
  return corpus;
}

std::vector<NestedPair> nested_pairs(std::uint64_t seed, int count) {
  std::vector<NestedPair> pairs{
      {Rectangle{{0.0, 0.0}, 1.0, 1.0}, Rectangle{{0.0, 0.0}, 2.0, 2.0}, "square-in-square"},
      {Disk{{0.0, 0.0}, 0.9}, Disk{{0.0, 0.0}, 1.0}, "disk-in-disk"},
      {Disk{{0.0, 0.0}, 1.0}, Disk{{0.0, 0.0}, 1.0}, "identical"},
  };
  SeededStream rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < count; ++i) {
    const Vec2 center{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
    const double r0 = rng.uniform(0.8, 1.2);
    const StarShape outer = random_star(rng, r0, center);
    const double s = rng.uniform(0.6, 0.95);
    StarShape inner{center, s * r0, outer.coeffs};
    for (auto& c : inner.coeffs) c = {s * c.a, s * c.b};
    validate(outer);
    validate(inner);
    pairs.push_back({inner, outer, "star-pair-" + std::to_string(i + 1)});
  }
  return pairs;
}

std::vector<CorpusEntry> nonconvex_fixtures() {
  const StarShape petals{{0.0, 0.0}, 1.0, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0.3, 0}}};
  return {
      {"L-shape", l_shape()},
      {"five-petal-polygon", star_to_polygon(petals, 160)},
      {"T-shape", t_shape()},
  };
}

std::vector<Check> check_scaling_law(const std::vector<CorpusEntry>& corpus, const std::vector<double>& t_list) {
  std::vector<Check> out;
  const std::string anchor = "Lambda_h(t Omega) = t^-2 Lambda_h(Omega)";
  for (const auto& [label, d] : corpus) {
    const double diam = diameter(d);
    const GridEmbedding base = rasterize(d, diam / 64.0);
    const Spectrum ref = buckling_spectrum(base, 3, tight_options());
    for (double t : t_list) {
      const Spectrum scaled = buckling_spectrum(base.scaled(t), 3, tight_options());
      Check c = make_check("scaling/matrix/" + label + "/" + fmt_t(t), anchor, describe(d), kExactTol);
      double worst = 0.0;
      for (std::size_t k = 0; k < ref.values.size(); ++k) {
        const double ratio = scaled.values[k] / ref.values[k];
        worst = std::max(worst, relative(ratio, 1.0 / (t * t)));
        c.quantities.emplace_back("ratio_" + std::to_string(k + 1), ratio);
      }
      c.quantities.emplace_back("expected", 1.0 / (t * t));
      c.quantities.emplace_back("max_rel_error", worst);
      c.passed = worst <= kExactTol;
      out.push_back(std::move(c));
    }

    const double fine_h = diam / 128.0;
    const double lambda = first_buckling(rasterize(d, fine_h));
    for (double t : t_list) {
      const double scaled = first_buckling(rasterize(scale_domain(d, t), t * fine_h));
      const double ratio = scaled / lambda;
      Check c = make_check("scaling/reraster/" + label + "/" + fmt_t(t), anchor, describe(d), kConvergentTol);
      c.quantities = {{"lambda1", lambda}, {"lambda1_scaled", scaled}, {"ratio", ratio}, {"expected", 1.0 / (t * t)}};
      c.passed = relative(ratio, 1.0 / (t * t)) < kConvergentTol;
      out.push_back(std::move(c));
    }
  }
  if (!corpus.empty()) {
    const auto& [label, d] = corpus.front();
    const GridEmbedding base = rasterize(d, diameter(d) / 64.0);
    const double ratio = first_buckling(base.scaled(2.0), tight_options()) / first_buckling(base, tight_options());
    Check c = make_check("scaling/control/" + label + "/t^-1", anchor, describe(d), kExactTol);
    c.control = true;
    c.quantities = {{"ratio", ratio}, {"wrong_exponent_prediction", 0.5}};
    c.passed = relative(ratio, 0.5) > kExactTol;
    c.note = "ratio must not follow t^-1";
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> check_monotonicity(const std::vector<NestedPair>& pairs) {
  std::vector<Check> out;
  const std::string anchor = "Omega_1 in Omega_2 implies Lambda_1(Omega_1) >= Lambda_1(Omega_2)";
  const double h = 1.0 / 32.0;
  for (const auto& pair : pairs) {
    const GridEmbedding inner = rasterize(pair.inner, h);
    const GridEmbedding outer = rasterize(pair.outer, h);
    const double li = first_buckling(inner);
    const double lo = first_buckling(outer);
    const bool nested = mask_subset(inner, outer);
    Check c = make_check("monotonicity/" + pair.label, anchor, describe(pair.inner) + " in " + describe(pair.outer),
                         kResidualTol);
    c.quantities = {{"lambda1_inner", li}, {"lambda1_outer", lo}, {"margin", (li - lo) / lo},
                    {"masks_nested", nested ? 1.0 : 0.0}, {"unknowns_inner", inner.n}, {"unknowns_outer", outer.n}};
    c.passed = nested && li >= lo * (1.0 - kResidualTol);
    out.push_back(std::move(c));

    if (pair.label == "disk-in-disk") {
      Check ctl = make_check("monotonicity/control/" + pair.label, anchor, out.back().domain, kResidualTol);
      ctl.control = true;
      ctl.quantities = {{"lambda1_inner", li}, {"lambda1_outer", lo}};
      ctl.passed = !(lo >= li * (1.0 - kResidualTol));
      ctl.note = "reversed inclusion must be rejected";
      out.push_back(std::move(ctl));
    }
  }
  return out;
}

std::vector<Check> check_payne(const std::vector<CorpusEntry>& corpus, const std::vector<double>& grids) {
  std::vector<Check> out;
  const std::string anchor = "Lambda_1(Omega) >= lambda_2(Omega)";
  for (const auto& [label, d] : corpus) {
    for (double h : grids) {
      const GridEmbedding g = rasterize(d, h);
      const double big = first_buckling(g);
      const double lambda2 = dirichlet_smallest(assemble_laplacian(g), 2).values[1];
      const double eps = 1e-6 * lambda2;
      Check c = make_check("payne/" + label + "/" + fmt_h(h), anchor, describe(d), 1e-6);
      c.quantities = {{"Lambda1", big}, {"lambda2", lambda2}, {"margin", (big - lambda2) / lambda2}};
      c.passed = big >= lambda2 - eps;
      out.push_back(std::move(c));

      if (label == "disk") {
        Check near = make_check("payne/near-equality/" + label + "/" + fmt_h(h), "Lambda_1(disk) = lambda_2(disk)",
                                describe(d), kConvergentTol);
        near.quantities = {{"Lambda1", big}, {"lambda2", lambda2}, {"rel_gap", relative(big, lambda2)}};
        near.passed = relative(big, lambda2) < kConvergentTol;
        near.note = "equality holds in the continuum only";
        out.push_back(std::move(near));
      }
      if (label == "unit-square" && h == grids.front()) {
        Check ctl = make_check("payne/control/" + label + "/" + fmt_h(h), anchor, describe(d), 1e-6);
        ctl.control = true;
        ctl.quantities = {{"Lambda1", big}, {"lambda2", lambda2}};
        ctl.passed = !(lambda2 >= big - 1e-6 * big);
        ctl.note = "reversed inequality must be rejected";
        out.push_back(std::move(ctl));
      }
    }
  }
  return out;
}

std::vector<Check> check_penalized_stationarity(const std::vector<CorpusEntry>& corpus) {
  std::vector<Check> out;
  const std::string anchor = "d/dt [t^-2 Lambda_1 + beta* t P] = 0 at t = 1";
  std::vector<double> t_grid;
  for (int i = 0; i <= 30; ++i) t_grid.push_back((10.0 + i) / 20.0);
  const double step = 0.05;

  for (const auto& [label, d] : corpus) {
    const ObjectiveRecord rec = buckling_of_domain(d, diameter(d) / 64.0, 1, false);
    const double bstar = beta_star(rec.lambda.front(), rec.perimeter, 2);
    for (double factor : {1.0, 1.2, 0.8}) {
      const auto profile = penalized_profile(rec, factor * bstar, t_grid);
      const auto best = std::min_element(profile.begin(), profile.end(),
                                         [](const auto& a, const auto& b) { return a.second < b.second; });
      const double argmin = best->first;
      const double predicted = std::cbrt(1.0 / factor);
      char name[32];
      std::snprintf(name, sizeof name, "beta=%.1fbeta*", factor);
      Check c = make_check("penalized/" + label + "/" + name, anchor, describe(d), step);
      c.quantities = {{"beta_star", bstar}, {"beta", factor * bstar}, {"argmin", argmin}, {"t_star", predicted}};
      if (factor == 1.0) {
        c.passed = argmin == 1.0;
      } else {
        const bool direction = factor > 1.0 ? argmin < 1.0 : argmin > 1.0;
        c.passed = direction && std::abs(argmin - predicted) <= step + 1e-12;
      }
      out.push_back(std::move(c));

      if (factor == 1.2 && label == corpus.front().label) {
        Check ctl = make_check("penalized/control/" + label + "/" + name, anchor, describe(d), step);
        ctl.control = true;
        ctl.quantities = {{"argmin", argmin}};
        ctl.passed = argmin != 1.0;
        ctl.note = "a detuned penalty must not be stationary at t = 1";
        out.push_back(std::move(ctl));
      }
    }
  }
  return out;
}

std::vector<Check> check_convexification(const std::vector<CorpusEntry>& fixtures) {
  std::vector<Check> out;
  const std::string anchor = "Lambda_1(hull Omega) <= Lambda_1(Omega), P(hull Omega) <= P(Omega)";
  for (const auto& [label, d] : fixtures) {
    const DomainSpec hull = convex_hull(d);
    const double h = diameter(d) / 96.0;
    const GridEmbedding g = rasterize(d, h);
    const GridEmbedding gh = rasterize(hull, h);
    const double lambda = first_buckling(g);
    const double lambda_hull = first_buckling(gh);
    const bool nested = mask_subset(g, gh);
    const double p = perimeter(d);
    const double p_hull = perimeter(hull);

    Check c = make_check("convexification/" + label + "/lambda", anchor, describe(d), kResidualTol);
    c.quantities = {{"lambda1", lambda}, {"lambda1_hull", lambda_hull}, {"masks_nested", nested ? 1.0 : 0.0}};
    c.passed = nested && lambda_hull <= lambda * (1.0 + kResidualTol);
    out.push_back(std::move(c));

    Check cp = make_check("convexification/" + label + "/perimeter", anchor, describe(d), kExactTol);
    cp.quantities = {{"perimeter", p}, {"perimeter_hull", p_hull}};
    cp.passed = p_hull <= p * (1.0 + kExactTol);
    out.push_back(std::move(cp));

    if (label == "L-shape") {
      Check strict = make_check("convexification/" + label + "/strict", anchor, describe(d), kResidualTol);
      strict.quantities = {{"lambda1", lambda}, {"lambda1_hull", lambda_hull}, {"gain", (lambda - lambda_hull) / lambda}};
      strict.passed = lambda_hull < lambda * (1.0 - kResidualTol);
      out.push_back(std::move(strict));

      Check ctl = make_check("convexification/control/" + label, anchor, describe(d), kResidualTol);
      ctl.control = true;
      ctl.quantities = {{"lambda1", lambda}, {"lambda1_hull", lambda_hull}};
      ctl.passed = !(lambda <= lambda_hull * (1.0 + kResidualTol));
      ctl.note = "reversed inequality must be rejected";
      out.push_back(std::move(ctl));
    }
  }
  return out;
}

std::vector<Check> check_connectedness(const std::vector<CorpusEntry>& finals) {
  std::vector<Check> out;
  const std::string anchor = "minimizers are connected";
  for (const auto& [label, d] : finals) {
    const int components = connected_components(rasterize(d, diameter(d) / 96.0));
    Check c = make_check("connectedness/" + label, anchor, describe(d), 0.0);
    c.quantities = {{"components", components}};
    c.passed = components == 1;
    c.note = std::holds_alternative<StarShape>(d)
                 ? "vacuous: star domains are connected by construction"
                 : "mask component count, a weaker surrogate of generalized connectedness";
    out.push_back(std::move(c));
  }
  const std::vector<DomainSpec> split{Rectangle{{0.0, 0.0}, 1.0, 1.0}, Rectangle{{2.0, 0.0}, 1.0, 1.0}};
  const int components = connected_components(rasterize(std::span<const DomainSpec>(split), 1.0 / 32.0));
  Check ctl = make_check("connectedness/control/two-squares", anchor, "two disjoint unit squares", 0.0);
  ctl.control = true;
  ctl.quantities = {{"components", components}};
  ctl.passed = components == 2;
  ctl.note = "disconnected fixture must report two components";
  out.push_back(std::move(ctl));
  return out;
}

std::vector<Check> check_dense_equivalence(const std::vector<CorpusEntry>& corpus) {
  std::vector<Check> out;
  for (const auto& [label, d] : corpus) {
    double h = diameter(d) / 20.0;
    GridEmbedding g = rasterize(d, h);
    while (g.n > 400) {
      h *= 1.1;
      g = rasterize(d, h);
    }
    const auto a = assemble_biharmonic(g);
    const auto b = assemble_laplacian(g);
    SolverOptions sparse = tight_options();
    sparse.method = SolverMethod::kSparse;
    SolverOptions dense = tight_options();
    dense.method = SolverMethod::kDense;
    const int count = std::min(3, g.n);
    const Spectrum s = generalized_smallest(a, b, count, sparse);
    const Spectrum r = generalized_smallest(a, b, count, dense);
    Check c = make_check("dense-equivalence/" + label, "sparse and dense solvers agree", describe(d), 1e-9);
    double worst = 0.0;
    for (int k = 0; k < count; ++k) {
      worst = std::max(worst, relative(s.values[static_cast<std::size_t>(k)], r.values[static_cast<std::size_t>(k)]));
      c.quantities.emplace_back("lambda" + std::to_string(k + 1), r.values[static_cast<std::size_t>(k)]);
    }
    c.quantities.emplace_back("unknowns", g.n);
    c.quantities.emplace_back("max_rel_error", worst);
    c.passed = worst <= 1e-9;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> check_geometry_bounds(const std::vector<CorpusEntry>& corpus) {
  std::vector<Check> out;
  for (const auto& [label, d] : corpus) {
    const double p = perimeter(d);
    const double diam = diameter(d);
    Check c = make_check("geometry/diameter/" + label, "diam(Omega) < P(Omega) / 2", describe(d), 0.0);
    c.quantities = {{"diameter", diam}, {"perimeter", p}};
    c.passed = diam < 0.5 * p;
    out.push_back(std::move(c));

    const double a = area(d);
    Check iso = make_check("geometry/isoperimetric/" + label, "4 pi |Omega| <= P(Omega)^2", describe(d), 1e-9);
    iso.quantities = {{"area", a}, {"perimeter", p}, {"ratio", 4.0 * kPi * a / (p * p)}};
    iso.passed = 4.0 * kPi * a <= p * p * (1.0 + 1e-9);
    out.push_back(std::move(iso));
  }
  return out;
}

std::vector<Check> check_energy_identity(const std::vector<CorpusEntry>& corpus) {
  std::vector<Check> out;
  for (const auto& [label, d] : corpus) {
    const GridEmbedding g = rasterize(d, diameter(d) / 64.0);
    const Spectrum s = buckling_spectrum(g, 1);
    const Eigen::VectorXd x = s.vectors.col(0);
    const double lap = laplacian_energy(g, x);
    const double hess = hessian_energy(g, x);
    const double grad = gradient_energy(g, x);
    Check c = make_check("energy-identity/" + label, "sum (Delta u)^2 = sum |D^2 u|^2 for compact support",
                         describe(d), 1e-10);
    c.quantities = {{"laplacian_energy", lap}, {"hessian_energy", hess}, {"rayleigh", lap / grad},
                    {"lambda1", s.values.front()}};
    c.passed = relative(hess, lap) <= 1e-10 && relative(lap / grad, s.values.front()) <= kResidualTol;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> check_disjoint_union() {
  const std::vector<DomainSpec> parts{Rectangle{{0.0, 0.0}, 1.0, 1.0}, Rectangle{{2.0, 0.0}, 0.75, 0.75}};
  const double h = 1.0 / 32.0;
  const GridEmbedding joint = rasterize(std::span<const DomainSpec>(parts), h);
  const double lu = first_buckling(joint);
  const double la = first_buckling(rasterize(parts[0], h));
  const double lb = first_buckling(rasterize(parts[1], h));
  Check c = make_check("disjoint-union/two-squares", "Lambda_1(A u B) = min(Lambda_1(A), Lambda_1(B))",
                       "unit square and 0.75 square, separated", kResidualTol);
  c.quantities = {{"lambda1_union", lu}, {"lambda1_a", la}, {"lambda1_b", lb},
                  {"components", connected_components(joint)}};
  c.passed = relative(lu, std::min(la, lb)) <= kResidualTol;
  return {c};
}

VerificationReport run_suite(const SuiteConfig& config) {
  const auto corpus = standard_corpus(config.seed);
  const auto pairs = nested_pairs(config.seed, config.nested_pairs);
  const auto fixtures = nonconvex_fixtures();

  auto optimizer_finals = [&config] {
    std::vector<CorpusEntry> finals;
    OptimizerConfig star;
    star.family = FamilyKind::kStar;
    star.family_size = 2;
    star.start = StarShape{{0.0, 0.0}, 1.0, {{0.0, 0.0}, {0.2, 0.0}}};
    star.simplex.max_evals = config.optimizer_evals;
    star.seed = config.seed;
    star.grid_h = 1.0 / 16.0;
    star.report_grid_h = 1.0 / 32.0;
    star.extrapolate = false;
    star.trace_hausdorff = false;
    finals.push_back({"optimized-star", optimize(star).final.domain});

    OptimizerConfig poly = star;
    poly.family = FamilyKind::kPolygon;
    poly.family_size = 6;
    poly.start.reset();
    finals.push_back({"optimized-hexagon", optimize(poly).final.domain});
    return finals;
  };

  std::vector<std::function<std::vector<Check>()>> groups{
      [&] { return check_scaling_law(corpus, config.t_list); },
      [&] { return check_monotonicity(pairs); },
      [&] { return check_payne(corpus, config.payne_grids); },
      [&] { return check_penalized_stationarity(corpus); },
      [&] { return check_convexification(fixtures); },
      [&] { return check_connectedness(optimizer_finals()); },
      [&] { return check_dense_equivalence(corpus); },
      [&] { return check_geometry_bounds(corpus); },
      [&] { return check_energy_identity(corpus); },
      [] { return check_disjoint_union(); },
  };
  const std::vector<std::string> group_names{"scaling",       "monotonicity",      "payne",    "penalized",
                                             "convexification", "connectedness", "dense-equivalence", "geometry",
                                             "energy-identity", "disjoint-union"};

  std::vector<std::vector<Check>> results(groups.size());
  parallel_for(groups.size(), config.threads, [&](std::size_t i) {
    try {
      results[i] = groups[i]();
    } catch (const std::exception& e) {
      Check c = make_check(group_names[i] + "/error", "check completed", "", 0.0);
      c.note = e.what();
      results[i] = {c};
    }
  });

  VerificationReport report;
  report.seed = config.seed;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(report.checks));
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return report;
}

}  // namespace buckleopt
