#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "buckleopt/geometry.hpp"

namespace buckleopt {

struct Check {
  std::string name;
  std::string anchor;  // the statement under test
  std::string domain;
  std::vector<std::pair<std::string, double>> quantities;
  bool passed = false;
  double tolerance = 0.0;
  // Negative control: passed means the reversed statement was rejected.
  bool control = false;
  std::string note;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<Check> checks;  // ordered by name

  int passed() const;
  int failed() const;          // non-control failures
  int controls() const;
  int controls_failed() const;
  bool ok() const { return failed() == 0; }

  std::string to_json() const;
  std::string to_table() const;
};

struct NestedPair {
  DomainSpec inner;
  DomainSpec outer;
  std::string label;
};

struct CorpusEntry {
  std::string label;
  DomainSpec domain;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::vector<double> t_list{0.5, 2.0, 3.0};
  std::vector<double> payne_grids{1.0 / 64.0, 1.0 / 128.0};
  int nested_pairs = 20;
  int optimizer_evals = 40;
  int threads = 1;
};

// Disk, unit square, 2x1 rectangle, regular pentagon, L-shape and three
// seeded random stars.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed);
std::vector<NestedPair> nested_pairs(std::uint64_t seed, int count);
// L-shape, sampled five-petal star, T-shape.
std::vector<CorpusEntry> nonconvex_fixtures();

// Uniform in [0, 1) from the top 53 bits of a seeded 64-bit stream.
double seeded_uniform(std::uint64_t seed, std::uint64_t index);

std::vector<Check> check_scaling_law(const std::vector<CorpusEntry>& corpus, const std::vector<double>& t_list);
std::vector<Check> check_monotonicity(const std::vector<NestedPair>& pairs);
std::vector<Check> check_payne(const std::vector<CorpusEntry>& corpus, const std::vector<double>& grids);
std::vector<Check> check_penalized_stationarity(const std::vector<CorpusEntry>& corpus);
std::vector<Check> check_convexification(const std::vector<CorpusEntry>& fixtures);
std::vector<Check> check_connectedness(const std::vector<CorpusEntry>& finals);
std::vector<Check> check_dense_equivalence(const std::vector<CorpusEntry>& corpus);
std::vector<Check> check_geometry_bounds(const std::vector<CorpusEntry>& corpus);
std::vector<Check> check_energy_identity(const std::vector<CorpusEntry>& corpus);
std::vector<Check> check_disjoint_union();

VerificationReport run_suite(const SuiteConfig& config);

}  // namespace buckleopt
