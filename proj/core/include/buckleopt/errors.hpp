#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace buckleopt {

// Malformed domain description (too few vertices, self-intersection,
// non-positive radius, ...).
class InvalidDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Geometrically valid input whose derived set has zero area (e.g. the hull
// of collinear points).
class DegenerateDomain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by rasterize() when no grid point falls strictly inside the domain.
class ResolutionTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON/CSV input or a document that does not follow its schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, std::vector<double> best_residuals)
      : std::runtime_error(what), best_residuals_(std::move(best_residuals)) {}

  const std::vector<double>& best_residuals() const noexcept { return best_residuals_; }

 private:
  std::vector<double> best_residuals_;
};

}  // namespace buckleopt
