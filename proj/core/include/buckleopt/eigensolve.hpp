#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "buckleopt/operators.hpp"

namespace buckleopt {

// Smallest eigenpairs, ascending. Vectors are mass-orthonormal (B for the
// buckling pencil, identity for the Dirichlet problem).
struct Spectrum {
  std::vector<double> values;
  Eigen::MatrixXd vectors;         // n x count
  std::vector<double> residuals;   // ||K x - v M x|| / ||K x||
  std::vector<bool> degenerate;    // member of a cluster within 1e-6 relative
  int iterations = 0;
  std::string method;              // "dense" or "subspace"
};

enum class SolverMethod {
  kAuto,    // dense when n <= dense_threshold, subspace iteration otherwise
  kSparse,  // always subspace iteration
  kDense,   // always the dense reference
};

struct SolverOptions {
  // Relative residual |A x - L B x| / |A x|, raised to the rounding floor of
  // its own evaluation on fine grids.
  double tol = 1e-8;
  int max_iterations = 2000;
  std::uint64_t seed = 1;
  SolverMethod method = SolverMethod::kAuto;
  int dense_threshold = 400;
  int guard_vectors = 4;  // block size is count + guard_vectors
  // Leading columns of the starting block (e.g. eigenvectors of a nearby
  // problem mapped onto this grid); the remaining columns come from the
  // seeded stream. Rows must equal the operator size.
  Eigen::MatrixXd initial_block;
};

// Relative gap below which neighboring eigenvalues are flagged degenerate.
inline constexpr double kDegenerateGap = 1e-6;

// A x = L B x for the `count` smallest L. A and B symmetric positive definite.
// Throws InvalidArgument on size mismatch or count > n, SolverFailure when the
// iteration does not reach the tolerance.
Spectrum generalized_smallest(const SymmetricSparseOperator& a, const SymmetricSparseOperator& b, int count,
                              const SolverOptions& opts = {});

// B x = l x for the `count` smallest l.
Spectrum dirichlet_smallest(const SymmetricSparseOperator& b, int count, const SolverOptions& opts = {});

// Rayleigh quotient x^T A x / x^T B x.
double rayleigh_quotient(const SymmetricSparseOperator& a, const SymmetricSparseOperator& b,
                         const Eigen::VectorXd& x);

}  // namespace buckleopt
