#include "buckleopt/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/OrderingMethods>
#include <Eigen/SparseCholesky>

#include "buckleopt/errors.hpp"

namespace buckleopt {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kRefineBelow = 1e-5;
// Multiple of the rounding floor of the residual evaluation that still counts as converged.
constexpr double kAttainableFactor = 32.0;

// Stiffness K and mass M of the pencil K x = v M x. A null mass means identity.
struct Pencil {
  const SymmetricSparseOperator* stiffness = nullptr;
  const SymmetricSparseOperator* mass = nullptr;
  int n = 0;

  MatrixXd apply_stiffness(const MatrixXd& x, const SparseMatrix& k_full) const {
    if (stiffness->gram_factor) {
      const MatrixXd fx = (*stiffness->gram_factor) * x;
      return stiffness->gram_factor->transpose() * fx;
    }
    return k_full * x;
  }
  MatrixXd apply_mass(const MatrixXd& x, const SparseMatrix& m_full) const {
    return mass ? MatrixXd(m_full * x) : x;
  }
  MatrixXd stiffness_gram(const MatrixXd& y, const SparseMatrix& k_full) const {
    if (stiffness->gram_factor) {
      const MatrixXd fy = (*stiffness->gram_factor) * y;
      return fy.transpose() * fy;
    }
    return y.transpose() * (k_full * y);
  }
};

MatrixXd starting_block(int n, int p, std::uint64_t seed) {
  std::minstd_rand lcg(static_cast<std::minstd_rand::result_type>(seed % 2147483646ULL + 1ULL));
  MatrixXd x(n, p);
  const double span = static_cast<double>(std::minstd_rand::max() - std::minstd_rand::min());
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < n; ++r) {
      x(r, c) = 2.0 * static_cast<double>(lcg() - std::minstd_rand::min()) / span - 1.0;
    }
  }
  return x;
}

void normalize_signs(MatrixXd& v) {
  for (int c = 0; c < v.cols(); ++c) {
    Eigen::Index idx = 0;
    v.col(c).cwiseAbs().maxCoeff(&idx);
    if (v(idx, c) < 0.0) v.col(c) *= -1.0;
  }
}

std::vector<bool> flag_clusters(const std::vector<double>& values) {
  std::vector<bool> flags(values.size(), false);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (std::abs(values[i + 1] - values[i]) <= kDegenerateGap * std::abs(values[i])) {
      flags[i] = true;
      flags[i + 1] = true;
    }
  }
  return flags;
}

std::vector<double> relative_residuals(const Pencil& pencil, const SparseMatrix& k_full, const SparseMatrix& m_full,
                                       const MatrixXd& x, const VectorXd& values, int count) {
  const MatrixXd kx = pencil.apply_stiffness(x.leftCols(count), k_full);
  const MatrixXd mx = pencil.apply_mass(x.leftCols(count), m_full);
  std::vector<double> res(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double denom = kx.col(i).norm();
    res[static_cast<std::size_t>(i)] = (kx.col(i) - values[i] * mx.col(i)).norm() / denom;
  }
  return res;
}

double max_abs_column_sum(const SparseMatrix& m) {
  double out = 0.0;
  for (int c = 0; c < m.outerSize(); ++c) {
    double sum = 0.0;
    for (SparseMatrix::InnerIterator it(m, c); it; ++it) sum += std::abs(it.value());
    out = std::max(out, sum);
  }
  return out;
}

// eps (|K| + |v| |M|) |x| / |K x|: the residual level that rounding alone produces.
std::vector<double> residual_floor(const Pencil& pencil, const SparseMatrix& k_full, double k_norm, double m_norm,
                                   const MatrixXd& x, const VectorXd& values, int count) {
  const MatrixXd kx = pencil.apply_stiffness(x.leftCols(count), k_full);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = std::numeric_limits<double>::epsilon() *
                                       (k_norm + std::abs(values[i]) * m_norm) * x.col(i).norm() / kx.col(i).norm();
  }
  return out;
}

Spectrum dense_solve(const Pencil& pencil, const SparseMatrix& k_full, const SparseMatrix& m_full, int count) {
  const MatrixXd k = MatrixXd(k_full);
  Spectrum out;
  out.method = "dense";
  VectorXd values;
  MatrixXd vectors;
  if (pencil.mass) {
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(k, MatrixXd(m_full), Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (es.info() != Eigen::Success) throw SolverFailure("dense generalized eigensolver failed", {});
    values = es.eigenvalues().head(count);
    vectors = es.eigenvectors().leftCols(count);
  } else {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(k);
    if (es.info() != Eigen::Success) throw SolverFailure("dense eigensolver failed", {});
    values = es.eigenvalues().head(count);
    vectors = es.eigenvectors().leftCols(count);
  }
  normalize_signs(vectors);
  out.values.assign(values.data(), values.data() + count);
  out.residuals = relative_residuals(pencil, k_full, m_full, vectors, values, count);
  out.vectors = std::move(vectors);
  out.degenerate = flag_clusters(out.values);
  out.iterations = 1;
  return out;
}

// Inverse subspace iteration: Y = K^{-1} M X, Rayleigh-Ritz on span(Y),
// repeated until the leading `count` Ritz pairs meet the residual tolerance.
Spectrum subspace_solve(const Pencil& pencil, const SparseMatrix& k_full, const SparseMatrix& m_full, int count,
                        const SolverOptions& opts) {
  const int n = pencil.n;
  const int p = std::min(n, count + std::max(0, opts.guard_vectors));

  Eigen::SimplicialLLT<SparseMatrix, Eigen::Lower, Eigen::AMDOrdering<int>> chol;
  chol.compute(k_full);
  if (chol.info() != Eigen::Success) {
    throw SolverFailure("sparse Cholesky factorization failed (operator not positive definite)", {});
  }

  const double k_norm = max_abs_column_sum(k_full);
  const double m_norm = pencil.mass ? max_abs_column_sum(m_full) : 1.0;

  MatrixXd x = starting_block(n, p, opts.seed);
  if (opts.initial_block.size() > 0) {
    if (opts.initial_block.rows() != n) throw InvalidArgument("initial block has the wrong number of rows");
    const auto q = std::min<Eigen::Index>(opts.initial_block.cols(), p);
    x.leftCols(q) = opts.initial_block.leftCols(q);
  }
  std::vector<double> best(static_cast<std::size_t>(count), std::numeric_limits<double>::infinity());
  double last_residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const MatrixXd rhs = pencil.apply_mass(x, m_full);
    MatrixXd y = chol.solve(rhs);
    // Near convergence the rounding noise of the factorization limits the
    // attainable residual; one refinement step against the accurately
    // evaluated stiffness product removes it.
    if (last_residual < kRefineBelow) y += chol.solve(MatrixXd(rhs - pencil.apply_stiffness(y, k_full)));

    MatrixXd kr = pencil.stiffness_gram(y, k_full);
    MatrixXd mr = y.transpose() * pencil.apply_mass(y, m_full);
    kr = 0.5 * (kr + kr.transpose()).eval();
    mr = 0.5 * (mr + mr.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> rr(kr, mr, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (rr.info() != Eigen::Success) {
      throw SolverFailure("Rayleigh-Ritz projection lost rank at iteration " + std::to_string(it), best);
    }
    x = y * rr.eigenvectors();
    const VectorXd theta = rr.eigenvalues();
    const auto res = relative_residuals(pencil, k_full, m_full, x, theta, count);
    last_residual = std::ranges::max(res);
    if (last_residual < std::ranges::max(best)) best = res;
    const auto floor = residual_floor(pencil, k_full, k_norm, m_norm, x, theta, count);
    bool converged = true;
    for (int i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      converged = converged && res[k] < std::max(opts.tol, kAttainableFactor * floor[k]);
    }
    if (converged) {
      Spectrum out;
      out.method = "subspace";
      out.iterations = it;
      out.values.assign(theta.data(), theta.data() + count);
      out.vectors = x.leftCols(count);
      normalize_signs(out.vectors);
      out.residuals = res;
      out.degenerate = flag_clusters(out.values);
      return out;
    }
  }
  throw SolverFailure("subspace iteration did not converge in " + std::to_string(opts.max_iterations) +
                          " iterations",
                      best);
}

Spectrum solve(const Pencil& pencil, int count, const SolverOptions& opts) {
  if (count < 1) throw InvalidArgument("eigenvalue count must be at least 1");
  if (count > pencil.n) {
    throw InvalidArgument("requested " + std::to_string(count) + " eigenvalues of an operator of size " +
                          std::to_string(pencil.n));
  }
  if (!(opts.tol > 0.0)) throw InvalidArgument("solver tolerance must be positive");
  const SparseMatrix k_full = pencil.stiffness->to_eigen();
  const SparseMatrix m_full = pencil.mass ? pencil.mass->to_eigen() : SparseMatrix();
  const bool dense = opts.method == SolverMethod::kDense ||
                     (opts.method == SolverMethod::kAuto && pencil.n <= opts.dense_threshold);
  Spectrum out = dense ? dense_solve(pencil, k_full, m_full, count) : subspace_solve(pencil, k_full, m_full, count, opts);
  for (double v : out.values) {
    if (!(v > 0.0)) throw SolverFailure("non-positive eigenvalue: operator is not positive definite", out.residuals);
  }
  return out;
}

}  // namespace

Spectrum generalized_smallest(const SymmetricSparseOperator& a, const SymmetricSparseOperator& b, int count,
                              const SolverOptions& opts) {
  if (a.n != b.n) throw InvalidArgument("operators have different dimensions");
  return solve(Pencil{&a, &b, a.n}, count, opts);
}

Spectrum dirichlet_smallest(const SymmetricSparseOperator& b, int count, const SolverOptions& opts) {
  return solve(Pencil{&b, nullptr, b.n}, count, opts);
}

double rayleigh_quotient(const SymmetricSparseOperator& a, const SymmetricSparseOperator& b,
                         const Eigen::VectorXd& x) {
  return a.quadratic_form(x) / b.quadratic_form(x);
}

}  // namespace buckleopt
