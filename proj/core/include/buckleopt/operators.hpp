#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "buckleopt/raster.hpp"

namespace buckleopt {

using SparseMatrix = Eigen::SparseMatrix<double>;

// Symmetric matrix stored once per pair (row <= col), entries sorted by
// (row, col). Values carry their physical units (length^-2 for the
// Laplacian, length^-4 for the biharmonic operator).
struct SymmetricSparseOperator {
  struct Entry {
    int row = 0;
    int col = 0;
    double value = 0.0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  int n = 0;
  std::vector<Entry> entries;
  // Optional rectangular F with this operator equal to F^T F. When present the
  // eigensolver evaluates products through F, which avoids the cancellation of
  // the assembled 13-point stencil.
  std::optional<SparseMatrix> gram_factor;

  SparseMatrix to_eigen() const;  // full symmetric matrix
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  double quadratic_form(const Eigen::VectorXd& x) const;
  double diagonal(int i) const;
  std::size_t nnz() const { return entries.size(); }
};

// 5-point -Laplacian on the interior unknowns; exterior values are zero.
SymmetricSparseOperator assemble_laplacian(const GridEmbedding& g);

// The same 5-point operator evaluated on every lattice point within one step
// of the mask (rows: interior points first in unknown order, then the
// exterior ring row-major), columns the interior unknowns.
SparseMatrix extended_laplacian(const GridEmbedding& g);

// 13-point biharmonic stencil with exterior couplings dropped; equals
// extended_laplacian(g)^T extended_laplacian(g). The result carries that
// factor in gram_factor.
SymmetricSparseOperator assemble_biharmonic(const GridEmbedding& g);

// The product route F^T F, independent of the stencil table.
SymmetricSparseOperator assemble_biharmonic_product(const GridEmbedding& g);

// Largest entrywise discrepancy between the stencil and product routes,
// relative to the largest entry.
double biharmonic_self_check(const GridEmbedding& g);

// Discrete energies of the zero-extended grid function x, lattice sums times h^2:
//   laplacian_energy = sum (Delta_h x)^2
//   hessian_energy   = sum (D_xx x)^2 + 2 (D_x^+ D_y^+ x)^2 + (D_yy x)^2
// They agree exactly in exact arithmetic (summation by parts).
double laplacian_energy(const GridEmbedding& g, const Eigen::VectorXd& x);
double hessian_energy(const GridEmbedding& g, const Eigen::VectorXd& x);
// sum |grad_h x|^2 h^2 with forward differences; equals h^2 x^T B x.
double gradient_energy(const GridEmbedding& g, const Eigen::VectorXd& x);

// "n nnz" header, then "row col value" with 1-based indices.
std::string to_matrix_market(const SymmetricSparseOperator& op);
void write_matrix_market(const std::filesystem::path& path, const SymmetricSparseOperator& op);

}  // namespace buckleopt
