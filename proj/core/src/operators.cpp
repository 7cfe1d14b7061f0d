#include "buckleopt/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "buckleopt/errors.hpp"
#include "json_support.hpp"

namespace buckleopt {

namespace {

using Triplet = Eigen::Triplet<double>;

struct StencilTap {
  int di;
  int dj;
  double weight;
};

// Delta^2 on the lattice, in units of h^-4.
constexpr StencilTap kBiharmonic[] = {
    {0, 0, 20.0},
    {1, 0, -8.0}, {-1, 0, -8.0}, {0, 1, -8.0}, {0, -1, -8.0},
    {1, 1, 2.0},  {1, -1, 2.0},  {-1, 1, 2.0}, {-1, -1, 2.0},
    {2, 0, 1.0},  {-2, 0, 1.0},  {0, 2, 1.0},  {0, -2, 1.0},
};

SymmetricSparseOperator from_stencil(const GridEmbedding& g, std::span<const StencilTap> taps, double scale) {
  SymmetricSparseOperator op;
  op.n = g.n;
  op.entries.reserve(static_cast<std::size_t>(g.n) * (taps.size() / 2 + 1));
  std::vector<SymmetricSparseOperator::Entry> row;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const int r = g.unknown(i, j);
      if (r < 0) continue;
      row.clear();
      for (const auto& t : taps) {
        const int c = g.unknown(i + t.di, j + t.dj);
        if (c >= r) row.push_back({r, c, t.weight * scale});
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
      op.entries.insert(op.entries.end(), row.begin(), row.end());
    }
  }
  return op;
}

SymmetricSparseOperator from_eigen_upper(const SparseMatrix& m) {
  SymmetricSparseOperator op;
  op.n = static_cast<int>(m.rows());
  const Eigen::SparseMatrix<double, Eigen::RowMajor> rm = m;
  for (int r = 0; r < rm.outerSize(); ++r) {
    for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(rm, r); it; ++it) {
      if (it.col() >= r) op.entries.push_back({r, static_cast<int>(it.col()), it.value()});
    }
  }
  return op;
}

// Lattice value of the zero-extended grid function.
double lattice_value(const GridEmbedding& g, const Eigen::VectorXd& x, int i, int j) {
  const int k = g.unknown(i, j);
  return k < 0 ? 0.0 : x[k];
}

void require_size(const GridEmbedding& g, const Eigen::VectorXd& x) {
  if (x.size() != g.n) throw InvalidArgument("grid function size does not match the embedding");
}

}  // namespace

SparseMatrix SymmetricSparseOperator::to_eigen() const {
  std::vector<Triplet> t;
  t.reserve(2 * entries.size());
  for (const auto& e : entries) {
    t.emplace_back(e.row, e.col, e.value);
    if (e.row != e.col) t.emplace_back(e.col, e.row, e.value);
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Eigen::VectorXd SymmetricSparseOperator::apply(const Eigen::VectorXd& x) const {
  if (gram_factor) {
    const Eigen::VectorXd y = (*gram_factor) * x;
    return gram_factor->transpose() * y;
  }
  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (const auto& e : entries) {
    y[e.row] += e.value * x[e.col];
    if (e.row != e.col) y[e.col] += e.value * x[e.row];
  }
  return y;
}

double SymmetricSparseOperator::quadratic_form(const Eigen::VectorXd& x) const {
  if (gram_factor) return ((*gram_factor) * x).squaredNorm();
  return x.dot(apply(x));
}

double SymmetricSparseOperator::diagonal(int i) const {
  for (const auto& e : entries) {
    if (e.row == i && e.col == i) return e.value;
  }
  return 0.0;
}

SymmetricSparseOperator assemble_laplacian(const GridEmbedding& g) {
  constexpr StencilTap taps[] = {{0, 0, 4.0}, {1, 0, -1.0}, {-1, 0, -1.0}, {0, 1, -1.0}, {0, -1, -1.0}};
  return from_stencil(g, taps, 1.0 / (g.h * g.h));
}

SparseMatrix extended_laplacian(const GridEmbedding& g) {
  // Row numbering: interior unknowns keep their index; ring points follow.
  std::vector<int> ring(g.inside.size(), -1);
  int rows = g.n;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (g.is_inside(i, j)) continue;
      const bool touches = g.is_inside(i + 1, j) || g.is_inside(i - 1, j) || g.is_inside(i, j + 1) ||
                           g.is_inside(i, j - 1);
      if (touches) ring[static_cast<std::size_t>(g.cell(i, j))] = rows++;
    }
  }
  const double s = 1.0 / (g.h * g.h);
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(5 * g.n));
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const int k = g.unknown(i, j);
      if (k < 0) continue;
      // Column k of the lattice -Laplacian: +4 at the point, -1 at neighbors.
      t.emplace_back(k, k, 4.0 * s);
      constexpr int di[4] = {1, -1, 0, 0};
      constexpr int dj[4] = {0, 0, 1, -1};
      for (int q = 0; q < 4; ++q) {
        const int ni = i + di[q];
        const int nj = j + dj[q];
        const int nk = g.unknown(ni, nj);
        const int row = nk >= 0 ? nk : ring[static_cast<std::size_t>(g.cell(ni, nj))];
        t.emplace_back(row, k, -s);
      }
    }
  }
  SparseMatrix f(rows, g.n);
  f.setFromTriplets(t.begin(), t.end());
  f.makeCompressed();
  return f;
}

SymmetricSparseOperator assemble_biharmonic(const GridEmbedding& g) {
  const double h2 = g.h * g.h;
  SymmetricSparseOperator op = from_stencil(g, kBiharmonic, 1.0 / (h2 * h2));
  op.gram_factor = extended_laplacian(g);
  return op;
}

SymmetricSparseOperator assemble_biharmonic_product(const GridEmbedding& g) {
  const SparseMatrix f = extended_laplacian(g);
  const SparseMatrix a = SparseMatrix(f.transpose()) * f;
  SymmetricSparseOperator op = from_eigen_upper(a.pruned());
  op.gram_factor = f;
  return op;
}

double biharmonic_self_check(const GridEmbedding& g) {
  const auto stencil = assemble_biharmonic(g);
  const auto product = assemble_biharmonic_product(g);
  std::map<std::pair<int, int>, double> diff;
  double scale = 0.0;
  for (const auto& e : stencil.entries) {
    diff[{e.row, e.col}] += e.value;
    scale = std::max(scale, std::abs(e.value));
  }
  for (const auto& e : product.entries) diff[{e.row, e.col}] -= e.value;
  double worst = 0.0;
  for (const auto& [key, v] : diff) worst = std::max(worst, std::abs(v));
  return scale > 0.0 ? worst / scale : worst;
}

double laplacian_energy(const GridEmbedding& g, const Eigen::VectorXd& x) {
  require_size(g, x);
  const double h2 = g.h * g.h;
  double sum = 0.0;
  for (int j = -1; j <= g.ny; ++j) {
    for (int i = -1; i <= g.nx; ++i) {
      const double c = lattice_value(g, x, i, j);
      const double lap = (lattice_value(g, x, i + 1, j) + lattice_value(g, x, i - 1, j) +
                          lattice_value(g, x, i, j + 1) + lattice_value(g, x, i, j - 1) - 4.0 * c) /
                         h2;
      sum += lap * lap;
    }
  }
  return sum * h2;
}

double hessian_energy(const GridEmbedding& g, const Eigen::VectorXd& x) {
  require_size(g, x);
  const double h2 = g.h * g.h;
  double sum = 0.0;
  for (int j = -1; j <= g.ny; ++j) {
    for (int i = -1; i <= g.nx; ++i) {
      const double c = lattice_value(g, x, i, j);
      const double dxx = (lattice_value(g, x, i + 1, j) - 2.0 * c + lattice_value(g, x, i - 1, j)) / h2;
      const double dyy = (lattice_value(g, x, i, j + 1) - 2.0 * c + lattice_value(g, x, i, j - 1)) / h2;
      const double dxy = (lattice_value(g, x, i + 1, j + 1) - lattice_value(g, x, i + 1, j) -
                          lattice_value(g, x, i, j + 1) + c) /
                         h2;
      sum += dxx * dxx + 2.0 * dxy * dxy + dyy * dyy;
    }
  }
  return sum * h2;
}

double gradient_energy(const GridEmbedding& g, const Eigen::VectorXd& x) {
  require_size(g, x);
  double sum = 0.0;
  for (int j = -1; j <= g.ny; ++j) {
    for (int i = -1; i <= g.nx; ++i) {
      const double c = lattice_value(g, x, i, j);
      const double dx = (lattice_value(g, x, i + 1, j) - c) / g.h;
      const double dy = (lattice_value(g, x, i, j + 1) - c) / g.h;
      sum += dx * dx + dy * dy;
    }
  }
  return sum * g.h * g.h;
}

std::string to_matrix_market(const SymmetricSparseOperator& op) {
  std::string out = std::to_string(op.n) + " " + std::to_string(op.entries.size()) + "\n";
  char buf[96];
  for (const auto& e : op.entries) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.row + 1, e.col + 1, e.value);
    out += buf;
  }
  return out;
}

void write_matrix_market(const std::filesystem::path& path, const SymmetricSparseOperator& op) {
  detail::write_text_file(path, to_matrix_market(op));
}

}  // namespace buckleopt
