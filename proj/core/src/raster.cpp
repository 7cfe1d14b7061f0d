#include "buckleopt/raster.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "buckleopt/errors.hpp"
#include "json_support.hpp"

namespace buckleopt {

namespace {

// Marks grid points strictly inside a polygon, one scanline per row.
void fill_polygon(const Polygon& poly, GridEmbedding& g, double eps) {
  const auto& v = poly.vertices;
  const std::size_t m = v.size();
  std::vector<double> xs;
  for (int j = 0; j < g.ny; ++j) {
    const double y = static_cast<double>(g.j0 + j) * g.h;
    xs.clear();
    for (std::size_t e = 0; e < m; ++e) {
      const Vec2 a = v[e];
      const Vec2 b = v[(e + 1) % m];
      if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      const double lo = xs[k] + eps;
      const double hi = xs[k + 1] - eps;
      const auto first = static_cast<std::int64_t>(std::floor(lo / g.h)) - g.i0;
      for (std::int64_t i = std::max<std::int64_t>(first, 0); i < g.nx; ++i) {
        const double x = static_cast<double>(g.i0 + i) * g.h;
        if (x >= hi) break;
        if (x > lo) g.inside[static_cast<std::size_t>(g.cell(static_cast<int>(i), j))] = 1;
      }
    }
    // Points lying on horizontal edges are boundary points.
    for (std::size_t e = 0; e < m; ++e) {
      const Vec2 a = v[e];
      const Vec2 b = v[(e + 1) % m];
      if (std::abs(a.y - y) > eps || std::abs(b.y - y) > eps) continue;
      const double lo = std::min(a.x, b.x) - eps;
      const double hi = std::max(a.x, b.x) + eps;
      for (int i = 0; i < g.nx; ++i) {
        const double x = static_cast<double>(g.i0 + i) * g.h;
        if (x >= lo && x <= hi) g.inside[static_cast<std::size_t>(g.cell(i, j))] = 0;
      }
    }
  }
}

void fill_generic(const DomainSpec& d, GridEmbedding& g, double eps) {
  const BoundingBox box = bounding_box(d);
  for (int j = 0; j < g.ny; ++j) {
    const double y = static_cast<double>(g.j0 + j) * g.h;
    if (y <= box.lo.y || y >= box.hi.y) continue;
    for (int i = 0; i < g.nx; ++i) {
      const double x = static_cast<double>(g.i0 + i) * g.h;
      if (x <= box.lo.x || x >= box.hi.x) continue;
      if (contains_strict(d, {x, y}, eps)) g.inside[static_cast<std::size_t>(g.cell(i, j))] = 1;
    }
  }
}

void number_unknowns(GridEmbedding& g) {
  g.index.assign(g.inside.size(), -1);
  int k = 0;
  for (std::size_t c = 0; c < g.inside.size(); ++c) {
    if (g.inside[c] != 0) g.index[c] = k++;
  }
  g.n = k;
}

}  // namespace

GridEmbedding GridEmbedding::scaled(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("grid scale factor must be positive");
  GridEmbedding out = *this;
  out.h = t * h;
  return out;
}

GridEmbedding rasterize(std::span<const DomainSpec> domains, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("grid spacing must be positive and finite");
  if (domains.empty()) throw InvalidArgument("rasterize needs at least one domain");
  BoundingBox box{};
  for (std::size_t k = 0; k < domains.size(); ++k) {
    validate(domains[k]);
    const BoundingBox b = bounding_box(domains[k]);
    if (k == 0) {
      box = b;
    } else {
      box.lo = {std::min(box.lo.x, b.lo.x), std::min(box.lo.y, b.lo.y)};
      box.hi = {std::max(box.hi.x, b.hi.x), std::max(box.hi.y, b.hi.y)};
    }
  }
  GridEmbedding g;
  g.h = h;
  g.i0 = static_cast<std::int64_t>(std::floor(box.lo.x / h)) - 2;
  g.j0 = static_cast<std::int64_t>(std::floor(box.lo.y / h)) - 2;
  const auto i1 = static_cast<std::int64_t>(std::ceil(box.hi.x / h)) + 2;
  const auto j1 = static_cast<std::int64_t>(std::ceil(box.hi.y / h)) + 2;
  const std::int64_t nx = i1 - g.i0 + 1;
  const std::int64_t ny = j1 - g.j0 + 1;
  if (nx * ny > (std::int64_t{1} << 31)) throw InvalidArgument("grid too fine for the domain extent");
  g.nx = static_cast<int>(nx);
  g.ny = static_cast<int>(ny);
  g.inside.assign(static_cast<std::size_t>(nx * ny), 0);

  const double eps = 1e-12 * std::max(1.0, norm(box.hi - box.lo));
  for (const auto& d : domains) {
    GridEmbedding part = g;
    std::fill(part.inside.begin(), part.inside.end(), 0);
    if (const auto* p = std::get_if<Polygon>(&d)) {
      fill_polygon(*p, part, eps);
    } else {
      fill_generic(d, part, eps);
    }
    for (std::size_t c = 0; c < g.inside.size(); ++c) g.inside[c] |= part.inside[c];
  }
  number_unknowns(g);
  if (g.n == 0) throw ResolutionTooCoarse("no grid point lies strictly inside the domain at this spacing");
  return g;
}

GridEmbedding rasterize(const DomainSpec& d, double h) { return rasterize(std::span<const DomainSpec>(&d, 1), h); }

int connected_components(const GridEmbedding& g) {
  std::vector<std::uint8_t> seen(g.inside.size(), 0);
  int count = 0;
  std::deque<std::pair<int, int>> queue;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const auto c = static_cast<std::size_t>(g.cell(i, j));
      if (!g.inside[c] || seen[c]) continue;
      ++count;
      seen[c] = 1;
      queue.emplace_back(i, j);
      while (!queue.empty()) {
        const auto [ci, cj] = queue.front();
        queue.pop_front();
        constexpr int di[4] = {1, -1, 0, 0};
        constexpr int dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int ni = ci + di[k];
          const int nj = cj + dj[k];
          if (!g.is_inside(ni, nj)) continue;
          const auto nc = static_cast<std::size_t>(g.cell(ni, nj));
          if (seen[nc]) continue;
          seen[nc] = 1;
          queue.emplace_back(ni, nj);
        }
      }
    }
  }
  return count;
}

bool mask_subset(const GridEmbedding& a, const GridEmbedding& b) {
  if (a.h != b.h) throw InvalidArgument("mask_subset needs a common lattice spacing");
  for (int j = 0; j < a.ny; ++j) {
    for (int i = 0; i < a.nx; ++i) {
      if (!a.is_inside(i, j)) continue;
      const auto bi = static_cast<int>(a.i0 + i - b.i0);
      const auto bj = static_cast<int>(a.j0 + j - b.j0);
      if (!b.is_inside(bi, bj)) return false;
    }
  }
  return true;
}

std::string mask_to_csv(const GridEmbedding& g) {
  std::ostringstream os;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i > 0) os << ',';
      os << (g.is_inside(i, j) ? 1 : 0);
    }
    os << '\n';
  }
  return os.str();
}

std::string mask_to_pgm(const GridEmbedding& g) {
  std::ostringstream os;
  os << "P2\n" << g.nx << ' ' << g.ny << "\n1\n";
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i > 0) os << ' ';
      os << (g.is_inside(i, j) ? 1 : 0);
    }
    os << '\n';
  }
  return os.str();
}

void write_mask(const std::filesystem::path& path, const GridEmbedding& g) {
  detail::write_text_file(path, path.extension() == ".pgm" ? mask_to_pgm(g) : mask_to_csv(g));
}

}  // namespace buckleopt
