#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "buckleopt/geometry.hpp"

namespace buckleopt {

// Uniform grid on the global lattice {(i h, j h)}. Cell (i, j) of the local
// window sits at lattice index (i0 + i, j0 + j). Unknowns are the grid points
// strictly inside the domain, numbered row-major (j outer, i inner); every
// other lattice value is identically zero.
struct GridEmbedding {
  double h = 0.0;
  std::int64_t i0 = 0;
  std::int64_t j0 = 0;
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> inside;  // nx * ny
  std::vector<int> index;            // nx * ny, -1 where outside
  int n = 0;

  int cell(int i, int j) const { return j * nx + i; }
  bool is_inside(int i, int j) const {
    return i >= 0 && j >= 0 && i < nx && j < ny && inside[static_cast<std::size_t>(cell(i, j))] != 0;
  }
  int unknown(int i, int j) const {
    return (i >= 0 && j >= 0 && i < nx && j < ny) ? index[static_cast<std::size_t>(cell(i, j))] : -1;
  }
  Vec2 origin() const { return {static_cast<double>(i0) * h, static_cast<double>(j0) * h}; }
  Vec2 point(int i, int j) const {
    return {static_cast<double>(i0 + i) * h, static_cast<double>(j0 + j) * h};
  }

  // Same mask with spacing t*h: the exact grid image of the dilated domain.
  GridEmbedding scaled(double t) const;
};

// Strict interior test at lattice points of spacing h; the window is the
// bounding box padded by two cells. Throws ResolutionTooCoarse when no point
// is inside, InvalidArgument for h <= 0.
GridEmbedding rasterize(const DomainSpec& d, double h);
// Union of several domains on one lattice window.
GridEmbedding rasterize(std::span<const DomainSpec> domains, double h);

// 4-connected components of the inside mask.
int connected_components(const GridEmbedding& g);

// Pointwise mask inclusion a ⊆ b; both must share the spacing h.
bool mask_subset(const GridEmbedding& a, const GridEmbedding& b);

// Debug dumps, row-major with row 0 at the bottom of the window.
std::string mask_to_csv(const GridEmbedding& g);
std::string mask_to_pgm(const GridEmbedding& g);
void write_mask(const std::filesystem::path& path, const GridEmbedding& g);

}  // namespace buckleopt
