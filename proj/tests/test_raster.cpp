#include <doctest.h>

#include <algorithm>
#include <array>
#include <string>
#include <set>

#include "buckleopt/errors.hpp"
#include "buckleopt/raster.hpp"
#include "oracles.hpp"

using namespace buckleopt;

namespace {

std::set<std::pair<long, long>> lattice_points(const GridEmbedding& g) {
  std::set<std::pair<long, long>> out;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (g.is_inside(i, j)) out.insert({static_cast<long>(g.i0 + i), static_cast<long>(g.j0 + j)});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("raster") {
  TEST_CASE("unit square at coarse spacings") {
    const Rectangle square{{0, 0}, 1, 1};
    const GridEmbedding g = rasterize(square, 0.25);
    CHECK(g.n == 9);
    std::set<std::pair<long, long>> expected;
    for (long i = 1; i <= 3; ++i) {
      for (long j = 1; j <= 3; ++j) expected.insert({i, j});
    }
    CHECK(lattice_points(g) == expected);
    CHECK(rasterize(square, 0.5).n == 1);
  }

  TEST_CASE("unit disk at h = 0.5 matches brute-force containment") {
    const GridEmbedding g = rasterize(Disk{{0, 0}, 1}, 0.5);
    std::set<std::pair<long, long>> expected;
    for (long i = -4; i <= 4; ++i) {
      for (long j = -4; j <= 4; ++j) {
        const double x = 0.5 * i;
        const double y = 0.5 * j;
        if (x * x + y * y < 1.0) expected.insert({i, j});
      }
    }
    CHECK(expected.size() == 9);
    CHECK(lattice_points(g) == expected);
  }

  TEST_CASE("index is a row-major bijection with a two-cell margin") {
    const GridEmbedding g = rasterize(StarShape{{0.1, 0.2}, 1.0, {{0.1, 0.05}, {0.2, 0}}}, 0.05);
    int expected = 0;
    for (int j = 0; j < g.ny; ++j) {
      for (int i = 0; i < g.nx; ++i) {
        if (g.is_inside(i, j)) {
          CHECK(g.unknown(i, j) == expected);
          ++expected;
        } else {
          CHECK(g.unknown(i, j) == -1);
        }
      }
    }
    CHECK(expected == g.n);
    for (int i = 0; i < g.nx; ++i) {
      for (int j : {0, 1, g.ny - 2, g.ny - 1}) CHECK(!g.is_inside(i, j));
    }
    for (int j = 0; j < g.ny; ++j) {
      for (int i : {0, 1, g.nx - 2, g.nx - 1}) CHECK(!g.is_inside(i, j));
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(rasterize(Disk{{0.5, 0.5}, 0.1}, 1.0), ResolutionTooCoarse);
    CHECK_THROWS_AS(rasterize(Disk{{0, 0}, 1}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(rasterize(Disk{{0, 0}, 1}, -0.1), InvalidArgument);
  }

  TEST_CASE("connected components") {
    CHECK(connected_components(rasterize(Disk{{0, 0}, 1}, 0.05)) == 1);
    CHECK(connected_components(rasterize(regular_polygon(7, 1.0), 0.03)) == 1);
    const std::array<DomainSpec, 2> two{Rectangle{{0, 0}, 1, 1}, Rectangle{{2, 0}, 1, 1}};
    CHECK(connected_components(rasterize(std::span<const DomainSpec>(two), 0.25)) == 2);
  }

  TEST_CASE("nested domains give nested masks") {
    oracle::Lcg rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      StarShape outer = oracle::random_star(rng, 4, 0.3);
      const double s = rng.uniform(0.5, 0.9);
      StarShape inner{outer.center, s * outer.r0, outer.coeffs};
      for (auto& c : inner.coeffs) c = {s * c.a, s * c.b};
      const double h = outer.r0 / 20.0;
      CHECK(mask_subset(rasterize(inner, h), rasterize(outer, h)));
      CHECK(!mask_subset(rasterize(outer, h), rasterize(inner, h)));
    }
  }

  TEST_CASE("refinement and area consistency") {
    const std::vector<DomainSpec> primitives{Disk{{0.1, 0}, 1}, Rectangle{{0, 0}, 2, 1}, regular_polygon(5, 1.0),
                                             Polygon{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}};
    for (const auto& d : primitives) {
      for (double h : {0.1, 0.05, 0.025}) {
        const GridEmbedding g = rasterize(d, h);
        CHECK(rasterize(d, h / 2).n >= g.n);
        CHECK(std::abs(g.n * h * h - area(d)) < 2.0 * perimeter(d) * h);
      }
    }
  }

  TEST_CASE("scaled embedding keeps the mask") {
    const GridEmbedding g = rasterize(Disk{{0, 0}, 1}, 0.1);
    const GridEmbedding s = g.scaled(3.0);
    CHECK(s.n == g.n);
    CHECK(s.inside == g.inside);
    CHECK(s.h == doctest::Approx(0.3));
  }

  TEST_CASE("mask dumps") {
    const GridEmbedding g = rasterize(Rectangle{{0, 0}, 1, 1}, 0.5);
    const std::string csv = mask_to_csv(g);
    CHECK(std::count(csv.begin(), csv.end(), '1') == 1);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == g.ny);
    CHECK(std::count(csv.begin(), csv.end(), ',') == g.ny * (g.nx - 1));
    const std::string header = "P2\n" + std::to_string(g.nx) + " " + std::to_string(g.ny) + "\n1\n";
    CHECK(mask_to_pgm(g).rfind(header, 0) == 0);
  }
}
