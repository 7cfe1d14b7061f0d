#include <doctest.h>

#include <cmath>

#include "buckleopt/errors.hpp"
#include "buckleopt/geometry.hpp"
#include "oracles.hpp"

using namespace buckleopt;

namespace {

const Polygon kLShape{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
const Rectangle kUnitSquare{{0, 0}, 1, 1};

std::vector<DomainSpec> random_domains(unsigned long long seed, int count) {
  oracle::Lcg rng(seed);
  std::vector<DomainSpec> out;
  for (int i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0:
        out.emplace_back(oracle::random_star(rng, 1 + i % 6, 0.3));
        break;
      case 1:
        out.emplace_back(oracle::random_convex_polygon(rng, 3 + i % 9));
        break;
      case 2:
        out.emplace_back(Disk{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.1, 3.0)});
        break;
      default:
        out.emplace_back(Rectangle{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0)});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("perimeter and area of primitives") {
    CHECK(perimeter(kUnitSquare) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(area(kUnitSquare) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(perimeter(Disk{{0, 0}, 1}) == doctest::Approx(2 * oracle::kPi).epsilon(1e-15));
    CHECK(area(Disk{{0, 0}, 1}) == doctest::Approx(oracle::kPi).epsilon(1e-15));

    const StarShape circle{{0, 0}, 1.0, {{0, 0}, {0, 0}}};
    CHECK(std::abs(perimeter(circle) - 2 * oracle::kPi) < 1e-10);
    CHECK(std::abs(area(circle) - oracle::kPi) < 1e-10);
  }

  TEST_CASE("star quadrature matches the ellipse-like closed form") {
    // r = 1 + a cos(2t): area = pi (1 + a^2 / 2) exactly.
    const StarShape s{{0.3, -0.2}, 1.0, {{0, 0}, {0.3, 0}}};
    CHECK(area(s) == doctest::Approx(oracle::kPi * (1 + 0.045)).epsilon(1e-12));
  }

  TEST_CASE("polygon area agrees with the shoelace oracle") {
    oracle::Lcg rng(7);
    for (int i = 0; i < 20; ++i) {
      const Polygon p = oracle::random_convex_polygon(rng, 3 + i);
      CHECK(area(p) == doctest::Approx(oracle::shoelace(p.vertices)).epsilon(1e-12));
    }
  }

  TEST_CASE("invalid domains are rejected") {
    CHECK_THROWS_AS(validate(Polygon{{{0, 0}, {1, 0}}}), InvalidDomain);
    CHECK_THROWS_AS(area(Polygon{{{0, 0}, {1, 0}}}), InvalidDomain);
    CHECK_THROWS_AS(validate(Polygon{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}}), InvalidDomain);  // bow tie
    CHECK_THROWS_AS(validate(Polygon{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}), InvalidDomain);  // clockwise
    CHECK_THROWS_AS(validate(Polygon{{{0, 0}, {1, 0}, {1, 0}, {0, 1}}}), InvalidDomain);  // repeated vertex
    CHECK_THROWS_AS(validate(StarShape{{0, 0}, 1.0, {{1.5, 0}}}), InvalidDomain);
    CHECK_THROWS_AS(validate(Disk{{0, 0}, 0.0}), InvalidDomain);
    CHECK_THROWS_AS(validate(Rectangle{{0, 0}, 1.0, -1.0}), InvalidDomain);
  }

  TEST_CASE("diameter") {
    CHECK(diameter(kUnitSquare) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(diameter(Disk{{1, 1}, 3}) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(diameter(kLShape) == doctest::Approx(std::sqrt(8.0)).epsilon(1e-15));
  }

  TEST_CASE("diameter is below half the perimeter on a random corpus") {
    for (const auto& d : random_domains(11, 100)) CHECK(diameter(d) < 0.5 * perimeter(d));
  }

  TEST_CASE("translation invariance and scaling laws") {
    for (const auto& d : random_domains(12, 100)) {
      const DomainSpec moved = translate_domain(d, {0.7, -1.3});
      CHECK(perimeter(moved) == doctest::Approx(perimeter(d)).epsilon(1e-10));
      CHECK(area(moved) == doctest::Approx(area(d)).epsilon(1e-10));
      CHECK(diameter(moved) == doctest::Approx(diameter(d)).epsilon(1e-10));

      const DomainSpec big = scale_domain(d, 3.0);
      CHECK(perimeter(big) == doctest::Approx(3.0 * perimeter(d)).epsilon(1e-10));
      CHECK(area(big) == doctest::Approx(9.0 * area(d)).epsilon(1e-10));
      CHECK(diameter(big) == doctest::Approx(3.0 * diameter(d)).epsilon(1e-10));
    }
  }

  TEST_CASE("scale_domain") {
    CHECK(scale_domain(kUnitSquare, 1.0) == DomainSpec{kUnitSquare});
    CHECK(perimeter(scale_domain(kUnitSquare, 2.0)) == doctest::Approx(8.0));
    CHECK_THROWS_AS(scale_domain(kUnitSquare, 0.0), InvalidArgument);
    CHECK_THROWS_AS(scale_domain(kUnitSquare, -1.0), InvalidArgument);
  }

  TEST_CASE("saturate_perimeter") {
    CHECK(perimeter(saturate_perimeter(kUnitSquare, 4.0)) == doctest::Approx(4.0).epsilon(1e-15));
    const auto doubled = std::get<Rectangle>(saturate_perimeter(kUnitSquare, 8.0));
    CHECK(doubled.width == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(std::get<Disk>(saturate_perimeter(Disk{{0, 0}, 1}, 4 * oracle::kPi)).radius == doctest::Approx(2.0));
    CHECK(saturation_factor(2.0, 4.0) == doctest::Approx(2.0));

    for (const auto& d : random_domains(13, 40)) {
      const DomainSpec once = saturate_perimeter(d, 5.0);
      CHECK(std::abs(perimeter(once) / 5.0 - 1.0) < 1e-9);
      const DomainSpec twice = saturate_perimeter(once, 5.0);
      CHECK(std::abs(perimeter(twice) / perimeter(once) - 1.0) < 1e-9);
    }
  }

  TEST_CASE("convex hull of the L-shape") {
    const Polygon hull = convex_hull(kLShape);
    const std::vector<Vec2> expected{{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}};
    REQUIRE(hull.vertices.size() == expected.size());
    for (const auto& v : expected) {
      CHECK(std::find(hull.vertices.begin(), hull.vertices.end(), v) != hull.vertices.end());
    }
    CHECK(perimeter(hull) < perimeter(kLShape));
    CHECK(!is_convex(kLShape));
    CHECK(is_convex(hull));
  }

  TEST_CASE("convex hull agrees with the brute-force oracle") {
    oracle::Lcg rng(21);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Vec2> pts;
      for (int i = 0; i < 25; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
      const Polygon hull = convex_hull(pts);
      const auto expected = oracle::brute_force_hull_vertices(pts);
      CHECK(hull.vertices.size() == expected.size());
      for (const auto& v : expected) {
        CHECK(std::find(hull.vertices.begin(), hull.vertices.end(), v) != hull.vertices.end());
      }
      CHECK(oracle::shoelace(hull.vertices) > 0.0);
    }
  }

  TEST_CASE("convex hull is idempotent and never longer") {
    const Polygon pentagon = regular_polygon(5, 1.0);
    const Polygon hull = convex_hull(pentagon);
    CHECK(hull.vertices.size() == 5);
    for (const auto& v : pentagon.vertices) {
      CHECK(std::find(hull.vertices.begin(), hull.vertices.end(), v) != hull.vertices.end());
    }
    for (const auto& d : random_domains(14, 40)) {
      const Polygon h1 = convex_hull(d);
      const Polygon h2 = convex_hull(h1);
      CHECK(h1.vertices.size() == h2.vertices.size());
      CHECK(perimeter(h1) <= perimeter(d) * (1 + 1e-10));
      for (const auto& v : boundary_samples(d, 256)) CHECK(contains_closed(h1, v, 1e-6 * diameter(d)));
    }
  }

  TEST_CASE("collinear input has a degenerate hull") {
    const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS(convex_hull(line), DegenerateDomain);
  }

  TEST_CASE("is_convex") {
    CHECK(is_convex(kUnitSquare));
    CHECK(is_convex(Disk{{0, 0}, 1}));
    for (double a : {0.05, 0.08, 0.12, 0.2}) {
      const StarShape s{{0, 0}, 1.0, {{0, 0}, {0, 0}, {a, 0}}};
      CHECK(is_convex(s) == oracle::star_curvature_nonnegative(s, kBoundaryNodes));
    }
  }

  TEST_CASE("hausdorff distance") {
    CHECK(hausdorff_distance(kUnitSquare, kUnitSquare) == doctest::Approx(0.0));
    CHECK(hausdorff_distance(kUnitSquare, Rectangle{{1, 0}, 1, 1}) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(hausdorff_distance(kUnitSquare, Rectangle{{0, 0}, 3, 3}) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-2));
    CHECK(hausdorff_distance(Disk{{0, 0}, 1}, Disk{{0, 0}, 0.9}) == doctest::Approx(0.1).epsilon(1e-2));

    const auto corpus = random_domains(15, 12);
    for (std::size_t i = 0; i + 2 < corpus.size(); i += 3) {
      const double ab = hausdorff_distance(corpus[i], corpus[i + 1]);
      const double ba = hausdorff_distance(corpus[i + 1], corpus[i]);
      const double bc = hausdorff_distance(corpus[i + 1], corpus[i + 2]);
      const double ac = hausdorff_distance(corpus[i], corpus[i + 2]);
      CHECK(ab == doctest::Approx(ba));
      const double sampling = 2.0 * std::max({diameter(corpus[i]), diameter(corpus[i + 1]), diameter(corpus[i + 2])}) / 256.0;
      CHECK(ac <= ab + bc + 2.0 * sampling);
    }
  }

  TEST_CASE("star_to_polygon") {
    const StarShape circle{{0, 0}, 1.0, {}};
    CHECK(perimeter(star_to_polygon(circle, 4)) == doctest::Approx(4 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(perimeter(star_to_polygon(circle, 4096)) - 2 * oracle::kPi) < 1e-5);
    CHECK_THROWS_AS(star_to_polygon(circle, 2), InvalidArgument);

    oracle::Lcg rng(16);
    for (int i = 0; i < 20; ++i) {
      const StarShape s = oracle::random_star(rng, 3, 0.05);
      if (!is_convex(s)) continue;
      const Polygon p = star_to_polygon(s, 64);
      CHECK(area(p) <= area(s));
      CHECK(perimeter(p) <= perimeter(s));
    }
  }

  TEST_CASE("regular polygon and centroid") {
    const Polygon hex = regular_polygon(6, 2.0, {1, 1});
    CHECK(perimeter(hex) == doctest::Approx(12.0));
    const Vec2 c = centroid(hex);
    CHECK(c.x == doctest::Approx(1.0));
    CHECK(c.y == doctest::Approx(1.0));
  }
}
