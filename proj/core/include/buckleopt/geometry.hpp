#pragma once

#include <cmath>
#include <span>
#include <variant>
#include <vector>

namespace buckleopt {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Counterclockwise simple polygon.
struct Polygon {
  std::vector<Vec2> vertices;
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

struct FourierPair {
  double a = 0.0;  // cos coefficient
  double b = 0.0;  // sin coefficient
  friend bool operator==(const FourierPair&, const FourierPair&) = default;
};

// r(theta) = r0 + sum_k a_k cos(k theta) + b_k sin(k theta), k = 1..K.
struct StarShape {
  Vec2 center;
  double r0 = 1.0;
  std::vector<FourierPair> coeffs;

  double radius(double theta) const;
  double radius_derivative(double theta) const;
  double radius_second_derivative(double theta) const;
  Vec2 point(double theta) const;

  friend bool operator==(const StarShape&, const StarShape&) = default;
};

struct Disk {
  Vec2 center;
  double radius = 1.0;
  friend bool operator==(const Disk&, const Disk&) = default;
};

struct Rectangle {
  Vec2 corner;  // lower-left
  double width = 1.0;
  double height = 1.0;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

using DomainSpec = std::variant<Polygon, StarShape, Disk, Rectangle>;

// Node count used for boundary quadrature and boundary sampling.
inline constexpr int kBoundaryNodes = 4096;

// Throws InvalidDomain when the description violates its invariants.
void validate(const DomainSpec& d);
void validate(const Polygon& p);
void validate(const StarShape& s);

double perimeter(const DomainSpec& d);
double area(const DomainSpec& d);
double diameter(const DomainSpec& d);

// Monotone chain over the vertices (polygon/rectangle) or kBoundaryNodes
// boundary samples (star/disk). Collinear points within the geometric
// tolerance are dropped. Throws DegenerateDomain for a zero-area hull.
Polygon convex_hull(const DomainSpec& d);
Polygon convex_hull(std::span<const Vec2> points);

bool is_convex(const DomainSpec& d);

// Dilation about the origin.
DomainSpec scale_domain(const DomainSpec& d, double t);
DomainSpec translate_domain(const DomainSpec& d, Vec2 offset);

// Dilation factor (p / P(d))^(1/(dim-1)) taking the perimeter to p.
double saturation_factor(double current_perimeter, double p, int dim = 2);
DomainSpec saturate_perimeter(const DomainSpec& d, double p);

double hausdorff_distance(const DomainSpec& a, const DomainSpec& b);

// Inscribed polygon with vertices at theta_j = 2 pi j / n.
Polygon star_to_polygon(const StarShape& s, int n);

// Strict containment with a boundary band of width eps excluded.
bool contains_strict(const DomainSpec& d, Vec2 p, double eps);
// Closed containment (boundary included up to eps).
bool contains_closed(const DomainSpec& d, Vec2 p, double eps);
// Euclidean distance from p to the closed set; zero inside.
double distance_to_set(const DomainSpec& d, Vec2 p);

struct BoundingBox {
  Vec2 lo;
  Vec2 hi;
};
BoundingBox bounding_box(const DomainSpec& d);

// Area centroid.
Vec2 centroid(const DomainSpec& d);

// n boundary points, counterclockwise. Polygons are sampled by arc length and
// always include their vertices.
std::vector<Vec2> boundary_samples(const DomainSpec& d, int n = kBoundaryNodes);

// Polygonal outline (exact for polygon/rectangle, kBoundaryNodes for curved).
Polygon outline(const DomainSpec& d);

Polygon regular_polygon(int n, double circumradius, Vec2 center = {}, double phase = 0.0);

// Tolerance for cross products, scaled by diameter^2.
double geometric_tolerance(double diam);

}  // namespace buckleopt
