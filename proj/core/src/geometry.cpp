#include "buckleopt/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "buckleopt/errors.hpp"

namespace buckleopt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double node_angle(int j, int n) { return kTwoPi * static_cast<double>(j) / static_cast<double>(n); }

double signed_area(std::span<const Vec2> v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    s += cross(v[i], v[(i + 1) % n]);
  }
  return 0.5 * s;
}

double polygon_perimeter(std::span<const Vec2> v) {
  double s = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    s += norm(v[(i + 1) % n] - v[i]);
  }
  return s;
}

double max_pairwise(std::span<const Vec2> v) {
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      best = std::max(best, norm(v[j] - v[i]));
    }
  }
  return best;
}

int orientation_sign(Vec2 a, Vec2 b, Vec2 c, double eps) {
  const double v = cross(b - a, c - a);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p, double eps) {
  return std::min(a.x, b.x) - eps <= p.x && p.x <= std::max(a.x, b.x) + eps &&
         std::min(a.y, b.y) - eps <= p.y && p.y <= std::max(a.y, b.y) + eps;
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d, double eps) {
  const int o1 = orientation_sign(a, b, c, eps);
  const int o2 = orientation_sign(a, b, d, eps);
  const int o3 = orientation_sign(c, d, a, eps);
  const int o4 = orientation_sign(c, d, b, eps);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && on_segment(a, b, c, 0.0)) return true;
  if (o2 == 0 && on_segment(a, b, d, 0.0)) return true;
  if (o3 == 0 && on_segment(c, d, a, 0.0)) return true;
  if (o4 == 0 && on_segment(c, d, b, 0.0)) return true;
  return false;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

double boundary_distance(std::span<const Vec2> v, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, point_segment_distance(p, v[i], v[(i + 1) % n]));
  }
  return best;
}

// Crossing-number test; boundary points give an arbitrary answer.
bool crossing_inside(std::span<const Vec2> v, Vec2 p) {
  bool inside = false;
  const std::size_t n = v.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = v[i];
    const Vec2 b = v[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

std::vector<Vec2> star_samples(const StarShape& s, int n) {
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) pts[static_cast<std::size_t>(j)] = s.point(node_angle(j, n));
  return pts;
}

std::vector<Vec2> disk_samples(const Disk& c, int n) {
  std::vector<Vec2> pts(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = node_angle(j, n);
    pts[static_cast<std::size_t>(j)] = c.center + c.radius * Vec2{std::cos(t), std::sin(t)};
  }
  return pts;
}

std::vector<Vec2> rect_vertices(const Rectangle& r) {
  const Vec2 c = r.corner;
  return {c, {c.x + r.width, c.y}, {c.x + r.width, c.y + r.height}, {c.x, c.y + r.height}};
}

// Cross products of consecutive edges are all >= -eps.
bool turns_left(std::span<const Vec2> v, double eps) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = v[(i + 1) % n] - v[i];
    const Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    if (cross(e0, e1) < -eps) return false;
  }
  return true;
}

double star_radius_sum(const StarShape& s, double theta, int derivative) {
  double r = derivative == 0 ? s.r0 : 0.0;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const double c = std::cos(k * theta);
    const double sn = std::sin(k * theta);
    const auto& [a, b] = s.coeffs[i];
    switch (derivative) {
      case 0: r += a * c + b * sn; break;
      case 1: r += k * (-a * sn + b * c); break;
      default: r += -k * k * (a * c + b * sn); break;
    }
  }
  return r;
}

}  // namespace

double StarShape::radius(double theta) const { return star_radius_sum(*this, theta, 0); }
double StarShape::radius_derivative(double theta) const { return star_radius_sum(*this, theta, 1); }
double StarShape::radius_second_derivative(double theta) const { return star_radius_sum(*this, theta, 2); }

Vec2 StarShape::point(double theta) const {
  return center + radius(theta) * Vec2{std::cos(theta), std::sin(theta)};
}

double geometric_tolerance(double diam) { return 1e-10 * diam * diam; }

void validate(const Polygon& p) {
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  if (n < 3) throw InvalidDomain("polygon needs at least 3 vertices, got " + std::to_string(n));
  for (const auto& q : v) {
    if (!std::isfinite(q.x) || !std::isfinite(q.y)) throw InvalidDomain("polygon vertex is not finite");
  }
  const double diam = max_pairwise(v);
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(v[(i + 1) % n] - v[i]) <= 1e-12 * diam) {
      throw InvalidDomain("polygon has coincident consecutive vertices at index " + std::to_string(i));
    }
  }
  if (!(signed_area(v) > 0.0)) throw InvalidDomain("polygon must be counterclockwise with positive area");
  const double eps = geometric_tolerance(diam);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2 c = v[j];
      const Vec2 d = v[(j + 1) % n];
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges may only share their common vertex: reject fold-backs.
        const Vec2 shared = j == i + 1 ? b : a;
        const Vec2 u = j == i + 1 ? a : b;
        const Vec2 w = j == i + 1 ? d : c;
        if (std::abs(cross(u - shared, w - shared)) <= eps && dot(u - shared, w - shared) > 0.0) {
          throw InvalidDomain("polygon edges " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }
        continue;
      }
      if (segments_intersect(a, b, c, d, eps)) {
        throw InvalidDomain("polygon edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
}

void validate(const StarShape& s) {
  if (!std::isfinite(s.center.x) || !std::isfinite(s.center.y) || !std::isfinite(s.r0)) {
    throw InvalidDomain("star center/r0 must be finite");
  }
  for (const auto& [a, b] : s.coeffs) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidDomain("star coefficient is not finite");
  }
  for (int j = 0; j < kBoundaryNodes; ++j) {
    if (!(s.radius(node_angle(j, kBoundaryNodes)) > 0.0)) {
      throw InvalidDomain("star radius is not positive at node " + std::to_string(j));
    }
  }
}

void validate(const DomainSpec& d) {
  std::visit(overloaded{
                 [](const Polygon& p) { validate(p); },
                 [](const StarShape& s) { validate(s); },
                 [](const Disk& c) {
                   if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !std::isfinite(c.center.x) ||
                       !std::isfinite(c.center.y)) {
                     throw InvalidDomain("disk radius must be positive and finite");
                   }
                 },
                 [](const Rectangle& r) {
                   if (!(r.width > 0.0) || !(r.height > 0.0) || !std::isfinite(r.width) ||
                       !std::isfinite(r.height) || !std::isfinite(r.corner.x) || !std::isfinite(r.corner.y)) {
                     throw InvalidDomain("rectangle width and height must be positive and finite");
                   }
                 },
             },
             d);
}

double perimeter(const DomainSpec& d) {
  validate(d);
  return std::visit(overloaded{
                        [](const Polygon& p) { return polygon_perimeter(p.vertices); },
                        [](const StarShape& s) {
                          double sum = 0.0;
                          for (int j = 0; j < kBoundaryNodes; ++j) {
                            const double t = node_angle(j, kBoundaryNodes);
                            sum += std::hypot(s.radius(t), s.radius_derivative(t));
                          }
                          return sum * kTwoPi / kBoundaryNodes;
                        },
                        [](const Disk& c) { return kTwoPi * c.radius; },
                        [](const Rectangle& r) { return 2.0 * (r.width + r.height); },
                    },
                    d);
}

double area(const DomainSpec& d) {
  validate(d);
  return std::visit(overloaded{
                        [](const Polygon& p) { return signed_area(p.vertices); },
                        [](const StarShape& s) {
                          double sum = 0.0;
                          for (int j = 0; j < kBoundaryNodes; ++j) {
                            const double r = s.radius(node_angle(j, kBoundaryNodes));
                            sum += 0.5 * r * r;
                          }
                          return sum * kTwoPi / kBoundaryNodes;
                        },
                        [](const Disk& c) { return std::numbers::pi * c.radius * c.radius; },
                        [](const Rectangle& r) { return r.width * r.height; },
                    },
                    d);
}

double diameter(const DomainSpec& d) {
  validate(d);
  return std::visit(overloaded{
                        [](const Polygon& p) { return max_pairwise(p.vertices); },
                        [](const StarShape& s) {
                          const auto pts = star_samples(s, kBoundaryNodes);
                          return max_pairwise(convex_hull(pts).vertices);
                        },
                        [](const Disk& c) { return 2.0 * c.radius; },
                        [](const Rectangle& r) { return std::hypot(r.width, r.height); },
                    },
                    d);
}

Polygon convex_hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  if (pts.size() < 3) throw DegenerateDomain("convex hull needs at least 3 points");
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  double extent = 0.0;
  {
    Vec2 lo = pts.front(), hi = pts.front();
    for (const auto& p : pts) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    extent = norm(hi - lo);
  }
  const double eps = geometric_tolerance(extent);

  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Vec2 p = pts[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= eps) --k;
    hull[k++] = p;
  }
  hull.resize(k > 0 ? k - 1 : 0);
  if (hull.size() < 3 || signed_area(hull) <= eps) {
    throw DegenerateDomain("convex hull has zero area (collinear input)");
  }
  return Polygon{std::move(hull)};
}

Polygon convex_hull(const DomainSpec& d) {
  validate(d);
  return std::visit(overloaded{
                        [](const Polygon& p) { return convex_hull(std::span<const Vec2>(p.vertices)); },
                        [](const StarShape& s) { return convex_hull(star_samples(s, kBoundaryNodes)); },
                        [](const Disk& c) { return convex_hull(disk_samples(c, kBoundaryNodes)); },
                        [](const Rectangle& r) { return Polygon{rect_vertices(r)}; },
                    },
                    d);
}

bool is_convex(const DomainSpec& d) {
  validate(d);
  return std::visit(overloaded{
                        [](const Polygon& p) {
                          return turns_left(p.vertices, geometric_tolerance(max_pairwise(p.vertices)));
                        },
                        [&](const StarShape& s) {
                          const auto pts = star_samples(s, kBoundaryNodes);
                          return turns_left(pts, geometric_tolerance(diameter(d)));
                        },
                        [](const Disk&) { return true; },
                        [](const Rectangle&) { return true; },
                    },
                    d);
}

DomainSpec scale_domain(const DomainSpec& d, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("scale factor must be positive and finite");
  validate(d);
  return std::visit(overloaded{
                        [t](const Polygon& p) -> DomainSpec {
                          Polygon out = p;
                          for (auto& v : out.vertices) v = t * v;
                          return out;
                        },
                        [t](const StarShape& s) -> DomainSpec {
                          StarShape out = s;
                          out.center = t * s.center;
                          out.r0 *= t;
                          for (auto& c : out.coeffs) c = {t * c.a, t * c.b};
                          return out;
                        },
                        [t](const Disk& c) -> DomainSpec { return Disk{t * c.center, t * c.radius}; },
                        [t](const Rectangle& r) -> DomainSpec {
                          return Rectangle{t * r.corner, t * r.width, t * r.height};
                        },
                    },
                    d);
}

DomainSpec translate_domain(const DomainSpec& d, Vec2 offset) {
  return std::visit(overloaded{
                        [offset](const Polygon& p) -> DomainSpec {
                          Polygon out = p;
                          for (auto& v : out.vertices) v = v + offset;
                          return out;
                        },
                        [offset](const StarShape& s) -> DomainSpec {
                          StarShape out = s;
                          out.center = s.center + offset;
                          return out;
                        },
                        [offset](const Disk& c) -> DomainSpec { return Disk{c.center + offset, c.radius}; },
                        [offset](const Rectangle& r) -> DomainSpec {
                          return Rectangle{r.corner + offset, r.width, r.height};
                        },
                    },
                    d);
}

double saturation_factor(double current_perimeter, double p, int dim) {
  if (!(p > 0.0) || !(current_perimeter > 0.0)) throw InvalidArgument("perimeters must be positive");
  if (dim < 2) throw InvalidArgument("dimension must be at least 2");
  return std::pow(p / current_perimeter, 1.0 / static_cast<double>(dim - 1));
}

DomainSpec saturate_perimeter(const DomainSpec& d, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw InvalidArgument("target perimeter must be positive and finite");
  return scale_domain(d, saturation_factor(perimeter(d), p));
}

Polygon star_to_polygon(const StarShape& s, int n) {
  if (n < 3) throw InvalidArgument("star_to_polygon needs at least 3 vertices");
  Polygon out;
  out.vertices.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = node_angle(j, n);
    const double r = s.radius(t);
    if (!(r > 0.0)) throw InvalidDomain("star radius is not positive at sample " + std::to_string(j));
    out.vertices.push_back(s.center + r * Vec2{std::cos(t), std::sin(t)});
  }
  return out;
}

BoundingBox bounding_box(const DomainSpec& d) {
  return std::visit(overloaded{
                        [](const Polygon& p) {
                          BoundingBox b{p.vertices.front(), p.vertices.front()};
                          for (const auto& v : p.vertices) {
                            b.lo = {std::min(b.lo.x, v.x), std::min(b.lo.y, v.y)};
                            b.hi = {std::max(b.hi.x, v.x), std::max(b.hi.y, v.y)};
                          }
                          return b;
                        },
                        [](const StarShape& s) {
                          // Sampled extent padded by the chord sagitta bound.
                          const auto pts = star_samples(s, kBoundaryNodes);
                          BoundingBox b{pts.front(), pts.front()};
                          double rmax = 0.0;
                          for (const auto& v : pts) {
                            b.lo = {std::min(b.lo.x, v.x), std::min(b.lo.y, v.y)};
                            b.hi = {std::max(b.hi.x, v.x), std::max(b.hi.y, v.y)};
                            rmax = std::max(rmax, norm(v - s.center));
                          }
                          const double pad = 1e-3 * rmax;
                          b.lo = b.lo - Vec2{pad, pad};
                          b.hi = b.hi + Vec2{pad, pad};
                          return b;
                        },
                        [](const Disk& c) {
                          return BoundingBox{c.center - Vec2{c.radius, c.radius}, c.center + Vec2{c.radius, c.radius}};
                        },
                        [](const Rectangle& r) {
                          return BoundingBox{r.corner, r.corner + Vec2{r.width, r.height}};
                        },
                    },
                    d);
}

bool contains_strict(const DomainSpec& d, Vec2 p, double eps) {
  return std::visit(overloaded{
                        [&](const Polygon& poly) {
                          return crossing_inside(poly.vertices, p) && boundary_distance(poly.vertices, p) > eps;
                        },
                        [&](const StarShape& s) {
                          const Vec2 v = p - s.center;
                          const double rho = norm(v);
                          if (rho == 0.0) return true;
                          return rho < s.radius(std::atan2(v.y, v.x)) - eps;
                        },
                        [&](const Disk& c) { return norm(p - c.center) < c.radius - eps; },
                        [&](const Rectangle& r) {
                          return p.x > r.corner.x + eps && p.x < r.corner.x + r.width - eps &&
                                 p.y > r.corner.y + eps && p.y < r.corner.y + r.height - eps;
                        },
                    },
                    d);
}

bool contains_closed(const DomainSpec& d, Vec2 p, double eps) {
  return std::visit(overloaded{
                        [&](const Polygon& poly) {
                          return crossing_inside(poly.vertices, p) || boundary_distance(poly.vertices, p) <= eps;
                        },
                        [&](const StarShape& s) {
                          const Vec2 v = p - s.center;
                          const double rho = norm(v);
                          if (rho == 0.0) return true;
                          return rho <= s.radius(std::atan2(v.y, v.x)) + eps;
                        },
                        [&](const Disk& c) { return norm(p - c.center) <= c.radius + eps; },
                        [&](const Rectangle& r) {
                          return p.x >= r.corner.x - eps && p.x <= r.corner.x + r.width + eps &&
                                 p.y >= r.corner.y - eps && p.y <= r.corner.y + r.height + eps;
                        },
                    },
                    d);
}

Polygon outline(const DomainSpec& d) {
  return std::visit(overloaded{
                        [](const Polygon& p) { return p; },
                        [](const StarShape& s) { return Polygon{star_samples(s, kBoundaryNodes)}; },
                        [](const Disk& c) { return Polygon{disk_samples(c, kBoundaryNodes)}; },
                        [](const Rectangle& r) { return Polygon{rect_vertices(r)}; },
                    },
                    d);
}

double distance_to_set(const DomainSpec& d, Vec2 p) {
  if (const auto* c = std::get_if<Disk>(&d)) return std::max(0.0, norm(p - c->center) - c->radius);
  if (contains_closed(d, p, 0.0)) return 0.0;
  return boundary_distance(outline(d).vertices, p);
}

Vec2 centroid(const DomainSpec& d) {
  return std::visit(overloaded{
                        [](const Polygon& p) {
                          const auto& v = p.vertices;
                          const std::size_t n = v.size();
                          double a = 0.0;
                          Vec2 c;
                          for (std::size_t i = 0; i < n; ++i) {
                            const double w = cross(v[i], v[(i + 1) % n]);
                            a += w;
                            c = c + (w / 3.0) * (v[i] + v[(i + 1) % n]);
                          }
                          return (1.0 / a) * c;
                        },
                        [](const StarShape& s) {
                          double a = 0.0;
                          Vec2 m;
                          for (int j = 0; j < kBoundaryNodes; ++j) {
                            const double t = node_angle(j, kBoundaryNodes);
                            const double r = s.radius(t);
                            a += 0.5 * r * r;
                            m = m + (r * r * r / 3.0) * Vec2{std::cos(t), std::sin(t)};
                          }
                          return s.center + (1.0 / a) * m;
                        },
                        [](const Disk& c) { return c.center; },
                        [](const Rectangle& r) { return r.corner + Vec2{0.5 * r.width, 0.5 * r.height}; },
                    },
                    d);
}

std::vector<Vec2> boundary_samples(const DomainSpec& d, int n) {
  auto along_polygon = [n](const std::vector<Vec2>& v) {
    const double per = polygon_perimeter(v);
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n) + v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 a = v[i];
      const Vec2 b = v[(i + 1) % v.size()];
      const int m = std::max(1, static_cast<int>(std::lround(n * norm(b - a) / per)));
      for (int k = 0; k < m; ++k) out.push_back(a + (static_cast<double>(k) / m) * (b - a));
    }
    return out;
  };
  return std::visit(overloaded{
                        [&](const Polygon& p) { return along_polygon(p.vertices); },
                        [&](const StarShape& s) { return star_samples(s, n); },
                        [&](const Disk& c) { return disk_samples(c, n); },
                        [&](const Rectangle& r) { return along_polygon(rect_vertices(r)); },
                    },
                    d);
}

namespace {

// Closed-set distance with the outline precomputed once.
class SetDistance {
 public:
  explicit SetDistance(const DomainSpec& d) : domain_(d) {
    if (!std::holds_alternative<Disk>(d)) edges_ = outline(d).vertices;
  }

  double operator()(Vec2 p) const {
    if (const auto* c = std::get_if<Disk>(&domain_)) return std::max(0.0, norm(p - c->center) - c->radius);
    const bool inside = std::holds_alternative<Polygon>(domain_) ? crossing_inside(edges_, p)
                                                                  : contains_closed(domain_, p, 0.0);
    if (inside) return 0.0;
    return boundary_distance(edges_, p);
  }

 private:
  const DomainSpec& domain_;
  std::vector<Vec2> edges_;
};

std::vector<Vec2> closed_set_samples(const DomainSpec& d) {
  auto pts = boundary_samples(d, kBoundaryNodes);
  const BoundingBox box = bounding_box(d);
  const double step = diameter(d) / 256.0;
  for (double y = box.lo.y; y <= box.hi.y; y += step) {
    for (double x = box.lo.x; x <= box.hi.x; x += step) {
      if (contains_strict(d, {x, y}, 0.0)) pts.push_back({x, y});
    }
  }
  return pts;
}

double directed_hausdorff(const std::vector<Vec2>& from, const SetDistance& to) {
  double best = 0.0;
  for (const auto& p : from) best = std::max(best, to(p));
  return best;
}

}  // namespace

double hausdorff_distance(const DomainSpec& a, const DomainSpec& b) {
  validate(a);
  validate(b);
  const SetDistance to_a(a);
  const SetDistance to_b(b);
  return std::max(directed_hausdorff(closed_set_samples(a), to_b), directed_hausdorff(closed_set_samples(b), to_a));
}

Polygon regular_polygon(int n, double circumradius, Vec2 center, double phase) {
  if (n < 3) throw InvalidArgument("regular polygon needs n >= 3");
  if (!(circumradius > 0.0)) throw InvalidArgument("circumradius must be positive");
  Polygon p;
  p.vertices.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = phase + node_angle(j, n);
    p.vertices.push_back(center + circumradius * Vec2{std::cos(t), std::sin(t)});
  }
  return p;
}

}  // namespace buckleopt
