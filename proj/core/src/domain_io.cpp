#include "buckleopt/domain_io.hpp"

#include <fstream>
#include <sstream>

#include "buckleopt/errors.hpp"
#include "json_support.hpp"

namespace buckleopt {

namespace detail {

namespace {

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

Vec2 parse_point(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError(what + " must be an array [x, y] of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

double require_number(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw FormatError(std::string("missing or non-numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

Vec2 require_point(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return parse_point(j.at(key), std::string("field '") + key + "'");
}

json to_json_value(const DomainSpec& d) {
  if (const auto* p = std::get_if<Polygon>(&d)) {
    json verts = json::array();
    for (const auto& v : p->vertices) verts.push_back(point_json(v));
    return {{"type", "polygon"}, {"vertices", std::move(verts)}};
  }
  if (const auto* s = std::get_if<StarShape>(&d)) {
    json coeffs = json::array();
    for (const auto& c : s->coeffs) coeffs.push_back(json::array({c.a, c.b}));
    return {{"type", "star"}, {"center", point_json(s->center)}, {"r0", s->r0}, {"coeffs", std::move(coeffs)}};
  }
  if (const auto* c = std::get_if<Disk>(&d)) {
    return {{"type", "disk"}, {"center", point_json(c->center)}, {"radius", c->radius}};
  }
  const auto& r = std::get<Rectangle>(d);
  return {{"type", "rect"}, {"corner", point_json(r.corner)}, {"w", r.width}, {"h", r.height}};
}

DomainSpec domain_from_json_value(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw FormatError("domain must be an object with a string 'type'");
  }
  const auto type = j.at("type").get<std::string>();
  DomainSpec d;
  if (type == "polygon") {
    if (!j.contains("vertices") || !j.at("vertices").is_array()) throw FormatError("polygon needs 'vertices'");
    Polygon p;
    for (const auto& v : j.at("vertices")) p.vertices.push_back(parse_point(v, "polygon vertex"));
    d = std::move(p);
  } else if (type == "star") {
    StarShape s;
    s.center = require_point(j, "center");
    s.r0 = require_number(j, "r0");
    if (j.contains("coeffs")) {
      if (!j.at("coeffs").is_array()) throw FormatError("star 'coeffs' must be an array");
      for (const auto& c : j.at("coeffs")) {
        const Vec2 ab = parse_point(c, "star coefficient pair");
        s.coeffs.push_back({ab.x, ab.y});
      }
    }
    d = std::move(s);
  } else if (type == "disk") {
    d = Disk{require_point(j, "center"), require_number(j, "radius")};
  } else if (type == "rect") {
    d = Rectangle{require_point(j, "corner"), require_number(j, "w"), require_number(j, "h")};
  } else {
    throw FormatError("unknown domain type '" + type + "'");
  }
  validate(d);
  return d;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("'" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace detail

std::string domain_to_json(const DomainSpec& d, int indent) { return detail::to_json_value(d).dump(indent); }

DomainSpec domain_from_json(std::string_view text) {
  detail::json j;
  try {
    j = detail::json::parse(text);
  } catch (const detail::json::exception& e) {
    throw FormatError(e.what());
  }
  return detail::domain_from_json_value(j);
}

DomainSpec load_domain(const std::filesystem::path& path) {
  return detail::domain_from_json_value(detail::read_json_file(path));
}

void save_domain(const std::filesystem::path& path, const DomainSpec& d) {
  detail::write_text_file(path, domain_to_json(d, 2) + "\n");
}

std::string describe(const DomainSpec& d) {
  std::ostringstream os;
  os.precision(6);
  if (const auto* p = std::get_if<Polygon>(&d)) {
    os << "polygon(" << p->vertices.size() << " vertices)";
  } else if (const auto* s = std::get_if<StarShape>(&d)) {
    os << "star(r0=" << s->r0 << ", K=" << s->coeffs.size() << ")";
  } else if (const auto* c = std::get_if<Disk>(&d)) {
    os << "disk(r=" << c->radius << ")";
  } else {
    const auto& r = std::get<Rectangle>(d);
    os << "rect(" << r.width << "x" << r.height << ")";
  }
  return os.str();
}

}  // namespace buckleopt
