#include <cstdlib>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "buckleopt/cli.hpp"
#include "buckleopt/errors.hpp"

namespace buckleopt::cli {

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string tool_version() { return BUCKLEOPT_VERSION; }

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
  auto p = output;
  p.replace_extension();
  p += ".manifest.json";
  return p;
}

std::optional<std::uint64_t> seed_from_environment() {
  const char* raw = std::getenv("BUCKLEOPT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw InvalidArgument(std::string("BUCKLEOPT_SEED is not an integer: ") + raw);
  return static_cast<std::uint64_t>(v);
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = version;
  j["seed"] = seed;
  j["config"] = config_json.empty() ? nlohmann::ordered_json::object() : nlohmann::ordered_json::parse(config_json);
  j["started_at"] = started_at;
  j["finished_at"] = finished_at.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(finished_at);
  j["status"] = status;
  auto files = nlohmann::ordered_json::array();
  for (const auto& p : outputs) files.push_back(p.string());
  j["outputs"] = std::move(files);
  return j.dump(2) + "\n";
}

void RunManifest::write(const std::filesystem::path& path) const {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot write " + path.string());
  os << to_json();
}

}  // namespace buckleopt::cli
