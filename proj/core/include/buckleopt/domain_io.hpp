#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "buckleopt/geometry.hpp"

namespace buckleopt {

// {"type":"polygon","vertices":[[x,y],...]}
// {"type":"star","center":[x,y],"r0":v,"coeffs":[[a1,b1],...]}
// {"type":"disk","center":[x,y],"radius":v}
// {"type":"rect","corner":[x,y],"w":v,"h":v}
//
// Doubles are written in shortest round-trip form. Parsing validates the
// domain and throws FormatError (schema) or InvalidDomain (geometry).
std::string domain_to_json(const DomainSpec& d, int indent = -1);
DomainSpec domain_from_json(std::string_view text);

DomainSpec load_domain(const std::filesystem::path& path);
void save_domain(const std::filesystem::path& path, const DomainSpec& d);

std::string describe(const DomainSpec& d);

}  // namespace buckleopt
