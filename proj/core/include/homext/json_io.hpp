#pragma once

#include <string>

#include "homext/superquiver.hpp"
#include "homext/twist.hpp"

namespace homext {

inline constexpr int kSchemaVersion = 1;

std::string quiver_to_json(const QuiverWithRelations& q, int indent = 2);
std::string homext_to_json(const HomExtQuiver& h, int indent = 2);
std::string superquiver_to_json(const Superquiver& s, int indent = 2);
std::string diagram_to_json(const ArcDiagram& d, int indent = 2);

// Collection files: one "(i,j;l)" per line with '#' comments, or a JSON
// document {"modules": [...]} holding the same tokens.
std::vector<StringModule> parse_collection(const std::string& text);
std::string write_collection(const std::vector<StringModule>& modules);

}  // namespace homext
