#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mwis/graph.hpp"

namespace mwis::cli {

std::string read_file(const std::string& path);
std::string sha256_hex(const std::string& bytes);

// Skeleton shared by every command. Keys are sorted on output, so two runs with the
// same inputs produce the same bytes unless wall times are switched on.
nlohmann::json base_report(const std::string& command, const std::vector<std::string>& argv, std::uint64_t seed);
nlohmann::json set_json(const VertexSet& s);

// stdout when path is empty
void emit(const nlohmann::json& report, const std::string& path);

}  // namespace mwis::cli
