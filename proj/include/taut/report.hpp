#pragma once

#include <json.hpp>
#include <string>

#include "taut/repdata.hpp"

namespace taut {

inline constexpr const char* kToolName = "taut";
inline constexpr const char* kToolVersion = "0.1.0";

// deterministic content hash for the report header
std::string fnv1a64(std::string_view bytes);

nlohmann::ordered_json character_json(const Character& c);

// report skeleton: tool block, input block, empty task list; the timing block
// is appended last so reruns differ only there
nlohmann::ordered_json report_skeleton(const std::string& input_path,
                                       const std::string& input_bytes);

void report_basis_order(nlohmann::ordered_json& report, int N, int lie_dim);

// renders the machine report as readable text (same content, aligned)
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace taut
