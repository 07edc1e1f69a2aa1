#include "taut/report.hpp"

#include <iomanip>
#include <sstream>

namespace taut {

std::string fnv1a64(std::string_view bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

nlohmann::ordered_json character_json(const Character& c) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto& v : c.values()) arr.push_back(rat_str(v));
  return arr;
}

nlohmann::ordered_json report_skeleton(const std::string& input_path,
                                       const std::string& input_bytes) {
  nlohmann::ordered_json rep;
  rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  rep["input"] = {{"path", input_path}, {"hash", "fnv1a64:" + fnv1a64(input_bytes)}};
  rep["tasks"] = nlohmann::ordered_json::array();
  return rep;
}

void report_basis_order(nlohmann::ordered_json& report, int N, int lie_dim) {
  nlohmann::ordered_json vars = nlohmann::ordered_json::array();
  for (int i = 1; i <= N; ++i) vars.push_back("x" + std::to_string(i));
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (int i = 1; i <= lie_dim; ++i) basis.push_back("xi" + std::to_string(i));
  report["input"]["variables"] = std::move(vars);
  report["input"]["lie_basis"] = std::move(basis);
}

namespace {

void render(const nlohmann::ordered_json& v, std::ostream& out, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (auto& [k, val] : v.items()) {
      if (val.is_object() || val.is_array()) {
        out << pad << k << ":\n";
        render(val, out, indent + 2);
      } else {
        out << pad << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
            << "\n";
      }
    }
  } else if (v.is_array()) {
    bool scalar = true;
    for (auto& e : v) scalar = scalar && !e.is_object() && !e.is_array();
    if (scalar) {
      out << pad << "[";
      bool first = true;
      for (auto& e : v) {
        if (!first) out << ", ";
        first = false;
        out << (e.is_string() ? e.get<std::string>() : e.dump());
      }
      out << "]\n";
    } else {
      int i = 0;
      for (auto& e : v) {
        out << pad << "- #" << ++i << "\n";
        render(e, out, indent + 2);
      }
    }
  } else {
    out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  render(report, out, 0);
  return out.str();
}

}  // namespace taut
