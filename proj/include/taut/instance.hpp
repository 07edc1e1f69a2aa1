#pragma once

#include <map>
#include <optional>
#include <string>

#include "taut/tautsys.hpp"
#include "taut/toric.hpp"

namespace taut {

// Parsed and validated instance file. Every rational is read exactly;
// structural problems raise ValidationError with the offending location.
struct Instance {
  RepData rep;
  OrbitClosureData orbit;
  std::map<std::string, Character> characters;
  std::vector<std::string> tasks;  // optional "run" pipeline
  std::optional<IntMat> torus_matrix;  // reconstructed when the action is diagonal

  const Character& character(const std::string& name) const;
};

// Parameter file for the linear-free-divisor calculus.
struct LFDInstance {
  int n = 0;
  std::vector<Rat> roots_bD;
  std::optional<Rat> beta_e;
};

struct LoadedFile {
  std::optional<Instance> instance;
  std::optional<LFDInstance> lfd;
  std::string raw;  // exact bytes, for hashing
};

LoadedFile load_instance_file(const std::string& path);
Instance parse_instance_json(const std::string& text);
LFDInstance parse_lfd_json(const std::string& text);

}  // namespace taut
