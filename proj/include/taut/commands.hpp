#pragma once

#include <optional>

#include "taut/instance.hpp"
#include "taut/report.hpp"

namespace taut {

struct CommandOptions {
  std::string beta_name = "beta";
  std::optional<Rat> beta_e;  // overrides the named character on e
  int cap = 16;
  int weight = 0;
  std::string order = "degrevlex";
  std::optional<std::pair<int, int>> veronese;  // cycle --veronese n d
  std::string cochain_path;
  std::optional<Rat> lfd_beta;
  std::size_t max_slice = 200000;
  bool parallel = false;
};

// Each command appends one or more entries to report["tasks"] and returns the
// report. Errors surface as the taut exception taxonomy; the CLI maps them to
// exit codes.
nlohmann::ordered_json cmd_build(const LoadedFile& file, const std::string& path,
                                 const CommandOptions& opt);
nlohmann::ordered_json cmd_bfun(const LoadedFile& file, const std::string& path,
                                const CommandOptions& opt);
nlohmann::ordered_json cmd_dual(const LoadedFile& file, const std::string& path,
                                const CommandOptions& opt);
nlohmann::ordered_json cmd_cycle(const LoadedFile& file, const std::string& path,
                                 const CommandOptions& opt);
nlohmann::ordered_json cmd_profile(const LoadedFile& file, const std::string& path,
                                   const CommandOptions& opt);
nlohmann::ordered_json cmd_lfd(const LoadedFile& file, const std::string& path,
                               const CommandOptions& opt);
// executes the instance's task list (sequentially, or concurrently with
// opt.parallel)
nlohmann::ordered_json cmd_run(const LoadedFile& file, const std::string& path,
                               const CommandOptions& opt);

// resolves the character the command should use (named, with optional
// beta_e override requiring a flagged scaling element)
Character resolve_beta(const Instance& inst, const CommandOptions& opt);

}  // namespace taut
