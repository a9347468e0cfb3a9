#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "socmod/field.hpp"
#include "socmod/script.hpp"
#include "socmod/submodule.hpp"

namespace socmod {

struct SessionConfig {
  std::optional<Field> field;  // replaces the field of every declared ring
  std::optional<int> trunc_level;
  int trunc_cap = 64;
  unsigned seed = 1;
  bool fail_fast = false;
  bool deterministic = false;  // elapsed_ms = 0, for golden files
};

struct RunResult {
  nlohmann::json reports = nlohmann::json::array();
  int exit_code = 0;  // 0 all expectations met, 1 verdict mismatch, 2 parse/engine error
  std::string parse_error;
};

RunResult run_script(const script::Script& s, const SessionConfig& cfg);
// Parse errors become exit code 2 with an empty report list.
RunResult run_text(std::string_view text, const SessionConfig& cfg);

// Ideals, matrices and modules declared by a script, as submodules, in
// declaration order. Declarations that fail to build are skipped.
std::vector<std::pair<std::string, Module>> declared_modules(const script::Script& s, const SessionConfig& cfg);

// Bundled example scripts, keyed by file name.
const std::map<std::string, std::string>& bundled_corpus();

}  // namespace socmod
