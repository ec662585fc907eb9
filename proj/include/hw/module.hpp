#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hw/env.hpp"
#include "hw/surface.hpp"

namespace hw {

struct LoadOptions {
  ModeTag mode = ModeTag::Propositional;
  int64_t fuel = 1000000;
  // Called after each declaration checks (for --emit elaborated).
  std::function<void(const Declaration&)> on_declaration;
};

// Manifest entry: a module path plus the modes it participates in.
struct ManifestEntry {
  std::string path;
  bool strict_only = false;
  bool prop_only = false;
};

std::vector<ManifestEntry> parse_manifest(const std::string& text, const std::string& file);

// Loads, elaborates and checks a module file and (first) its imports.
// Re-entrant on the same env: already-loaded files are skipped, cycles are
// E007. Throws CheckError on the first failing declaration.
class Loader {
 public:
  Loader(CheckedEnv& env, LoadOptions opts) : env_(env), opts_(std::move(opts)) {
    env_.mode = opts_.mode;
    env_.fuel_budget = opts_.fuel;
  }

  void load_file(const std::string& path);
  // Checks every manifest entry that applies to the active mode, in order.
  void load_manifest(const std::string& manifest_path);

  CheckedEnv& env() { return env_; }

 private:
  void load_module(const std::string& canonical_path);

  CheckedEnv& env_;
  LoadOptions opts_;
  std::vector<std::string> loaded_;
  std::vector<std::string> in_progress_;
};

std::string read_file(const std::string& path);

}  // namespace hw
