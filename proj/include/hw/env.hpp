#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hw/term.hpp"

namespace hw {

// Checked declarations, in dependency order. All declarations in one run are
// checked under the same mode; insertion is the only sequencing point.
struct CheckedEnv {
  std::map<std::string, Declaration> decls;
  std::vector<std::string> order;
  ModeTag mode = ModeTag::Strict;
  int64_t fuel_budget = 1000000;

  const Declaration* find(const std::string& name) const {
    auto it = decls.find(name);
    return it == decls.end() ? nullptr : &it->second;
  }
  bool contains(const std::string& name) const { return decls.count(name) != 0; }
  void add(Declaration d) {
    order.push_back(d.name);
    decls.emplace(d.name, std::move(d));
  }
};

}  // namespace hw
