#pragma once

#include <string>

#include "hw/module.hpp"
#include "hw/pretty.hpp"
#include "hw/reduction.hpp"
#include "hw/rules.hpp"
#include "hw/surface.hpp"

namespace hwt {

using namespace hw;

inline CheckedEnv env_of(ModeTag mode, int64_t fuel = 1000000) {
  CheckedEnv env;
  env.mode = mode;
  env.fuel_budget = fuel;
  return env;
}

// Elaborates a single surface term over an env (no locals).
inline TermPtr term_of(const std::string& src, const CheckedEnv& env) {
  auto mod = surface::parse("def it := " + src, "<test>");
  std::vector<std::string> locals;
  return surface::elaborate_term(mod.decls.at(0).body, env, locals);
}

// Checks the textual module; returns the extended env. Throws CheckError.
inline CheckedEnv check_module(const std::string& src, ModeTag mode,
                               int64_t fuel = 1000000) {
  CheckedEnv env = env_of(mode, fuel);
  auto mod = surface::parse(src, "<test>");
  auto decls = surface::elaborate(mod, env);
  for (auto& ed : decls) {
    TermPtr ty = ed.ty ? ed.ty : infer(env, Context{}, ed.body);
    env.add(check_declaration(env, ed.name, ty, ed.body));
  }
  return env;
}

// Returns the failing code, or 0 if the module checks.
inline int check_module_code(const std::string& src, ModeTag mode,
                             int64_t fuel = 1000000) {
  try {
    check_module(src, mode, fuel);
    return 0;
  } catch (const CheckError& e) {
    return static_cast<int>(e.diag.code);
  }
}

}  // namespace hwt
