#pragma once

#include "hw/diagnostics.hpp"
#include "hw/env.hpp"
#include "hw/reduction.hpp"
#include "hw/term.hpp"

namespace hw {

// Bidirectional checker. Introductions check, eliminations infer; motives are
// explicit. All functions throw CheckError on failure.

// Returns the type of t; the result checks against Univ in ctx.
TermPtr infer(const CheckedEnv& env, const Context& ctx, const TermPtr& t);

// Accepts iff ctx |- t : ty is derivable under the env's mode.
void check(const CheckedEnv& env, const Context& ctx, const TermPtr& t, const TermPtr& ty);

// Checks a type former against the universe.
void check_is_type(const CheckedEnv& env, const Context& ctx, const TermPtr& t);

// Checks one declaration against an env and returns it ready for insertion.
Declaration check_declaration(const CheckedEnv& env, const std::string& name, TermPtr ty,
                              TermPtr body /* null for axiom */);

}  // namespace hw
