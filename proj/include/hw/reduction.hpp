#pragma once

#include "hw/env.hpp"
#include "hw/term.hpp"

namespace hw {

// Head-reduction step budget. Exhaustion raises E004, never a wrong answer.
struct Fuel {
  int64_t remaining;
  explicit Fuel(int64_t n) : remaining(n) {}
};

// Weak-head normalization under the env's mode. Head redexes:
//   beta, Proj1/Proj2 on Pair, SigRec on Pair, IdRec on Refl   (both modes)
//   TwoRec/OneRec/WRec on canonical scrutinees, and the computation
//   witnesses unfolding to Refl                                 (strict only)
//   ZeroRec never reduces; FE/etapi constants are always neutral.
// `delta` additionally unfolds head references to defined declarations.
// Never reduces under binders.
TermPtr whnf(const CheckedEnv& env, const Context& ctx, TermPtr t, Fuel& fuel,
             bool delta = true);

// Definitional equality: interleaved whnf + structural descent, extending the
// context under binders. No eta for Pi or Sigma.
bool conv(const CheckedEnv& env, const Context& ctx, const TermPtr& t, const TermPtr& u,
          Fuel& fuel);

// Full normalization (debug/test utility; reduces under binders).
TermPtr normalize(const CheckedEnv& env, const Context& ctx, const TermPtr& t, Fuel& fuel);

// Context for descending into child `i` of `t`, with the binder types the
// child sits under. In strict mode this may infer types of subterms (needed
// when a W-eliminator unfolds below); in propositional mode reduction never
// consults entry types, so placeholders are used where inference would be
// required.
Context child_context(const CheckedEnv& env, const Context& ctx, const TermPtr& t, size_t i,
                      Fuel& fuel);

}  // namespace hw
