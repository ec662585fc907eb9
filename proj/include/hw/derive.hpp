#pragma once

#include <string>
#include <vector>

#include "hw/diagnostics.hpp"

namespace hw {

// A signature: named constructors with a branching ("arity") type each,
// written as a closed surface type expression over the stdlib environment.
struct SignatureSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> constructors;  // (name, arity type)
};

// Line-oriented spec format: `name NAME` once, then `constructor NAME : TYPE`.
SignatureSpec parse_signature(const std::string& text, const std::string& file);

// Emits a self-contained .hw fragment: the label type, the branching family,
// the tree type, constructor abbreviations, the algebra / weak-homomorphism
// types and the h-initiality statement. Deterministic: same spec, same bytes.
// The output expects the stdlib prelude (import nat_w chain) to be in scope.
std::string derive_module(const SignatureSpec& spec);

}  // namespace hw
