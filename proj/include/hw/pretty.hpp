#pragma once

#include <string>

#include "hw/term.hpp"

namespace hw {

// Renders a kernel term in the surface syntax. Output re-parses and
// re-elaborates to a syntactically equal term when well-scoped names are
// supplied for the free variables.
std::string pretty(const TermPtr& t, const std::vector<std::string>& free_names = {});

}  // namespace hw
