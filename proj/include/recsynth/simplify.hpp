#pragma once

#include <set>
#include <string>

#include "recsynth/rewrite.hpp"

namespace recsynth {

/// Removes argument positions of auxiliary functions that can never influence
/// a result. A position is relevant if some rule matches a non-variable
/// pattern there, or binds a variable there that reaches the rhs outside
/// other irrelevant positions; the irrelevant set is the greatest fixpoint.
/// Functions in `fixed_arity` (the user's targets) keep all arguments.
RewriteSystem prune_irrelevant_args(const RewriteSystem& sys, const std::set<std::string>& fixed_arity);

/// Inlines every auxiliary (not in `fixed_arity`) that has exactly one
/// unguarded, non-recursive rule over distinct variables, then drops it.
RewriteSystem inline_single_rule_aux(const RewriteSystem& sys, const std::set<std::string>& fixed_arity);

}  // namespace recsynth
