#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "recsynth/rewrite.hpp"
#include "recsynth/sorts.hpp"
#include "recsynth/term.hpp"

namespace fixtures {

/// Reads prefix terms: `h(...)` is an application, `h()` a nullary one, and a
/// bare identifier is a constant if it is one of 0, nil, nl, null and a
/// variable otherwise. Independent of the library's problem parser.
recsynth::Term t(std::string_view text);
recsynth::IOEquation eq(std::string_view lhs, std::string_view rhs);

recsynth::Term nat(unsigned n);

recsynth::SortEnv nat_env();
/// nat, list = nil | cons(nat, list), tree = nl | nd(tree, nat, tree), and
/// blist = nl2 | o(blist) | i(blist).
recsynth::SortEnv world();

recsynth::Signature sig(std::string name, std::vector<std::string> domain, std::string range);

std::vector<recsynth::IOEquation> add_examples();
std::vector<recsynth::IOEquation> size_examples();
std::vector<recsynth::IOEquation> rev_examples();
std::vector<recsynth::IOEquation> dup_examples();
std::vector<recsynth::IOEquation> lgth_examples();
std::vector<recsynth::IOEquation> sq_examples();

/// Rules of `actual` equal `expected` rule by rule, up to a per-rule
/// variable renaming and one consistent bijective renaming of the symbols in
/// `renamable` (auxiliary names in `expected`). On mismatch `why` explains.
bool same_rules_modulo_renaming(std::span<const recsynth::Rule> actual, const std::vector<recsynth::Rule>& expected,
                                const std::set<std::string>& renamable, std::string* why = nullptr);

std::vector<recsynth::Rule> rules(std::initializer_list<std::pair<std::string_view, std::string_view>> text);

}  // namespace fixtures
