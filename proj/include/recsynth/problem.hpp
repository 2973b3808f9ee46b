#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recsynth/learner.hpp"
#include "recsynth/rewrite.hpp"
#include "recsynth/sorts.hpp"

namespace recsynth {

/// A learning task as read from a problem file:
///
///   # comment
///   sort nat = 0 | s(nat);
///   sort list = nil | cons(nat, list);
///   fun lgth : list -> nat;
///   ex lgth(nil) = 0;
///   ex lgth(cons(a, nil)) = s(0);
///   learn lgth;
///
/// Identifiers not declared as constructor or function are variables.
struct Problem {
  SortEnv sort_env;
  std::vector<Signature> signatures;
  std::vector<IOEquation> examples;
  std::string target;
  InduceConfig config;
  /// Filled by the input check.
  VarSorts variable_sorts;
};

/// Parses and checks a problem. Throws ParseError for syntax errors and the
/// other InputError kinds for semantic ones (with example_index set when an
/// i/o equation is at fault).
Problem parse_problem(std::string_view text);

/// Canonical text form; parse_problem(print_problem(p)) reproduces p.
std::string print_problem(const Problem& problem);

/// Parses one term against the given symbol tables.
Term parse_term(std::string_view text, const SortEnv& env, std::span<const Signature> signatures);

/// Contents of a printed result report (see format_report).
struct ReportContents {
  std::vector<Signature> signatures;
  std::vector<IOEquation> examples;
  std::vector<Rule> definitions;
};

ReportContents parse_report(std::string_view text, const SortEnv& env);

std::string format_signature(const Signature& sig);

}  // namespace recsynth
