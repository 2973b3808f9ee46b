#pragma once

#include <optional>
#include <string>

#include "recsynth/learner.hpp"
#include "recsynth/problem.hpp"
#include "recsynth/rewrite.hpp"

namespace recsynth {

constexpr int kExitSuccess = 0;
constexpr int kExitSynthesisFailure = 1;
constexpr int kExitInputError = 2;

struct RunOptions {
  /// Inlined presentation: also turns on try_whole_set_lgg_first, so an
  /// auxiliary whose examples generalize to one rule gets that rule.
  bool inline_aux = false;
  bool trace = true;
};

struct RunResult {
  InduceReport report;
  /// The simplified, variable-standardized system that gets printed.
  std::optional<RewriteSystem> final_system;
  CoverageSummary final_coverage;
  /// Report text for standard output.
  std::string output;
  /// Input/output checks and trace, for standard error.
  std::string diagnostics;

  int exit_code() const { return report.succeeded() ? kExitSuccess : kExitSynthesisFailure; }
};

/// induce, prune, optionally inline, standardize variables, and re-check
/// coverage of the problem's examples. A fresh name supply is used per call,
/// so identical problems give identical results.
RunResult run_problem(const Problem& problem, const RunOptions& options = {});

/// The FUNCTION SIGNATURES / EXAMPLES / DEFINITIONS blocks, or the failure
/// diagnostics.
std::string format_report(const Problem& problem, const RunResult& result);

/// `[va:nat,vb:nat]`
std::string format_variable_sorts(const VarSorts& sorts);

}  // namespace recsynth
