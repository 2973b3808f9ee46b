#include "recsynth/driver.hpp"

#include <set>
#include <sstream>

#include "recsynth/simplify.hpp"

namespace recsynth {

namespace {

std::set<std::string> problem_names(const Problem& problem) {
  std::set<std::string> out;
  auto add = [&](const Term& t, auto&& self) -> void {
    out.insert(t.name());
    for (const auto& a : t.args()) self(a, self);
  };
  for (const auto& ex : problem.examples) {
    add(ex.lhs(), add);
    add(ex.rhs, add);
  }
  for (const auto& s : problem.signatures) out.insert(s.name);
  for (const auto& d : problem.sort_env.sorts()) {
    out.insert(d.name);
    for (const auto& a : d.alts) out.insert(a.name);
  }
  return out;
}

void print_rules(std::ostream& out, const RewriteSystem& sys) {
  for (const auto& r : sys.rules()) out << to_string(r) << "\n";
}

}  // namespace

std::string format_variable_sorts(const VarSorts& sorts) {
  std::string out = "[";
  bool first = true;
  for (const auto& [v, s] : sorts) {
    if (!first) out += ",";
    out += v + ":" + s;
    first = false;
  }
  return out + "]";
}

RunResult run_problem(const Problem& problem, const RunOptions& options) {
  RunResult result;
  NameSupply names(problem_names(problem));
  std::ostringstream diag;

  diag << "+++++ Examples input check:\n";
  for (std::size_t i = 0; i < problem.examples.size(); ++i) diag << "+++++ Example " << i + 1 << ":\n";
  if (!problem.variable_sorts.empty()) {
    diag << "Variable sorts:\n" << format_variable_sorts(problem.variable_sorts) << "\n";
  }
  diag << "+++++ Examples input check done\n";

  InduceConfig config = problem.config;
  if (options.inline_aux) config.try_whole_set_lgg_first = true;
  result.report = induce(problem.target, problem.examples, problem.sort_env, problem.signatures, config, names);
  if (options.trace) diag << emit_trace(result.report.trace);

  if (result.report.system) {
    const std::set<std::string> fixed{problem.target};
    RewriteSystem sys = prune_irrelevant_args(*result.report.system, fixed);
    if (options.inline_aux) sys = inline_single_rule_aux(sys, fixed);
    sys = standardize_variables(sys, names);

    diag << "+++++ Examples output check:\n";
    result.final_coverage = covers_all(sys, problem.examples, problem.config.step_limit);
    for (const auto& ex : result.final_coverage.uncovered) diag << "+++++ not covered: " << to_string(ex) << "\n";
    diag << "+++++ Examples output check done\n";

    if (!result.final_coverage.all_covered) {
      InduceFailure failure;
      failure.reason = FailureReason::kUncoveredExamples;
      failure.message = "simplified system no longer covers all i/o equations";
      failure.uncovered = result.final_coverage.uncovered;
      failure.candidate = sys;
      result.report.failure = std::move(failure);
      result.report.system.reset();
    } else {
      result.final_system = std::move(sys);
    }
  }

  result.diagnostics = diag.str();
  result.output = format_report(problem, result);
  return result;
}

std::string format_report(const Problem& problem, const RunResult& result) {
  std::ostringstream out;
  if (result.final_system) {
    out << "FUNCTION SIGNATURES:\n";
    for (const auto& s : result.final_system->signatures()) out << format_signature(s) << "\n";
    out << "\nFUNCTION EXAMPLES:\n";
    for (const auto& ex : problem.examples) out << to_string(ex.lhs()) << " = " << to_string(ex.rhs) << "\n";
    out << "\nFUNCTION DEFINITIONS:\n";
    print_rules(out, *result.final_system);
    return out.str();
  }

  const auto& failure = *result.report.failure;
  out << "SYNTHESIS FAILED: " << to_string(failure.reason) << "\n";
  out << failure.message << "\n";
  if (!failure.underivable.empty()) {
    out << "\nUNDERIVABLE AUXILIARY EXAMPLES:\n";
    for (const auto& u : failure.underivable) {
      out << u.aux << " (layer " << u.layer << "): " << to_string(u.member) << " needs "
          << to_string(u.missing_call) << "\n";
    }
  }
  if (!failure.uncovered.empty()) {
    out << "\nUNCOVERED EXAMPLES:\n";
    for (const auto& ex : failure.uncovered) out << to_string(ex.lhs()) << " = " << to_string(ex.rhs) << "\n";
  }
  if (failure.candidate) {
    out << "\nCANDIDATE DEFINITIONS:\n";
    print_rules(out, *failure.candidate);
  }
  return out.str();
}

}  // namespace recsynth
