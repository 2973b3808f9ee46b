#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recsynth/names.hpp"
#include "recsynth/sorts.hpp"
#include "recsynth/term.hpp"

namespace recsynth {

/// Restricts a rule to calls whose argument at `position` (0-based) is headed
/// by `constructor`. The learner attaches one to every rule it builds for a
/// constructor case; it only matters when depth-bounded anti-unification has
/// generalized the case constructor away.
struct Guard {
  std::size_t position;
  std::string constructor;

  friend bool operator==(const Guard&, const Guard&) = default;
};

struct Rule {
  Term lhs;
  Term rhs;
  std::optional<Guard> guard;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// `lhs = rhs`
std::string to_string(const Rule& rule);

/// Ordered rules plus the signatures of the functions they define. Immutable
/// once built; every rule passes admission.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  /// Throws RuleAdmissionError if a rule is not admissible.
  RewriteSystem(std::vector<Rule> rules, std::vector<Signature> signatures);

  std::span<const Rule> rules() const { return rules_; }
  std::span<const Signature> signatures() const { return signatures_; }
  bool defines(const std::string& fn) const { return find_signature(signatures_, fn) != nullptr; }
  std::vector<Rule> rules_for(const std::string& fn) const;

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;

 private:
  std::vector<Rule> rules_;
  std::vector<Signature> signatures_;
};

/// Every variable occurs at most once in the left-hand side.
bool is_left_linear(const Term& lhs);

/// Throws RuleAdmissionError unless the lhs head has a signature, the lhs
/// arguments are free of defined symbols, the lhs is linear and
/// vars(rhs) is a subset of vars(lhs).
void check_rule_admissible(const Rule& rule, std::span<const Signature> signatures);

/// Drops all guards; the result is the plain system that gets printed.
RewriteSystem strip_guards(const RewriteSystem& sys);

/// Renames each rule's variables to fresh names in first-occurrence order.
RewriteSystem standardize_variables(const RewriteSystem& sys, NameSupply& names);

constexpr std::size_t kDefaultStepLimit = 10000;

enum class EvalStatus { kNormalForm, kStepLimitExceeded, kStuck };

struct EvalResult {
  EvalStatus status = EvalStatus::kNormalForm;
  /// Normal form, or the stuck defined-symbol subterm.
  Term term = Term::var("_");
  std::size_t steps = 0;

  bool ok() const { return status == EvalStatus::kNormalForm; }
};

/// Leftmost-innermost evaluation, first matching rule wins. Free variables of
/// `t` are rigid atoms.
EvalResult evaluate(const RewriteSystem& sys, const Term& t, std::size_t step_limit = kDefaultStepLimit);

struct CoverageCheck {
  bool covered = false;
  EvalResult evaluation;
};

/// Evaluates ex's lhs with its variables frozen and compares to ex.rhs.
CoverageCheck check_coverage(const RewriteSystem& sys, const IOEquation& ex,
                             std::size_t step_limit = kDefaultStepLimit);
bool covers(const RewriteSystem& sys, const IOEquation& ex, std::size_t step_limit = kDefaultStepLimit);

struct CoverageSummary {
  bool all_covered = true;
  std::vector<IOEquation> uncovered;
};

CoverageSummary covers_all(const RewriteSystem& sys, std::span<const IOEquation> examples,
                           std::size_t step_limit = kDefaultStepLimit);

}  // namespace recsynth
