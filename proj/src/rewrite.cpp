#include "recsynth/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "recsynth/errors.hpp"

namespace recsynth {

std::string to_string(const Rule& rule) { return to_string(rule.lhs) + " = " + to_string(rule.rhs); }

namespace {

bool linear_into(const Term& t, std::set<std::string>& seen) {
  if (t.is_var()) return seen.insert(t.name()).second;
  for (const auto& a : t.args()) {
    if (!linear_into(a, seen)) return false;
  }
  return true;
}

const Term* find_defined(const Term& t, std::span<const Signature> sigs) {
  if (t.is_var()) return nullptr;
  if (find_signature(sigs, t.name()) != nullptr) return &t;
  for (const auto& a : t.args()) {
    if (const auto* d = find_defined(a, sigs)) return d;
  }
  return nullptr;
}

}  // namespace

bool is_left_linear(const Term& lhs) {
  std::set<std::string> seen;
  return linear_into(lhs, seen);
}

void check_rule_admissible(const Rule& rule, std::span<const Signature> signatures) {
  const std::string text = to_string(rule);
  if (rule.lhs.is_var()) throw RuleAdmissionError("rule lhs is a variable: " + text);
  const auto* sig = find_signature(signatures, rule.lhs.name());
  if (sig == nullptr) throw RuleAdmissionError("rule lhs head has no signature: " + text);
  if (sig->arity() != rule.lhs.arity()) throw RuleAdmissionError("rule lhs arity mismatch: " + text);
  for (const auto& a : rule.lhs.args()) {
    if (find_defined(a, signatures) != nullptr) {
      throw RuleAdmissionError("defined symbol inside rule lhs pattern: " + text);
    }
  }
  if (!is_left_linear(rule.lhs)) throw RuleAdmissionError("non-linear rule lhs: " + text);
  auto lhs_vars = vars(rule.lhs);
  for (const auto& v : vars(rule.rhs)) {
    if (std::find(lhs_vars.begin(), lhs_vars.end(), v) == lhs_vars.end()) {
      throw RuleAdmissionError("rhs variable '" + v + "' not bound by lhs: " + text);
    }
  }
  if (rule.guard && rule.guard->position >= rule.lhs.arity()) {
    throw RuleAdmissionError("guard position out of range: " + text);
  }
}

RewriteSystem::RewriteSystem(std::vector<Rule> rules, std::vector<Signature> signatures)
    : rules_(std::move(rules)), signatures_(std::move(signatures)) {
  for (const auto& r : rules_) check_rule_admissible(r, signatures_);
}

std::vector<Rule> RewriteSystem::rules_for(const std::string& fn) const {
  std::vector<Rule> out;
  for (const auto& r : rules_) {
    if (r.lhs.name() == fn) out.push_back(r);
  }
  return out;
}

RewriteSystem strip_guards(const RewriteSystem& sys) {
  std::vector<Rule> rules(sys.rules().begin(), sys.rules().end());
  for (auto& r : rules) r.guard.reset();
  return RewriteSystem(std::move(rules), {sys.signatures().begin(), sys.signatures().end()});
}

RewriteSystem standardize_variables(const RewriteSystem& sys, NameSupply& names) {
  std::vector<Rule> rules;
  for (const auto& r : sys.rules()) {
    Substitution renaming;
    for (const auto& v : vars(r.lhs)) renaming.emplace(v, Term::var(names.fresh_var()));
    rules.push_back(Rule{substitute(r.lhs, renaming), substitute(r.rhs, renaming), r.guard});
  }
  return RewriteSystem(std::move(rules), {sys.signatures().begin(), sys.signatures().end()});
}

namespace {

class Evaluator {
 public:
  Evaluator(const RewriteSystem& sys, std::size_t limit) : sys_(sys), limit_(limit) {
    for (const auto& r : sys.rules()) index_[r.lhs.name()].push_back(&r);
  }

  EvalResult run(const Term& t) {
    EvalResult result;
    Term out = t;
    if (normalize(t, out)) {
      result.term = std::move(out);
    } else {
      result.status = failure_;
      result.term = failed_;
    }
    result.steps = steps_;
    return result;
  }

 private:
  bool normalize(Term t, Term& out) {
    for (;;) {
      if (t.is_var()) {
        out = std::move(t);
        return true;
      }
      std::vector<Term> args;
      args.reserve(t.arity());
      for (const auto& a : t.args()) {
        Term n = a;
        if (!normalize(a, n)) return false;
        args.push_back(std::move(n));
      }
      Term current = Term::app(t.name(), std::move(args));
      if (!sys_.defines(current.name())) {
        out = std::move(current);
        return true;
      }
      const Rule* fired = nullptr;
      Substitution sigma;
      auto it = index_.find(current.name());
      if (it != index_.end()) {
        for (const Rule* r : it->second) {
          if (r->guard) {
            const Term& a = current.arg(r->guard->position);
            if (a.is_var() || a.name() != r->guard->constructor) continue;
          }
          if (auto m = match_pattern(r->lhs, current)) {
            fired = r;
            sigma = std::move(*m);
            break;
          }
        }
      }
      if (fired == nullptr) {
        failure_ = EvalStatus::kStuck;
        failed_ = std::move(current);
        return false;
      }
      if (++steps_ > limit_) {
        failure_ = EvalStatus::kStepLimitExceeded;
        failed_ = std::move(current);
        return false;
      }
      t = substitute(fired->rhs, sigma);
    }
  }

  const RewriteSystem& sys_;
  std::size_t limit_;
  std::size_t steps_ = 0;
  std::map<std::string, std::vector<const Rule*>> index_;
  EvalStatus failure_ = EvalStatus::kNormalForm;
  Term failed_ = Term::var("_");
};

}  // namespace

EvalResult evaluate(const RewriteSystem& sys, const Term& t, std::size_t step_limit) {
  return Evaluator(sys, step_limit).run(t);
}

CoverageCheck check_coverage(const RewriteSystem& sys, const IOEquation& ex, std::size_t step_limit) {
  CoverageCheck check;
  check.evaluation = evaluate(sys, ex.lhs(), step_limit);
  check.covered = check.evaluation.ok() && check.evaluation.term == ex.rhs;
  return check;
}

bool covers(const RewriteSystem& sys, const IOEquation& ex, std::size_t step_limit) {
  return check_coverage(sys, ex, step_limit).covered;
}

CoverageSummary covers_all(const RewriteSystem& sys, std::span<const IOEquation> examples, std::size_t step_limit) {
  CoverageSummary summary;
  for (const auto& ex : examples) {
    if (!covers(sys, ex, step_limit)) {
      summary.all_covered = false;
      summary.uncovered.push_back(ex);
    }
  }
  return summary;
}

}  // namespace recsynth
