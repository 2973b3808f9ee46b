#include "recsynth/learner.hpp"

#include <algorithm>
#include <stdexcept>

namespace recsynth {

std::vector<IOEquation> split_by_constructor(std::span<const IOEquation> examples, std::size_t position,
                                             const ConstructorAlt& alt) {
  std::vector<IOEquation> out;
  for (const auto& ex : examples) {
    if (position >= ex.lhs_args.size()) throw std::out_of_range("argument position out of range");
    const Term& a = ex.lhs_args[position];
    if (a.is_app() && a.name() == alt.name) out.push_back(ex);
  }
  return out;
}

SchemeEquation build_scheme(const SortEnv& env, const Signature& sig, std::size_t position,
                            const ConstructorAlt& alt, NameSupply& names) {
  if (position >= sig.arity()) throw std::out_of_range("argument position out of range");
  const std::string& sort = sig.domain[position];
  const auto* decl = env.find_sort(sort);
  if (decl == nullptr || std::find(decl->alts.begin(), decl->alts.end(), alt) == decl->alts.end()) {
    throw std::invalid_argument("'" + alt.name + "' is not an alternative of sort " + sort);
  }

  std::vector<Term> others(sig.arity(), Term::var("_"));
  for (std::size_t j = 0; j < sig.arity(); ++j) {
    if (j != position) others[j] = Term::var(names.fresh_var());
  }
  std::vector<Term> fields;
  for (std::size_t k = 0; k < alt.arity(); ++k) fields.push_back(Term::var(names.fresh_var()));

  auto with_arg = [&](const Term& a) {
    std::vector<Term> args = others;
    args[position] = a;
    return Term::app(sig.name, std::move(args));
  };

  SchemeEquation scheme;
  scheme.target = sig.name;
  scheme.position = position;
  scheme.alt = alt;
  scheme.lhs = with_arg(Term::app(alt.name, fields));

  const auto cls = classify_args(env, sort, alt);
  std::vector<Term> aux_args;
  Signature aux{names.fresh_function(), {}, sig.range};
  for (std::size_t j = 0; j < sig.arity(); ++j) {
    if (j == position) continue;
    aux_args.push_back(others[j]);
    aux.domain.push_back(sig.domain[j]);
  }
  for (auto k : cls.non_recursive) {
    aux_args.push_back(fields[k]);
    aux.domain.push_back(alt.arg_sorts[k]);
  }
  for (auto k : cls.recursive) {
    aux_args.push_back(with_arg(fields[k]));
    aux.domain.push_back(sig.range);
  }
  scheme.rhs = Term::app(aux.name, std::move(aux_args));
  scheme.aux_signature = std::move(aux);
  return scheme;
}

AuxDerivation derive_aux_examples(const SchemeEquation& scheme, std::span<const IOEquation> all_examples,
                                  std::span<const IOEquation> subset) {
  AuxDerivation out;
  for (const auto& member : subset) {
    auto binding = match_pattern(scheme.lhs, member.lhs());
    if (!binding) throw std::invalid_argument("subset member does not match the scheme: " + to_string(member));

    std::vector<Term> args;
    bool resolved = true;
    for (const auto& a : scheme.rhs.args()) {
      Term value = substitute(a, *binding);
      if (!(a.is_app() && a.name() == scheme.target)) {
        args.push_back(std::move(value));
        continue;
      }
      const IOEquation* chosen = nullptr;
      Term result = value;
      for (const auto& ex : all_examples) {
        auto renaming = renaming_match(ex.lhs(), value);
        if (!renaming) continue;
        Term r = substitute(ex.rhs, *renaming);
        if (chosen == nullptr) {
          chosen = &ex;
          result = std::move(r);
        } else if (r != result) {
          out.ambiguous.push_back(AmbiguousCall{value, *chosen, ex});
          break;
        }
      }
      if (chosen == nullptr) {
        out.underivable.push_back(UnresolvedCall{member, value});
        resolved = false;
        break;
      }
      args.push_back(std::move(result));
    }
    if (!resolved) continue;
    out.aux_examples.push_back(IOEquation{scheme.aux_name(), std::move(args), member.rhs});
    out.sources.push_back(member);
  }
  return out;
}

ExampleSetKey normalize_example_set(std::span<const IOEquation> examples) {
  ExampleSetKey key;
  for (const auto& ex : examples) {
    std::vector<std::string> order;
    for (const auto& a : ex.lhs_args) collect_vars(a, order);
    collect_vars(ex.rhs, order);
    Substitution canon;
    for (std::size_t i = 0; i < order.size(); ++i) canon.emplace(order[i], Term::var("_" + std::to_string(i)));
    IOEquation n{"#", {}, substitute(ex.rhs, canon)};
    for (const auto& a : ex.lhs_args) n.lhs_args.push_back(substitute(a, canon));
    key.push_back(std::move(n));
  }
  std::sort(key.begin(), key.end());
  return key;
}

bool detect_repetition(std::span<const ExampleSetKey> history, std::span<const IOEquation> current) {
  if (history.empty()) return false;
  const auto key = normalize_example_set(current);
  return std::find(history.begin(), history.end(), key) != history.end();
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::kUnderivableAuxExamples: return "underivable-aux-examples";
    case FailureReason::kUncoveredExamples: return "uncovered-examples";
    case FailureReason::kCapExceeded: return "cap-exceeded";
    case FailureReason::kRepeatedExampleSet: return "repeated-example-set";
    case FailureReason::kNoDefinition: return "no-definition";
  }
  return "?";
}

namespace {

struct Definition {
  std::vector<Rule> rules;  // the function's own rules, then its auxiliaries'
  std::vector<Signature> aux_signatures;
  std::map<std::string, std::vector<IOEquation>> aux_examples;
};

std::string describe(const ConstructorAlt& alt) {
  if (alt.arity() == 0) return alt.name;
  std::string s = alt.name + "(";
  for (std::size_t i = 0; i < alt.arity(); ++i) s += (i > 0 ? "," : "") + alt.arg_sorts[i];
  return s + ")";
}

class Learner {
 public:
  Learner(const SortEnv& env, const InduceConfig& config, NameSupply& names, InduceReport& report)
      : env_(env), config_(config), names_(names), report_(report) {}

  std::optional<Definition> induce_function(const Signature& sig, const std::vector<IOEquation>& examples,
                                            std::size_t layer) {
    const std::size_t depth = 2 * layer;
    trace(depth, TraceKind::kInduce, sig.name);
    std::optional<Definition> result;
    if (config_.try_whole_set_lgg_first) result = whole_set(sig, examples, layer);
    for (std::size_t p = 0; !result && p < sig.arity(); ++p) {
      trace(depth + 1, TraceKind::kTryingPosition, std::to_string(p + 1));
      result = try_position(sig, examples, p, layer);
    }
    trace(depth, TraceKind::kInduce, sig.name);
    return result;
  }

  bool cap_hit = false;
  bool repetition_hit = false;
  std::vector<UnderivableRecord> underivable;

 private:
  void trace(std::size_t depth, TraceKind kind, std::string text) {
    report_.trace.push_back(TraceEvent{depth, kind, std::move(text)});
  }

  std::optional<Definition> whole_set(const Signature& sig, const std::vector<IOEquation>& examples,
                                      std::size_t layer) {
    auto rule = generalize_examples(sig.name, examples, config_.depth, names_);
    if (!rule || !is_left_linear(rule->lhs)) return std::nullopt;
    Definition def;
    def.rules.push_back(Rule{rule->lhs, rule->rhs, std::nullopt});
    RewriteSystem sys(def.rules, {sig});
    if (!covers_all(sys, examples, config_.step_limit).all_covered) return std::nullopt;
    trace(2 * layer + 1, TraceKind::kAntiUnifier, to_string(rule->lhs) + " = " + to_string(rule->rhs));
    trace(2 * layer + 1, TraceKind::kAllExamplesCovered, {});
    return def;
  }

  std::optional<Definition> try_position(const Signature& sig, const std::vector<IOEquation>& examples,
                                         std::size_t p, std::size_t layer) {
    const std::size_t depth = 2 * layer + 1;
    Definition def;
    std::vector<Rule> aux_rules;
    for (const auto& alt : env_.sort(sig.domain[p]).alts) {
      const std::string pos_text = sig.name + "," + std::to_string(p + 1) + "," + describe(alt);
      trace(depth, TraceKind::kInducePos, pos_text);
      bool ok = induce_case(sig, examples, p, alt, layer, def, aux_rules);
      trace(depth, TraceKind::kInducePos, pos_text);
      if (!ok) return std::nullopt;
    }

    def.rules.insert(def.rules.end(), aux_rules.begin(), aux_rules.end());
    std::vector<Signature> sigs{sig};
    sigs.insert(sigs.end(), def.aux_signatures.begin(), def.aux_signatures.end());
    RewriteSystem candidate(def.rules, sigs);
    auto coverage = covers_all(candidate, examples, config_.step_limit);
    if (!coverage.all_covered) {
      trace(depth, TraceKind::kUncoveredExamples, to_string(coverage.uncovered));
      return std::nullopt;
    }
    trace(depth, TraceKind::kAllExamplesCovered, {});
    return def;
  }

  // Adds the rules for one constructor case; false abandons the position.
  bool induce_case(const Signature& sig, const std::vector<IOEquation>& examples, std::size_t p,
                   const ConstructorAlt& alt, std::size_t layer, Definition& def, std::vector<Rule>& aux_rules) {
    const std::size_t depth = 2 * layer + 2;
    auto subset = split_by_constructor(examples, p, alt);
    trace(depth, TraceKind::kMatchingExamples, to_string(subset));
    if (subset.empty()) {
      trace(depth, TraceKind::kNoExamples, {});
      return true;
    }

    auto rule = generalize_examples(sig.name, subset, config_.depth, names_);
    if (rule && is_left_linear(rule->lhs)) {
      trace(depth, TraceKind::kAntiUnifier, to_string(rule->lhs) + " = " + to_string(rule->rhs));
      def.rules.push_back(Rule{rule->lhs, rule->rhs, Guard{p, alt.name}});
      return true;
    }
    if (classify_args(env_, sig.domain[p], alt).recursive.empty()) {
      trace(depth, TraceKind::kNoAntiUnifier, to_string(subset));
      return false;
    }
    if (aux_count_ >= config_.max_aux_functions || layer + 1 > config_.max_recursion_depth) {
      trace(depth, TraceKind::kCapExceeded,
            aux_count_ >= config_.max_aux_functions
                ? "auxiliary function limit " + std::to_string(config_.max_aux_functions)
                : "recursion depth limit " + std::to_string(config_.max_recursion_depth));
      cap_hit = true;
      return false;
    }

    auto scheme = build_scheme(env_, sig, p, alt, names_);
    ++aux_count_;
    trace(depth, TraceKind::kNewRecursionScheme, to_string(scheme.lhs) + " = " + to_string(scheme.rhs));
    auto derivation = derive_aux_examples(scheme, examples, subset);
    for (std::size_t i = 0; i < derivation.aux_examples.size(); ++i) {
      const auto& src = derivation.sources[i];
      const auto& aux = derivation.aux_examples[i];
      trace(depth, TraceKind::kDeriveNewEquation,
            to_string(src.rhs) + " = " + to_string(src.lhs()) + " = " + to_string(aux.lhs()));
    }
    for (const auto& u : derivation.underivable) {
      trace(depth, TraceKind::kUnderivable, to_string(u.member) + " needs " + to_string(u.call));
      underivable.push_back(UnderivableRecord{scheme.aux_name(), layer + 1, u.member, u.call});
    }
    for (const auto& a : derivation.ambiguous) {
      std::string msg = to_string(a.call) + " resolved by " + to_string(a.chosen) + ", also matches " +
                        to_string(a.other);
      trace(depth, TraceKind::kAmbiguousLookup, msg);
      report_.warnings.push_back("ambiguous lookup: " + msg);
    }

    // Derived sets are kept sorted and free of duplicates.
    auto aux_examples = derivation.aux_examples;
    std::sort(aux_examples.begin(), aux_examples.end());
    aux_examples.erase(std::unique(aux_examples.begin(), aux_examples.end()), aux_examples.end());
    if (aux_examples.empty()) return false;

    history_.push_back(normalize_example_set(examples));
    if (detect_repetition(history_, aux_examples)) {
      trace(depth, TraceKind::kRepeatedExamples, scheme.aux_name() + " " + to_string(aux_examples));
      history_.pop_back();
      repetition_hit = true;
      return false;
    }
    auto sub = induce_function(scheme.aux_signature, aux_examples, layer + 1);
    history_.pop_back();
    if (!sub) return false;

    def.rules.push_back(Rule{scheme.lhs, scheme.rhs, Guard{p, alt.name}});
    aux_rules.insert(aux_rules.end(), sub->rules.begin(), sub->rules.end());
    def.aux_signatures.push_back(scheme.aux_signature);
    def.aux_signatures.insert(def.aux_signatures.end(), sub->aux_signatures.begin(), sub->aux_signatures.end());
    def.aux_examples.emplace(scheme.aux_name(), std::move(aux_examples));
    def.aux_examples.merge(sub->aux_examples);
    return true;
  }

  const SortEnv& env_;
  const InduceConfig& config_;
  NameSupply& names_;
  InduceReport& report_;
  std::size_t aux_count_ = 0;
  std::vector<ExampleSetKey> history_;
};

void reserve_names(const Term& t, NameSupply& names) {
  names.reserve(t.name());
  for (const auto& a : t.args()) reserve_names(a, names);
}

}  // namespace

InduceReport induce(const std::string& target, std::span<const IOEquation> examples, const SortEnv& env,
                    std::span<const Signature> signatures, const InduceConfig& config, NameSupply& names) {
  const auto* sig = find_signature(signatures, target);
  if (sig == nullptr) throw std::invalid_argument("no signature for '" + target + "'");
  if (examples.empty()) throw std::invalid_argument("no i/o equations for '" + target + "'");
  for (const auto& ex : examples) {
    if (ex.fn != target) throw std::invalid_argument("i/o equation for another function: " + to_string(ex));
    reserve_names(ex.lhs(), names);
    reserve_names(ex.rhs, names);
  }
  for (const auto& s : signatures) names.reserve(s.name);
  for (const auto& d : env.sorts()) {
    for (const auto& alt : d.alts) names.reserve(alt.name);
  }

  InduceReport report;
  report.target = target;
  Learner learner(env, config, names, report);
  std::vector<IOEquation> inputs(examples.begin(), examples.end());
  auto def = learner.induce_function(*sig, inputs, 0);

  if (def) {
    std::vector<Signature> sigs{*sig};
    sigs.insert(sigs.end(), def->aux_signatures.begin(), def->aux_signatures.end());
    auto system = strip_guards(RewriteSystem(def->rules, sigs));
    auto coverage = covers_all(system, inputs, config.step_limit);
    if (coverage.all_covered) {
      report.system = std::move(system);
      report.aux_signatures = def->aux_signatures;
      report.aux_examples = std::move(def->aux_examples);
      return report;
    }
    InduceFailure failure;
    failure.reason = FailureReason::kUncoveredExamples;
    failure.message = "learned system covers " + std::to_string(inputs.size() - coverage.uncovered.size()) +
                      " of " + std::to_string(inputs.size()) + " i/o equations";
    failure.uncovered = std::move(coverage.uncovered);
    failure.candidate = std::move(system);
    failure.underivable = std::move(learner.underivable);
    report.failure = std::move(failure);
    return report;
  }

  InduceFailure failure;
  failure.underivable = std::move(learner.underivable);
  if (!failure.underivable.empty()) {
    const auto& first = failure.underivable.front();
    failure.reason = FailureReason::kUnderivableAuxExamples;
    failure.message = "no i/o equations derivable for " + first.aux + " (layer " + std::to_string(first.layer) +
                      ") from " + to_string(first.member) + ": value of " + to_string(first.missing_call) +
                      " unknown";
  } else if (learner.cap_hit) {
    failure.reason = FailureReason::kCapExceeded;
    failure.message = "auxiliary function or recursion depth limit reached";
  } else if (learner.repetition_hit) {
    failure.reason = FailureReason::kRepeatedExampleSet;
    failure.message = "auxiliary i/o equations repeat an ancestor's set";
  } else {
    failure.reason = FailureReason::kNoDefinition;
    failure.message = "no argument position yields a covering structurally recursive definition";
  }
  report.failure = std::move(failure);
  return report;
}

}  // namespace recsynth
