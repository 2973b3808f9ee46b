#include "recsynth/simplify.hpp"

#include <map>
#include <vector>

namespace recsynth {

namespace {

using PositionSets = std::map<std::string, std::set<std::size_t>>;

bool occurs_relevantly(const Term& t, const std::string& v, const PositionSets& irrelevant) {
  if (t.is_var()) return t.name() == v;
  auto it = irrelevant.find(t.name());
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (it != irrelevant.end() && it->second.count(i) > 0) continue;
    if (occurs_relevantly(t.arg(i), v, irrelevant)) return true;
  }
  return false;
}

Term drop_args(const Term& t, const PositionSets& irrelevant) {
  if (t.is_var()) return t;
  auto it = irrelevant.find(t.name());
  std::vector<Term> args;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (it != irrelevant.end() && it->second.count(i) > 0) continue;
    args.push_back(drop_args(t.arg(i), irrelevant));
  }
  return Term::app(t.name(), std::move(args));
}

bool calls(const Term& t, const std::string& fn) {
  if (t.is_var()) return false;
  if (t.name() == fn) return true;
  for (const auto& a : t.args()) {
    if (calls(a, fn)) return true;
  }
  return false;
}

Term inline_calls(const Term& t, const Rule& def) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(inline_calls(a, def));
  if (t.name() != def.lhs.name()) return Term::app(t.name(), std::move(args));
  Substitution actuals;
  for (std::size_t i = 0; i < args.size(); ++i) actuals.emplace(def.lhs.arg(i).name(), args[i]);
  return substitute(def.rhs, actuals);
}

bool inlinable(const std::vector<Rule>& rules, const std::string& fn, Rule& only) {
  int count = 0;
  for (const auto& r : rules) {
    if (r.lhs.name() != fn) continue;
    if (++count > 1) return false;
    only = r;
  }
  if (count != 1 || only.guard || calls(only.rhs, fn) || !is_left_linear(only.lhs)) return false;
  for (const auto& a : only.lhs.args()) {
    if (!a.is_var()) return false;
  }
  return true;
}

}  // namespace

RewriteSystem prune_irrelevant_args(const RewriteSystem& sys, const std::set<std::string>& fixed_arity) {
  PositionSets irrelevant;
  for (const auto& sig : sys.signatures()) {
    if (fixed_arity.count(sig.name) > 0) continue;
    auto& s = irrelevant[sig.name];
    for (std::size_t i = 0; i < sig.arity(); ++i) s.insert(i);
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : sys.rules()) {
      auto it = irrelevant.find(r.lhs.name());
      if (it == irrelevant.end()) continue;
      for (auto pos_it = it->second.begin(); pos_it != it->second.end();) {
        const std::size_t j = *pos_it;
        const Term& pattern = r.lhs.arg(j);
        bool relevant = !pattern.is_var() || (r.guard && r.guard->position == j) ||
                        occurs_relevantly(r.rhs, pattern.name(), irrelevant);
        if (relevant) {
          pos_it = it->second.erase(pos_it);
          changed = true;
        } else {
          ++pos_it;
        }
      }
    }
  }

  std::vector<Signature> sigs;
  for (const auto& sig : sys.signatures()) {
    Signature s = sig;
    auto it = irrelevant.find(sig.name);
    if (it != irrelevant.end()) {
      s.domain.clear();
      for (std::size_t i = 0; i < sig.arity(); ++i) {
        if (it->second.count(i) == 0) s.domain.push_back(sig.domain[i]);
      }
    }
    sigs.push_back(std::move(s));
  }
  std::vector<Rule> rules;
  for (const auto& r : sys.rules()) {
    Rule out{drop_args(r.lhs, irrelevant), drop_args(r.rhs, irrelevant), r.guard};
    if (out.guard) {
      auto it = irrelevant.find(r.lhs.name());
      if (it != irrelevant.end()) {
        std::size_t shift = 0;
        for (auto i : it->second) shift += i < out.guard->position ? 1 : 0;
        out.guard->position -= shift;
      }
    }
    rules.push_back(std::move(out));
  }
  return RewriteSystem(std::move(rules), std::move(sigs));
}

RewriteSystem inline_single_rule_aux(const RewriteSystem& sys, const std::set<std::string>& fixed_arity) {
  std::vector<Rule> rules(sys.rules().begin(), sys.rules().end());
  std::vector<Signature> sigs(sys.signatures().begin(), sys.signatures().end());

  for (bool changed = true; changed;) {
    changed = false;
    for (auto sig = sigs.begin(); sig != sigs.end(); ++sig) {
      Rule def;
      if (fixed_arity.count(sig->name) > 0 || !inlinable(rules, sig->name, def)) continue;
      std::vector<Rule> next;
      for (const auto& r : rules) {
        if (r.lhs.name() == sig->name) continue;
        next.push_back(Rule{r.lhs, inline_calls(r.rhs, def), r.guard});
      }
      rules = std::move(next);
      sigs.erase(sig);
      changed = true;
      break;
    }
  }
  return RewriteSystem(std::move(rules), std::move(sigs));
}

}  // namespace recsynth
