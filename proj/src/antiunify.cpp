#include "recsynth/antiunify.hpp"

#include <algorithm>
#include <stdexcept>

namespace recsynth {

DepthLimit DepthLimit::at(unsigned d) {
  if (d == 0) throw std::invalid_argument("anti-unification depth must be at least 1");
  return DepthLimit(d);
}

const std::string& GenStore::variable_for(const std::vector<Term>& tuple) {
  auto it = entries_.find(tuple);
  if (it == entries_.end()) it = entries_.emplace(tuple, names_->fresh_var()).first;
  return it->second;
}

Substitution GenStore::witness(std::size_t i) const {
  Substitution sigma;
  for (const auto& [tuple, v] : entries_) sigma.emplace(v, tuple.at(i));
  return sigma;
}

namespace {

bool same_head(std::span<const Term> ts) {
  const Term& first = ts.front();
  return std::all_of(ts.begin() + 1, ts.end(), [&](const Term& t) {
    return t.is_var() == first.is_var() && t.name() == first.name() && t.arity() == first.arity();
  });
}

std::vector<Term> column(std::span<const Term> ts, std::size_t i) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.arg(i));
  return out;
}

}  // namespace

Term lgg(std::span<const Term> ts, GenStore& store) {
  if (ts.empty()) throw std::invalid_argument("lgg of an empty tuple");
  if (!same_head(ts)) return Term::var(store.variable_for({ts.begin(), ts.end()}));
  const Term& first = ts.front();
  if (first.is_var()) return first;
  std::vector<Term> args;
  for (std::size_t i = 0; i < first.arity(); ++i) args.push_back(lgg(column(ts, i), store));
  return Term::app(first.name(), std::move(args));
}

Term lgg(std::span<const Term> ts, GenStore& store, DepthLimit depth, unsigned start_depth) {
  if (ts.empty()) throw std::invalid_argument("lgg of an empty tuple");
  if (!depth.keeps_head_at(start_depth) || !same_head(ts)) {
    return Term::var(store.variable_for({ts.begin(), ts.end()}));
  }
  const Term& first = ts.front();
  if (first.is_var()) return first;
  std::vector<Term> args;
  for (std::size_t i = 0; i < first.arity(); ++i) {
    args.push_back(lgg(column(ts, i), store, depth, start_depth + 1));
  }
  return Term::app(first.name(), std::move(args));
}

bool variable_condition(const CandidateRule& rule) {
  auto lhs_vars = vars(rule.lhs);
  for (const auto& v : vars(rule.rhs)) {
    if (std::find(lhs_vars.begin(), lhs_vars.end(), v) == lhs_vars.end()) return false;
  }
  return true;
}

CandidateRule anti_unify_examples(const std::string& fn, std::span<const IOEquation> examples,
                                  DepthLimit depth, NameSupply& names) {
  if (examples.empty()) throw std::invalid_argument("anti-unification needs at least one example");
  const std::size_t arity = examples.front().lhs_args.size();
  GenStore store(names);
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Term> col;
    for (const auto& ex : examples) {
      if (ex.lhs_args.size() != arity) throw std::invalid_argument("examples of differing arity");
      col.push_back(ex.lhs_args[i]);
    }
    args.push_back(lgg(col, store, depth, 2));
  }
  std::vector<Term> rhss;
  for (const auto& ex : examples) rhss.push_back(ex.rhs);
  Term rhs = lgg(rhss, store, depth, 1);
  return CandidateRule{Term::app(fn, std::move(args)), std::move(rhs)};
}

std::optional<CandidateRule> generalize_examples(const std::string& fn, std::span<const IOEquation> examples,
                                                 DepthLimit depth, NameSupply& names) {
  auto rule = anti_unify_examples(fn, examples, depth, names);
  if (!variable_condition(rule)) return std::nullopt;
  return rule;
}

}  // namespace recsynth
