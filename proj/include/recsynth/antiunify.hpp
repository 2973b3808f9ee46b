#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recsynth/names.hpp"
#include "recsynth/sorts.hpp"
#include "recsynth/term.hpp"

namespace recsynth {

/// Maximal anti-unification depth. The root of a generalized term sits at
/// depth 1; a node at depth k keeps its (shared) head symbol only if k < d.
class DepthLimit {
 public:
  static DepthLimit unbounded() { return DepthLimit(0); }
  static DepthLimit at(unsigned d);

  bool is_unbounded() const { return d_ == 0; }
  unsigned value() const { return d_; }
  bool keeps_head_at(unsigned depth) const { return d_ == 0 || depth < d_; }

  std::string to_string() const { return is_unbounded() ? "inf" : std::to_string(d_); }
  friend bool operator==(const DepthLimit&, const DepthLimit&) = default;

 private:
  explicit DepthLimit(unsigned d) : d_(d) {}
  unsigned d_;
};

/// Generalization variables of one anti-unification run. Equal term tuples
/// always map to the same variable.
class GenStore {
 public:
  explicit GenStore(NameSupply& names) : names_(&names) {}

  const std::string& variable_for(const std::vector<Term>& tuple);

  /// Substitution mapping every store variable to the i-th tuple component;
  /// instantiates the generalization to the i-th input.
  Substitution witness(std::size_t i) const;

  const std::map<std::vector<Term>, std::string>& entries() const { return entries_; }

 private:
  NameSupply* names_;
  std::map<std::vector<Term>, std::string> entries_;
};

/// Plotkin's least general generalization of a nonempty tuple.
Term lgg(std::span<const Term> ts, GenStore& store);

/// Depth-bounded variant. `start_depth` is the depth assigned to the roots of
/// `ts`. With an unbounded limit the result equals lgg(ts, store).
Term lgg(std::span<const Term> ts, GenStore& store, DepthLimit depth, unsigned start_depth = 1);

struct CandidateRule {
  Term lhs;
  Term rhs;
};

/// vars(rhs) is a subset of the variables of the lhs arguments.
bool variable_condition(const CandidateRule& rule);

/// Anti-unifies the examples' lhs argument tuples and right-hand sides with a
/// single store. Left-hand side arguments start at depth 2 (below the
/// function symbol), the right-hand side at depth 1.
CandidateRule anti_unify_examples(const std::string& fn, std::span<const IOEquation> examples,
                                  DepthLimit depth, NameSupply& names);

/// The anti-unifier of the examples if it satisfies the variable condition.
std::optional<CandidateRule> generalize_examples(const std::string& fn, std::span<const IOEquation> examples,
                                                 DepthLimit depth, NameSupply& names);

}  // namespace recsynth
