#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recsynth/antiunify.hpp"
#include "recsynth/names.hpp"
#include "recsynth/rewrite.hpp"
#include "recsynth/sorts.hpp"
#include "recsynth/trace.hpp"

namespace recsynth {

struct InduceConfig {
  DepthLimit depth = DepthLimit::unbounded();
  /// Total auxiliary functions one run may introduce.
  std::size_t max_aux_functions = 50;
  /// Deepest auxiliary layer (the target itself is layer 0).
  std::size_t max_recursion_depth = 10;
  std::size_t step_limit = kDefaultStepLimit;
  /// Try one rule generalizing all examples before any case split.
  bool try_whole_set_lgg_first = false;
};

/// f(x.., c(y..), x..) = g(x.., y_nonrec.., f(x.., y_rec, x..)..) for one
/// argument position and one constructor alternative.
struct SchemeEquation {
  std::string target;
  std::size_t position = 0;  // 0-based
  ConstructorAlt alt;
  Term lhs = Term::var("_");
  Term rhs = Term::var("_");
  Signature aux_signature;

  const std::string& aux_name() const { return aux_signature.name; }
};

/// Examples whose argument at `position` is headed by `alt`'s constructor.
std::vector<IOEquation> split_by_constructor(std::span<const IOEquation> examples, std::size_t position,
                                             const ConstructorAlt& alt);

/// Requires `alt` to be an alternative of sig.domain[position]. Draws the
/// pattern variables and then the auxiliary name from `names`.
SchemeEquation build_scheme(const SortEnv& env, const Signature& sig, std::size_t position,
                            const ConstructorAlt& alt, NameSupply& names);

struct UnresolvedCall {
  IOEquation member;
  Term call = Term::var("_");
};

struct AmbiguousCall {
  Term call = Term::var("_");
  IOEquation chosen;
  IOEquation other;
};

struct AuxDerivation {
  /// One entry per derivable subset member, in subset order.
  std::vector<IOEquation> aux_examples;
  /// The subset member each aux example came from.
  std::vector<IOEquation> sources;
  std::vector<UnresolvedCall> underivable;
  std::vector<AmbiguousCall> ambiguous;
};

/// Joins the scheme with each subset member; every recursive call on the
/// scheme's rhs is resolved against `all_examples` up to variable renaming,
/// taking the first match in input order.
AuxDerivation derive_aux_examples(const SchemeEquation& scheme, std::span<const IOEquation> all_examples,
                                  std::span<const IOEquation> subset);

/// Example multiset with canonical variable names and an anonymous head
/// symbol, sorted.
using ExampleSetKey = std::vector<IOEquation>;
ExampleSetKey normalize_example_set(std::span<const IOEquation> examples);

/// True iff `current` equals one of the (normalized) ancestor sets up to
/// variable and function-symbol renaming.
bool detect_repetition(std::span<const ExampleSetKey> history, std::span<const IOEquation> current);

enum class FailureReason {
  kUnderivableAuxExamples,
  kUncoveredExamples,
  kCapExceeded,
  kRepeatedExampleSet,
  kNoDefinition,
};

std::string_view to_string(FailureReason reason);

struct UnderivableRecord {
  std::string aux;     // auxiliary whose examples were being derived
  std::size_t layer;   // layer of that auxiliary (target's own aux is 1)
  IOEquation member;   // the example of the caller that could not be joined
  Term missing_call = Term::var("_");
};

struct InduceFailure {
  FailureReason reason = FailureReason::kNoDefinition;
  std::string message;
  std::vector<UnderivableRecord> underivable;
  std::vector<IOEquation> uncovered;
  /// Set when a system was assembled but does not cover all inputs.
  std::optional<RewriteSystem> candidate;
};

struct InduceReport {
  std::string target;
  /// Learned system, before simplification. Absent on failure.
  std::optional<RewriteSystem> system;
  std::vector<Signature> aux_signatures;
  /// Derived i/o equations of every auxiliary in `system`.
  std::map<std::string, std::vector<IOEquation>> aux_examples;
  std::vector<TraceEvent> trace;
  std::vector<std::string> warnings;
  std::optional<InduceFailure> failure;

  bool succeeded() const { return system.has_value(); }
};

/// Learns a definition of `target` covering all `examples`. Failure is
/// reported in the result, never thrown; std::invalid_argument is thrown
/// only for violated preconditions (no examples, unknown target).
InduceReport induce(const std::string& target, std::span<const IOEquation> examples, const SortEnv& env,
                    std::span<const Signature> signatures, const InduceConfig& config, NameSupply& names);

}  // namespace recsynth
