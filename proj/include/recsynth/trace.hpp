#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace recsynth {

enum class TraceKind {
  kInduce,
  kTryingPosition,
  kInducePos,
  kMatchingExamples,
  kNoExamples,
  kAntiUnifier,
  kNoAntiUnifier,
  kNewRecursionScheme,
  kDeriveNewEquation,
  kUnderivable,
  kAmbiguousLookup,
  kRepeatedExamples,
  kCapExceeded,
  kUncoveredExamples,
  kAllExamplesCovered,
};

struct TraceEvent {
  std::size_t depth = 0;
  TraceKind kind = TraceKind::kInduce;
  std::string text;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Fixed vocabulary word for a kind, e.g. "matching examples".
std::string_view label(TraceKind kind);

/// One line per event, indented with ". " per nesting level.
std::string render(const TraceEvent& event);
std::string emit_trace(std::span<const TraceEvent> events);

}  // namespace recsynth
