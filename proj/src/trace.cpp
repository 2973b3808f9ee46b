#include "recsynth/trace.hpp"

namespace recsynth {

std::string_view label(TraceKind kind) {
  switch (kind) {
    case TraceKind::kInduce: return "induce";
    case TraceKind::kTryingPosition: return "trying argument position";
    case TraceKind::kInducePos: return "inducePos";
    case TraceKind::kMatchingExamples: return "matching examples";
    case TraceKind::kNoExamples: return "no examples";
    case TraceKind::kAntiUnifier: return "anti-unifier";
    case TraceKind::kNoAntiUnifier: return "no anti-unifier";
    case TraceKind::kNewRecursionScheme: return "new recursion scheme";
    case TraceKind::kDeriveNewEquation: return "derive new equation";
    case TraceKind::kUnderivable: return "underivable example";
    case TraceKind::kAmbiguousLookup: return "ambiguous lookup";
    case TraceKind::kRepeatedExamples: return "repeated example set";
    case TraceKind::kCapExceeded: return "cap exceeded";
    case TraceKind::kUncoveredExamples: return "uncovered examples";
    case TraceKind::kAllExamplesCovered: return "all examples covered";
  }
  return "?";
}

std::string render(const TraceEvent& event) {
  std::string line;
  for (std::size_t i = 0; i < event.depth; ++i) line += ". ";
  line += label(event.kind);
  switch (event.kind) {
    case TraceKind::kInduce:
    case TraceKind::kInducePos:
      line += "(" + event.text + ")";
      break;
    case TraceKind::kNoExamples:
    case TraceKind::kAllExamplesCovered:
      break;
    default:
      line += ": " + event.text;
  }
  return line;
}

std::string emit_trace(std::span<const TraceEvent> events) {
  std::string out;
  for (const auto& e : events) out += render(e) + "\n";
  return out;
}

}  // namespace recsynth
