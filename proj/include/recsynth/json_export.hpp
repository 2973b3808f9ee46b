#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "recsynth/driver.hpp"

namespace recsynth {

/// Identifies the document layout written by export_json.
inline constexpr const char* kReportSchema = "recsynth-report/1";

/// `{"var": name}` or `{"head": name, "args": [...]}`.
nlohmann::json term_to_json(const Term& t);
/// Throws std::invalid_argument on a malformed node.
Term term_from_json(const nlohmann::json& j);

/// Document fields:
///   schema      kReportSchema
///   target      function being learned
///   sorts       [{name, alts: [{name, args: [sort...]}]}]
///   signatures  [{name, domain: [sort...], range}]
///   rules       [{lhs: term, rhs: term}]   printed system, [] on failure
///   examples    [{lhs: term, rhs: term}]
///   coverage    {all_covered: bool, uncovered: [{lhs, rhs}]}
///   trace       [{depth, event, text}]
///   warnings    [string]
///   failure     null or {reason, message, underivable: [{aux, layer,
///               member: {lhs, rhs}, missing_call}], uncovered: [{lhs, rhs}],
///               candidate: [{lhs, rhs}] or null}
nlohmann::json export_json(const Problem& problem, const RunResult& result);

/// Rules of an exported document's `rules` array.
std::vector<Rule> rules_from_json(const nlohmann::json& doc);

}  // namespace recsynth
