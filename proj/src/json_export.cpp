#include "recsynth/json_export.hpp"

#include <stdexcept>

namespace recsynth {

using nlohmann::json;

namespace {

json equation_json(const Term& lhs, const Term& rhs) { return {{"lhs", term_to_json(lhs)}, {"rhs", term_to_json(rhs)}}; }

json examples_json(std::span<const IOEquation> eqs) {
  json out = json::array();
  for (const auto& e : eqs) out.push_back(equation_json(e.lhs(), e.rhs));
  return out;
}

json rules_json(const RewriteSystem& sys) {
  json out = json::array();
  for (const auto& r : sys.rules()) out.push_back(equation_json(r.lhs, r.rhs));
  return out;
}

}  // namespace

json term_to_json(const Term& t) {
  if (t.is_var()) return {{"var", t.name()}};
  json args = json::array();
  for (const auto& a : t.args()) args.push_back(term_to_json(a));
  return {{"head", t.name()}, {"args", std::move(args)}};
}

Term term_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("term node is not an object");
  if (j.contains("var")) return Term::var(j.at("var").get<std::string>());
  if (!j.contains("head")) throw std::invalid_argument("term node has neither 'var' nor 'head'");
  std::vector<Term> args;
  if (j.contains("args")) {
    for (const auto& a : j.at("args")) args.push_back(term_from_json(a));
  }
  return Term::app(j.at("head").get<std::string>(), std::move(args));
}

json export_json(const Problem& problem, const RunResult& result) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["target"] = problem.target;

  json sorts = json::array();
  for (const auto& d : problem.sort_env.sorts()) {
    json alts = json::array();
    for (const auto& a : d.alts) alts.push_back({{"name", a.name}, {"args", a.arg_sorts}});
    sorts.push_back({{"name", d.name}, {"alts", std::move(alts)}});
  }
  doc["sorts"] = std::move(sorts);

  json sigs = json::array();
  std::span<const Signature> shown = problem.signatures;
  if (result.final_system) shown = result.final_system->signatures();
  for (const auto& s : shown) sigs.push_back({{"name", s.name}, {"domain", s.domain}, {"range", s.range}});
  doc["signatures"] = std::move(sigs);

  doc["rules"] = result.final_system ? rules_json(*result.final_system) : json::array();
  doc["examples"] = examples_json(problem.examples);

  const auto& failure = result.report.failure;
  json coverage;
  coverage["all_covered"] = result.final_system.has_value() && result.final_coverage.all_covered;
  coverage["uncovered"] = examples_json(failure ? failure->uncovered : result.final_coverage.uncovered);
  doc["coverage"] = std::move(coverage);

  json trace = json::array();
  for (const auto& e : result.report.trace) {
    trace.push_back({{"depth", e.depth}, {"event", std::string(label(e.kind))}, {"text", e.text}});
  }
  doc["trace"] = std::move(trace);
  doc["warnings"] = result.report.warnings;

  if (!failure) {
    doc["failure"] = nullptr;
  } else {
    json underivable = json::array();
    for (const auto& u : failure->underivable) {
      underivable.push_back({{"aux", u.aux},
                             {"layer", u.layer},
                             {"member", equation_json(u.member.lhs(), u.member.rhs)},
                             {"missing_call", term_to_json(u.missing_call)}});
    }
    doc["failure"] = {{"reason", std::string(to_string(failure->reason))},
                      {"message", failure->message},
                      {"underivable", std::move(underivable)},
                      {"uncovered", examples_json(failure->uncovered)},
                      {"candidate", failure->candidate ? rules_json(*failure->candidate) : json(nullptr)}};
  }
  return doc;
}

std::vector<Rule> rules_from_json(const json& doc) {
  std::vector<Rule> out;
  for (const auto& r : doc.at("rules")) out.push_back({term_from_json(r.at("lhs")), term_from_json(r.at("rhs")), {}});
  return out;
}

}  // namespace recsynth
