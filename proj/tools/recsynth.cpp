#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "recsynth/driver.hpp"
#include "recsynth/errors.hpp"
#include "recsynth/json_export.hpp"
#include "recsynth/problem.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw recsynth::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

recsynth::DepthLimit parse_depth(const std::string& text) {
  if (text == "inf") return recsynth::DepthLimit::unbounded();
  std::size_t used = 0;
  unsigned long d = 0;
  try {
    d = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || d == 0) throw recsynth::InputError("--depth expects a positive integer or 'inf'");
  return recsynth::DepthLimit::at(static_cast<unsigned>(d));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learns structurally recursive rewrite rules from input/output equations."};
  std::string path;
  std::string depth = "inf";
  std::string json_path;
  bool inline_aux = false;
  bool trace = true;
  std::size_t step_limit = recsynth::kDefaultStepLimit;
  std::size_t max_aux = 50;
  std::size_t max_depth = 10;

  app.add_option("file", path, "Problem file, or - for standard input")->required();
  app.add_option("--depth", depth, "Anti-unification depth bound (n or inf)")->capture_default_str();
  app.add_flag("--inline", inline_aux, "Inline single-rule auxiliary functions");
  app.add_flag("--trace,!--no-trace", trace, "Print the search trace on standard error")->capture_default_str();
  app.add_option("--json", json_path, "Also write a JSON report to this path");
  app.add_option("--step-limit", step_limit, "Rewrite steps per evaluation")->capture_default_str();
  app.add_option("--max-aux", max_aux, "Auxiliary functions per run")->capture_default_str();
  app.add_option("--max-depth", max_depth, "Auxiliary nesting depth")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : recsynth::kExitInputError;
  }

  recsynth::Problem problem;
  try {
    problem = recsynth::parse_problem(read_input(path));
    problem.config.depth = parse_depth(depth);
  } catch (const recsynth::InputError& e) {
    std::cerr << "input error";
    if (e.example_index) std::cerr << " in example " << *e.example_index;
    std::cerr << ": " << e.what() << "\n";
    return recsynth::kExitInputError;
  }
  problem.config.step_limit = step_limit;
  problem.config.max_aux_functions = max_aux;
  problem.config.max_recursion_depth = max_depth;

  auto result = recsynth::run_problem(problem, {inline_aux, trace});
  std::cerr << result.diagnostics;
  std::cout << result.output;

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write '" << json_path << "'\n";
      return recsynth::kExitInputError;
    }
    out << recsynth::export_json(problem, result).dump(2) << "\n";
  }
  return result.exit_code();
}
