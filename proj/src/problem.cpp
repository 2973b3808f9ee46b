#include "recsynth/problem.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <sstream>

#include "recsynth/errors.hpp"

namespace recsynth {

namespace {

enum class Tok { kIdent, kPunct, kArrow, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    src.remove_prefix(n);
  };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; };

  while (!src.empty()) {
    const char c = src.front();
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
    } else if (c == '#') {
      std::size_t n = src.find('\n');
      advance(n == std::string_view::npos ? src.size() : n);
    } else if (ident_char(c)) {
      std::size_t n = 0;
      while (n < src.size() && ident_char(src[n])) ++n;
      out.push_back({Tok::kIdent, std::string(src.substr(0, n)), line, col});
      advance(n);
    } else if (src.substr(0, 2) == "->") {
      out.push_back({Tok::kArrow, "->", line, col});
      advance(2);
    } else if (std::string_view("(),;=|:").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

/// A term before symbol resolution.
struct RawTerm {
  std::string name;
  bool applied = false;  // written with parentheses
  std::vector<RawTerm> args;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::kEnd; }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + (t.kind == Tok::kEnd ? " at end of input" : ", found '" + t.text + "'"), t.line,
                     t.column);
  }

  bool accept(std::string_view punct) {
    if (peek().kind != Tok::kEnd && peek().text == punct && peek().kind != Tok::kIdent) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view punct) {
    if (!accept(punct)) fail("expected '" + std::string(punct) + "'");
  }

  Token ident() {
    if (peek().kind != Tok::kIdent) fail("expected identifier");
    return toks_[pos_++];
  }

  RawTerm term() {
    Token t = ident();
    RawTerm r{t.text, false, {}, t.line, t.column};
    if (accept("(")) {
      r.applied = true;
      if (!accept(")")) {
        do {
          r.args.push_back(term());
        } while (accept(","));
        expect(")");
      }
    }
    return r;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Term resolve(const RawTerm& r, const SortEnv& env, std::span<const Signature> sigs) {
  std::optional<std::size_t> arity;
  if (auto c = env.find_constructor(r.name)) {
    arity = c->alt->arity();
  } else if (const auto* s = find_signature(sigs, r.name)) {
    arity = s->arity();
  }
  if (!arity) {
    if (r.applied) throw UnknownSymbol(r.name);
    return Term::var(r.name);
  }
  if (*arity != r.args.size()) throw ArityMismatch(r.name, *arity, r.args.size());
  std::vector<Term> args;
  for (const auto& a : r.args) args.push_back(resolve(a, env, sigs));
  return Term::app(r.name, std::move(args));
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i];
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Parser p(text);
  std::vector<SortDecl> decls;
  std::vector<Signature> sigs;
  struct RawExample {
    RawTerm lhs;
    RawTerm rhs;
  };
  std::vector<RawExample> raw;
  std::optional<Token> target;

  while (!p.at_end()) {
    Token kw = p.ident();
    if (kw.text == "sort") {
      SortDecl d{p.ident().text, {}};
      p.expect("=");
      do {
        ConstructorAlt alt{p.ident().text, {}};
        if (p.accept("(")) {
          do {
            alt.arg_sorts.push_back(p.ident().text);
          } while (p.accept(","));
          p.expect(")");
        }
        d.alts.push_back(std::move(alt));
      } while (p.accept("|"));
      p.expect(";");
      decls.push_back(std::move(d));
    } else if (kw.text == "fun") {
      Signature s{p.ident().text, {}, {}};
      p.expect(":");
      if (p.peek().kind != Tok::kArrow) {
        do {
          s.domain.push_back(p.ident().text);
        } while (p.accept(","));
      }
      p.expect("->");
      s.range = p.ident().text;
      p.expect(";");
      sigs.push_back(std::move(s));
    } else if (kw.text == "ex") {
      RawExample e{p.term(), {}};
      p.expect("=");
      e.rhs = p.term();
      p.expect(";");
      raw.push_back(std::move(e));
    } else if (kw.text == "learn") {
      if (target) throw ParseError("duplicate 'learn' statement", kw.line, kw.column);
      target = p.ident();
      p.expect(";");
    } else {
      throw ParseError("expected 'sort', 'fun', 'ex' or 'learn', found '" + kw.text + "'", kw.line, kw.column);
    }
  }
  if (!target) p.fail("missing 'learn' statement");

  Problem problem{SortEnv(std::move(decls)), std::move(sigs), {}, target->text, {}, {}};
  for (std::size_t i = 0; i < problem.signatures.size(); ++i) {
    const auto& s = problem.signatures[i];
    validate_signature(s, problem.sort_env);
    for (std::size_t j = 0; j < i; ++j) {
      if (problem.signatures[j].name == s.name) throw InputError("duplicate function '" + s.name + "'");
    }
  }
  const Signature* sig = find_signature(problem.signatures, problem.target);
  if (sig == nullptr) throw ParseError("no signature for '" + problem.target + "'", target->line, target->column);
  if (raw.empty()) throw InputError("no examples for '" + problem.target + "'");

  for (std::size_t i = 0; i < raw.size(); ++i) {
    try {
      Term lhs = resolve(raw[i].lhs, problem.sort_env, problem.signatures);
      Term rhs = resolve(raw[i].rhs, problem.sort_env, problem.signatures);
      if (lhs.is_var() || lhs.name() != problem.target) {
        throw InputError("example lhs must be a call of '" + problem.target + "'");
      }
      problem.examples.push_back({lhs.name(), {lhs.args().begin(), lhs.args().end()}, rhs});
    } catch (InputError& e) {
      e.example_index = i + 1;
      throw;
    }
  }
  problem.variable_sorts = infer_variable_sorts(problem.examples, problem.sort_env, *sig);
  return problem;
}

std::string format_signature(const Signature& sig) {
  return sig.name + " : " + join(sig.domain, ", ") + (sig.domain.empty() ? "-> " : " -> ") + sig.range;
}

std::string print_problem(const Problem& problem) {
  std::ostringstream out;
  for (const auto& d : problem.sort_env.sorts()) {
    std::vector<std::string> alts;
    for (const auto& a : d.alts) {
      alts.push_back(a.arg_sorts.empty() ? a.name : a.name + "(" + join(a.arg_sorts, ", ") + ")");
    }
    out << "sort " << d.name << " = " << join(alts, " | ") << ";\n";
  }
  for (const auto& s : problem.signatures) out << "fun " << format_signature(s) << ";\n";
  for (const auto& e : problem.examples) out << "ex " << to_string(e.lhs()) << " = " << to_string(e.rhs) << ";\n";
  out << "learn " << problem.target << ";\n";
  return out.str();
}

Term parse_term(std::string_view text, const SortEnv& env, std::span<const Signature> signatures) {
  Parser p(text);
  RawTerm r = p.term();
  if (!p.at_end()) p.fail("trailing input after term");
  return resolve(r, env, signatures);
}

ReportContents parse_report(std::string_view text, const SortEnv& env) {
  enum class Block { kNone, kSignatures, kExamples, kDefinitions } block = Block::kNone;
  ReportContents out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  auto split_eq = [&](const std::string& l) {
    auto at = l.find(" = ");
    if (at == std::string::npos) throw ParseError("expected 'lhs = rhs'", lineno, 1);
    return std::pair{parse_term(l.substr(0, at), env, out.signatures), parse_term(l.substr(at + 3), env, out.signatures)};
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      block = Block::kNone;
    } else if (line == "FUNCTION SIGNATURES:") {
      block = Block::kSignatures;
    } else if (line == "FUNCTION EXAMPLES:") {
      block = Block::kExamples;
    } else if (line == "FUNCTION DEFINITIONS:") {
      block = Block::kDefinitions;
    } else if (block == Block::kSignatures) {
      Parser p(line);
      Signature s{p.ident().text, {}, {}};
      p.expect(":");
      if (p.peek().kind != Tok::kArrow) {
        do {
          s.domain.push_back(p.ident().text);
        } while (p.accept(","));
      }
      p.expect("->");
      s.range = p.ident().text;
      out.signatures.push_back(std::move(s));
    } else if (block == Block::kExamples) {
      auto [lhs, rhs] = split_eq(line);
      if (lhs.is_var()) throw ParseError("example lhs is a variable", lineno, 1);
      out.examples.push_back({lhs.name(), {lhs.args().begin(), lhs.args().end()}, rhs});
    } else if (block == Block::kDefinitions) {
      auto [lhs, rhs] = split_eq(line);
      out.definitions.push_back({lhs, rhs, std::nullopt});
    }
  }
  return out;
}

}  // namespace recsynth
