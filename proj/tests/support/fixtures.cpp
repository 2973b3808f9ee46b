#include "fixtures.hpp"

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace fixtures {

using recsynth::IOEquation;
using recsynth::Term;

namespace {

struct Reader {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }

  Term term() {
    skip();
    std::size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) != 0 || s[i] == '_')) ++i;
    if (start == i) throw std::invalid_argument("bad term: " + std::string(s));
    std::string name(s.substr(start, i - start));
    skip();
    if (i < s.size() && s[i] == '(') {
      ++i;
      std::vector<Term> args;
      skip();
      if (s[i] != ')') {
        for (;;) {
          args.push_back(term());
          skip();
          if (s[i] == ',') {
            ++i;
            continue;
          }
          break;
        }
      }
      if (s[i++] != ')') throw std::invalid_argument("missing ')': " + std::string(s));
      return Term::app(name, std::move(args));
    }
    static const std::set<std::string> constants{"0", "nil", "nl", "null"};
    return constants.count(name) > 0 ? Term::app(name) : Term::var(name);
  }
};

}  // namespace

Term t(std::string_view text) {
  Reader r{text};
  Term out = r.term();
  r.skip();
  if (r.i != text.size()) throw std::invalid_argument("trailing input: " + std::string(text));
  return out;
}

IOEquation eq(std::string_view lhs, std::string_view rhs) {
  Term l = t(lhs);
  return IOEquation{l.name(), {l.args().begin(), l.args().end()}, t(rhs)};
}

Term nat(unsigned n) { return n == 0 ? Term::app("0") : Term::app("s", {nat(n - 1)}); }

recsynth::SortEnv nat_env() { return recsynth::SortEnv({{"nat", {{"0", {}}, {"s", {"nat"}}}}}); }

recsynth::SortEnv world() {
  return recsynth::SortEnv({
      {"nat", {{"0", {}}, {"s", {"nat"}}}},
      {"list", {{"nil", {}}, {"cons", {"nat", "list"}}}},
      {"tree", {{"nl", {}}, {"nd", {"tree", "nat", "tree"}}}},
      {"blist", {{"nl2", {}}, {"o", {"blist"}}, {"i", {"blist"}}}},
  });
}

recsynth::Signature sig(std::string name, std::vector<std::string> domain, std::string range) {
  return {std::move(name), std::move(domain), std::move(range)};
}

std::vector<IOEquation> add_examples() {
  return {eq("add(0,0)", "0"),
          eq("add(s(0),0)", "s(0)"),
          eq("add(0,s(0))", "s(0)"),
          eq("add(0,s(s(0)))", "s(s(0))"),
          eq("add(s(0),s(0))", "s(s(0))"),
          eq("add(s(0),s(s(0)))", "s(s(s(0)))"),
          eq("add(s(s(0)),s(0))", "s(s(s(0)))"),
          eq("add(s(s(0)),0)", "s(s(0))")};
}

std::vector<IOEquation> size_examples() {
  return {eq("size(nl)", "0"),
          eq("size(nd(nl,va,nl))", "s(0)"),
          eq("size(nd(nd(nl,va,nl),vb,nl))", "s(s(0))"),
          eq("size(nd(nl,va,nd(nl,vb,nl)))", "s(s(0))"),
          eq("size(nd(nd(nl,va,nl),vb,nd(nl,vc,nl)))", "s(s(s(0)))"),
          eq("size(nd(nl,va,nd(nd(nl,vb,nl),vc,nl)))", "s(s(s(0)))"),
          eq("size(nd(nl,va,nd(nl,vb,nd(nl,vc,nl))))", "s(s(s(0)))"),
          eq("size(nd(nd(nl,va,nl),vb,nd(nd(nl,vc,nl),vd,nl)))", "s(s(s(s(0))))"),
          eq("size(nd(nd(nd(nl,va,nl),vb,nl),vc,nd(nl,vd,nl)))", "s(s(s(s(0))))")};
}

std::vector<IOEquation> rev_examples() {
  return {eq("rev(nil)", "nil"),
          eq("rev(cons(va,nil))", "cons(va,nil)"),
          eq("rev(cons(vb,cons(va,nil)))", "cons(va,cons(vb,nil))"),
          eq("rev(cons(vc,cons(vb,cons(va,nil))))", "cons(va,cons(vb,cons(vc,nil)))")};
}

std::vector<IOEquation> dup_examples() {
  std::vector<IOEquation> out;
  for (unsigned n = 0; n < 4; ++n) out.push_back({"dup", {nat(n)}, nat(2 * n)});
  return out;
}

std::vector<IOEquation> lgth_examples() {
  return {eq("lgth(nil)", "0"),
          eq("lgth(cons(a,nil))", "s(0)"),
          eq("lgth(cons(a,cons(b,nil)))", "s(s(0))"),
          eq("lgth(cons(a,cons(b,cons(c,nil))))", "s(s(s(0)))")};
}

std::vector<IOEquation> sq_examples() {
  std::vector<IOEquation> out;
  for (unsigned n = 0; n < 4; ++n) out.push_back({"sq", {nat(n)}, nat(n * n)});
  return out;
}

namespace {

struct RenamingCheck {
  const std::set<std::string>& renamable;
  std::map<std::string, std::string> sym;      // expected -> actual
  std::map<std::string, std::string> sym_back;
  std::map<std::string, std::string> var;
  std::map<std::string, std::string> var_back;

  static bool bind(std::map<std::string, std::string>& fwd, std::map<std::string, std::string>& back,
                   const std::string& from, const std::string& to) {
    auto [it, fresh] = fwd.emplace(from, to);
    if (!fresh) return it->second == to;
    auto [jt, fresh_back] = back.emplace(to, from);
    return fresh_back || jt->second == from;
  }

  bool same(const Term& e, const Term& a) {
    if (e.is_var() != a.is_var()) return false;
    if (e.is_var()) return bind(var, var_back, e.name(), a.name());
    if (e.arity() != a.arity()) return false;
    if (renamable.count(e.name()) > 0) {
      if (!bind(sym, sym_back, e.name(), a.name())) return false;
    } else if (e.name() != a.name()) {
      return false;
    }
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (!same(e.arg(i), a.arg(i))) return false;
    }
    return true;
  }
};

}  // namespace

bool same_rules_modulo_renaming(std::span<const recsynth::Rule> actual, const std::vector<recsynth::Rule>& expected,
                                const std::set<std::string>& renamable, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why != nullptr) *why = std::move(msg);
    return false;
  };
  if (actual.size() != expected.size()) {
    return fail("rule count " + std::to_string(actual.size()) + ", expected " + std::to_string(expected.size()));
  }
  RenamingCheck check{renamable, {}, {}, {}, {}};
  for (std::size_t i = 0; i < actual.size(); ++i) {
    check.var.clear();
    check.var_back.clear();
    if (!check.same(expected[i].lhs, actual[i].lhs) || !check.same(expected[i].rhs, actual[i].rhs)) {
      return fail("rule " + std::to_string(i + 1) + ": got " + recsynth::to_string(actual[i]) + ", expected " +
                  recsynth::to_string(expected[i]));
    }
  }
  return true;
}

std::vector<recsynth::Rule> rules(std::initializer_list<std::pair<std::string_view, std::string_view>> text) {
  std::vector<recsynth::Rule> out;
  for (const auto& [l, r] : text) out.push_back({t(l), t(r), std::nullopt});
  return out;
}

}  // namespace fixtures
