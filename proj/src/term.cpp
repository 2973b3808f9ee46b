#include "recsynth/term.hpp"

#include <algorithm>
#include <set>

namespace recsynth {

Term::Term(bool is_var, std::string name, std::vector<Term> args)
    : is_var_(is_var), name_(std::move(name)), args_(std::move(args)) {}

Term Term::var(std::string name) { return Term(true, std::move(name), {}); }

Term Term::app(std::string head, std::vector<Term> args) {
  return Term(false, std::move(head), std::move(args));
}

bool Term::is_ground() const {
  if (is_var_) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& a : args_) n += a.size();
  return n;
}

std::size_t Term::height() const {
  std::size_t h = 0;
  for (const auto& a : args_) h = std::max(h, a.height());
  return h + 1;
}

// Variables sort before applications; applications compare by arity, then
// head, then arguments left to right.
std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.is_var_ != b.is_var_) return a.is_var_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_var_) return a.name_.compare(b.name_) <=> 0;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  if (auto c = a.name_.compare(b.name_) <=> 0; c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out);
}

std::vector<std::string> vars(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

Term substitute(const Term& t, const Substitution& sigma) {
  if (t.is_var()) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const auto& a : t.args()) args.push_back(substitute(a, sigma));
  return Term::app(t.name(), std::move(args));
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& sigma) {
  if (pattern.is_var()) {
    auto [it, inserted] = sigma.emplace(pattern.name(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var() || pattern.name() != subject.name() || pattern.arity() != subject.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.arg(i), subject.arg(i), sigma)) return false;
  }
  return true;
}

bool rename_into(const Term& from, const Term& to, Substitution& forward,
                 std::map<std::string, std::string>& backward) {
  if (from.is_var() != to.is_var()) return false;
  if (from.is_var()) {
    auto f = forward.find(from.name());
    if (f != forward.end()) return f->second.name() == to.name();
    auto b = backward.find(to.name());
    if (b != backward.end()) return false;
    forward.emplace(from.name(), to);
    backward.emplace(to.name(), from.name());
    return true;
  }
  if (from.name() != to.name() || from.arity() != to.arity()) return false;
  for (std::size_t i = 0; i < from.arity(); ++i) {
    if (!rename_into(from.arg(i), to.arg(i), forward, backward)) return false;
  }
  return true;
}

void collect_subterms(const Term& t, std::vector<Term>& out) {
  out.push_back(t);
  for (const auto& a : t.args()) collect_subterms(a, out);
}

void print(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_var() || t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ',';
    print(t.arg(i), out);
  }
  out += ')';
}

}  // namespace

std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> renaming_match(const Term& from, const Term& to) {
  Substitution forward;
  std::map<std::string, std::string> backward;
  if (!rename_into(from, to, forward, backward)) return std::nullopt;
  return forward;
}

bool is_renaming(const Substitution& sigma) {
  std::set<std::string> images;
  for (const auto& [v, t] : sigma) {
    if (!t.is_var() || !images.insert(t.name()).second) return false;
  }
  return true;
}

std::vector<Term> subterms(const Term& t) {
  std::vector<Term> out;
  collect_subterms(t, out);
  return out;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

}  // namespace recsynth
