#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace recsynth {

/// A first-order term: either a variable or a symbol applied to arguments.
/// Constants are applications with no arguments.
class Term {
 public:
  /// An unnamed variable; placeholder until assigned.
  Term() = default;
  static Term var(std::string name);
  static Term app(std::string head, std::vector<Term> args = {});

  bool is_var() const { return is_var_; }
  bool is_app() const { return !is_var_; }

  /// Variable name or head symbol.
  const std::string& name() const { return name_; }
  std::span<const Term> args() const { return args_; }
  const Term& arg(std::size_t i) const { return args_.at(i); }
  std::size_t arity() const { return args_.size(); }

  bool is_ground() const;
  /// Number of symbol and variable occurrences.
  std::size_t size() const;
  /// A leaf has height 1.
  std::size_t height() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Term(bool is_var, std::string name, std::vector<Term> args);

  bool is_var_ = true;
  std::string name_;
  std::vector<Term> args_;
};

/// Finite map from variable names to terms. Ordered so iteration is
/// deterministic.
using Substitution = std::map<std::string, Term>;

/// Variables of `t` in first-occurrence order (left to right, depth first).
std::vector<std::string> vars(const Term& t);
/// Appends the variables of `t` not yet in `out`.
void collect_vars(const Term& t, std::vector<std::string>& out);

/// Simultaneous replacement of the mapped variables.
Term substitute(const Term& t, const Substitution& sigma);

/// One-sided matching. Variables of `subject` are rigid atoms: they can only
/// be bound to by a pattern variable or compared for identity. Repeated
/// pattern variables must bind to identical subterms.
std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject);

/// Injective variable-to-variable substitution sigma with
/// substitute(from, sigma) == to, if one exists.
std::optional<Substitution> renaming_match(const Term& from, const Term& to);

bool is_renaming(const Substitution& sigma);

/// All subterms of `t`, including `t` itself, in preorder.
std::vector<Term> subterms(const Term& t);

/// Prefix notation: `s(s(0))`, `add(x,nil)`. Nullary symbols print bare.
std::string to_string(const Term& t);

}  // namespace recsynth
