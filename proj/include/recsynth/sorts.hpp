#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recsynth/term.hpp"

namespace recsynth {

struct ConstructorAlt {
  std::string name;
  std::vector<std::string> arg_sorts;

  std::size_t arity() const { return arg_sorts.size(); }
  friend bool operator==(const ConstructorAlt&, const ConstructorAlt&) = default;
};

struct SortDecl {
  std::string name;
  std::vector<ConstructorAlt> alts;

  friend bool operator==(const SortDecl&, const SortDecl&) = default;
};

/// Declared sorts in declaration order. Constructor alternatives keep their
/// declaration order too; the learner tries them in that order.
class SortEnv {
 public:
  SortEnv() = default;

  /// Checks every invariant (known argument sorts, globally unique
  /// constructors, inhabited sorts) and throws SortEnvError otherwise.
  explicit SortEnv(std::vector<SortDecl> decls);

  std::span<const SortDecl> sorts() const { return decls_; }
  const SortDecl* find_sort(const std::string& name) const;
  const SortDecl& sort(const std::string& name) const;

  /// Owning sort and alternative of a constructor symbol.
  struct CtorRef {
    const SortDecl* sort;
    const ConstructorAlt* alt;
  };
  std::optional<CtorRef> find_constructor(const std::string& name) const;
  bool is_constructor(const std::string& name) const { return ctor_index_.count(name) > 0; }

  friend bool operator==(const SortEnv& a, const SortEnv& b) { return a.decls_ == b.decls_; }

 private:
  std::vector<SortDecl> decls_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> ctor_index_;
};

struct Signature {
  std::string name;
  std::vector<std::string> domain;
  std::string range;

  std::size_t arity() const { return domain.size(); }
  friend bool operator==(const Signature&, const Signature&) = default;
};

const Signature* find_signature(std::span<const Signature> sigs, const std::string& name);

/// Throws if a sort is undeclared or the name is a constructor.
void validate_signature(const Signature& sig, const SortEnv& env);

/// One input/output equation fn(lhs_args...) = rhs.
struct IOEquation {
  std::string fn;
  std::vector<Term> lhs_args;
  Term rhs;

  Term lhs() const { return Term::app(fn, lhs_args); }
  friend bool operator==(const IOEquation&, const IOEquation&) = default;
  friend auto operator<=>(const IOEquation& a, const IOEquation& b) {
    if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

/// `lhs=rhs`, compact form used inside bracketed lists.
std::string to_string(const IOEquation& eq);
std::string to_string(std::span<const IOEquation> eqs);

struct ArgClassification {
  std::vector<std::size_t> recursive;      // 0-based positions
  std::vector<std::size_t> non_recursive;  // 0-based positions
};

/// Splits constructor argument positions into those of the owning sort and
/// the rest.
ArgClassification classify_args(const SortEnv& env, const std::string& sort, const ConstructorAlt& alt);

using VarSorts = std::map<std::string, std::string>;

/// Confirms `t` inhabits `expected`. Variables must already appear in
/// `var_sorts` unless `var_sorts` is null, in which case they are accepted
/// at any sort.
void check_wellsorted(const Term& t, const std::string& expected, const SortEnv& env,
                      std::span<const Signature> sigs, const VarSorts* var_sorts);

/// Infers the sort of every variable across all examples. Variables are
/// scoped over the whole example set. Throws SortConflict, UnknownSymbol,
/// ArityMismatch or SortMismatch; the exception's example_index is set.
VarSorts infer_variable_sorts(std::span<const IOEquation> examples, const SortEnv& env, const Signature& sig);

}  // namespace recsynth
