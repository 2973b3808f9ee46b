#include "recsynth/sorts.hpp"

#include <set>

#include "recsynth/errors.hpp"

namespace recsynth {

SortEnv::SortEnv(std::vector<SortDecl> decls) : decls_(std::move(decls)) {
  std::set<std::string> names;
  for (const auto& d : decls_) {
    if (!names.insert(d.name).second) throw SortEnvError("sort '" + d.name + "' declared twice");
    if (d.alts.empty()) throw SortEnvError("sort '" + d.name + "' has no constructors");
  }
  for (std::size_t si = 0; si < decls_.size(); ++si) {
    for (std::size_t ai = 0; ai < decls_[si].alts.size(); ++ai) {
      const auto& alt = decls_[si].alts[ai];
      if (names.count(alt.name) > 0) {
        throw SortEnvError("constructor '" + alt.name + "' clashes with a sort name");
      }
      if (!ctor_index_.emplace(alt.name, std::make_pair(si, ai)).second) {
        throw SortEnvError("constructor '" + alt.name + "' declared more than once");
      }
      for (const auto& s : alt.arg_sorts) {
        if (names.count(s) == 0) {
          throw SortEnvError("constructor '" + alt.name + "' uses undeclared sort '" + s + "'");
        }
      }
    }
  }
  // Least fixpoint of inhabited sorts.
  std::set<std::string> inhabited;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& d : decls_) {
      if (inhabited.count(d.name) > 0) continue;
      for (const auto& alt : d.alts) {
        bool ok = true;
        for (const auto& s : alt.arg_sorts) ok = ok && inhabited.count(s) > 0;
        if (ok) {
          inhabited.insert(d.name);
          changed = true;
          break;
        }
      }
    }
  }
  for (const auto& d : decls_) {
    if (inhabited.count(d.name) == 0) throw SortEnvError("sort '" + d.name + "' has no finite ground terms");
  }
}

const SortDecl* SortEnv::find_sort(const std::string& name) const {
  for (const auto& d : decls_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

const SortDecl& SortEnv::sort(const std::string& name) const {
  const auto* d = find_sort(name);
  if (d == nullptr) throw SortEnvError("unknown sort '" + name + "'");
  return *d;
}

std::optional<SortEnv::CtorRef> SortEnv::find_constructor(const std::string& name) const {
  auto it = ctor_index_.find(name);
  if (it == ctor_index_.end()) return std::nullopt;
  const auto& d = decls_[it->second.first];
  return CtorRef{&d, &d.alts[it->second.second]};
}

const Signature* find_signature(std::span<const Signature> sigs, const std::string& name) {
  for (const auto& s : sigs) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void validate_signature(const Signature& sig, const SortEnv& env) {
  if (env.is_constructor(sig.name)) {
    throw SortEnvError("function '" + sig.name + "' has the name of a constructor");
  }
  if (env.find_sort(sig.range) == nullptr) throw SortEnvError("unknown sort '" + sig.range + "'");
  for (const auto& s : sig.domain) {
    if (env.find_sort(s) == nullptr) throw SortEnvError("unknown sort '" + s + "'");
  }
}

std::string to_string(const IOEquation& eq) { return to_string(eq.lhs()) + "=" + to_string(eq.rhs); }

std::string to_string(std::span<const IOEquation> eqs) {
  std::string out = "[";
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(eqs[i]);
  }
  return out + "]";
}

ArgClassification classify_args(const SortEnv& env, const std::string& sort, const ConstructorAlt& alt) {
  (void)env;
  ArgClassification c;
  for (std::size_t j = 0; j < alt.arg_sorts.size(); ++j) {
    (alt.arg_sorts[j] == sort ? c.recursive : c.non_recursive).push_back(j);
  }
  return c;
}

namespace {

// Walks a term against an expected sort. With `infer` set, unknown variables
// are assigned the demanded sort; otherwise they are looked up.
struct SortWalker {
  const SortEnv& env;
  std::span<const Signature> sigs;
  bool allow_functions;
  VarSorts* var_sorts;  // null: variables accepted at any sort
  bool infer;

  void walk(const Term& t, const std::string& expected) {
    if (t.is_var()) {
      if (var_sorts == nullptr) return;
      auto it = var_sorts->find(t.name());
      if (it == var_sorts->end()) {
        if (!infer) throw UnknownSymbol(t.name());
        var_sorts->emplace(t.name(), expected);
      } else if (it->second != expected) {
        if (infer) throw SortConflict(t.name(), it->second, expected);
        throw SortMismatch(to_string(t), expected, it->second);
      }
      return;
    }
    const std::vector<std::string>* arg_sorts = nullptr;
    std::string result;
    if (auto c = env.find_constructor(t.name())) {
      arg_sorts = &c->alt->arg_sorts;
      result = c->sort->name;
    } else if (const auto* sig = find_signature(sigs, t.name())) {
      if (!allow_functions) {
        throw InputError("defined function '" + t.name() + "' may not occur inside an i/o equation");
      }
      arg_sorts = &sig->domain;
      result = sig->range;
    } else {
      throw UnknownSymbol(t.name());
    }
    if (arg_sorts->size() != t.arity()) throw ArityMismatch(t.name(), arg_sorts->size(), t.arity());
    if (result != expected) throw SortMismatch(to_string(t), expected, result);
    for (std::size_t i = 0; i < t.arity(); ++i) walk(t.arg(i), (*arg_sorts)[i]);
  }
};

}  // namespace

void check_wellsorted(const Term& t, const std::string& expected, const SortEnv& env,
                      std::span<const Signature> sigs, const VarSorts* var_sorts) {
  SortWalker w{env, sigs, true, const_cast<VarSorts*>(var_sorts), false};
  w.walk(t, expected);
}

VarSorts infer_variable_sorts(std::span<const IOEquation> examples, const SortEnv& env, const Signature& sig) {
  VarSorts sorts;
  std::span<const Signature> sigs(&sig, 1);
  SortWalker w{env, sigs, false, &sorts, true};
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const auto& ex = examples[i];
    try {
      if (ex.fn != sig.name) throw UnknownSymbol(ex.fn);
      if (ex.lhs_args.size() != sig.arity()) throw ArityMismatch(ex.fn, sig.arity(), ex.lhs_args.size());
      for (std::size_t j = 0; j < ex.lhs_args.size(); ++j) w.walk(ex.lhs_args[j], sig.domain[j]);
      w.walk(ex.rhs, sig.range);
    } catch (InputError& e) {
      e.example_index = i + 1;
      throw;
    }
  }
  return sorts;
}

}  // namespace recsynth
