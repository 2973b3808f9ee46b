#pragma once

#include <cstddef>
#include <set>
#include <string>

namespace recsynth {

/// One monotone counter for fresh variables (`v<N>`) and fresh auxiliary
/// function symbols (`f<N>`), skipping any reserved identifier.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

  void reserve(const std::string& name) { reserved_.insert(name); }

  std::string fresh_var() { return next("v"); }
  std::string fresh_function() { return next("f"); }

  std::size_t counter() const { return counter_; }

 private:
  std::string next(const char* prefix) {
    for (;;) {
      std::string name = prefix + std::to_string(++counter_);
      if (reserved_.insert(name).second) return name;
    }
  }

  std::set<std::string> reserved_;
  std::size_t counter_ = 0;
};

}  // namespace recsynth
