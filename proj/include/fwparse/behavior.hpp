#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace fwparse {

// Interned behavior name. Two equal names always yield the same id, so
// comparisons are integer comparisons and sets are cheap.
class BehaviorId {
 public:
  // Interns `name`, validating it against [a-z][a-z0-9_]*.
  static BehaviorId of(std::string_view name);

  const std::string& name() const;
  uint32_t id() const { return id_; }

  auto operator<=>(const BehaviorId&) const = default;

 private:
  explicit BehaviorId(uint32_t id) : id_(id) {}
  uint32_t id_;
};

using BehaviorSet = std::set<BehaviorId>;

// Parses a comma-separated list ("a,b,c"); empty input gives the empty set.
BehaviorSet behaviors_of(std::string_view comma_list);

// Comma-joined names, sorted lexicographically for stable output.
std::string join(const BehaviorSet& set);

bool superset(const BehaviorSet& sup, const BehaviorSet& sub);

}  // namespace fwparse
