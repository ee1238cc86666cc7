#include "fwparse/behavior.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace fwparse {

namespace {

struct Interner {
  std::vector<std::string> names;
  std::unordered_map<std::string, uint32_t> index;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

bool valid_name(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

BehaviorId BehaviorId::of(std::string_view name) {
  if (!valid_name(name)) {
    throw std::invalid_argument("bad behavior name: '" + std::string(name) + "'");
  }
  auto& in = interner();
  std::string key(name);
  auto it = in.index.find(key);
  if (it != in.index.end()) return BehaviorId(it->second);
  auto id = static_cast<uint32_t>(in.names.size());
  in.names.push_back(key);
  in.index.emplace(std::move(key), id);
  return BehaviorId(id);
}

const std::string& BehaviorId::name() const { return interner().names.at(id_); }

BehaviorSet behaviors_of(std::string_view comma_list) {
  BehaviorSet out;
  size_t pos = 0;
  while (pos <= comma_list.size()) {
    size_t comma = comma_list.find(',', pos);
    std::string_view item = comma == std::string_view::npos
                                ? comma_list.substr(pos)
                                : comma_list.substr(pos, comma - pos);
    if (!item.empty()) out.insert(BehaviorId::of(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const BehaviorSet& set) {
  std::vector<std::string> names;
  names.reserve(set.size());
  for (auto b : set) names.push_back(b.name());
  std::sort(names.begin(), names.end());
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

bool superset(const BehaviorSet& sup, const BehaviorSet& sub) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

}  // namespace fwparse
