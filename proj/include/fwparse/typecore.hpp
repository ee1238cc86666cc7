#pragma once

#include <stdexcept>
#include <string>

#include "fwparse/lexicon.hpp"

namespace fwparse {

// Outcome of casting a lexeme (or saturated entry) against an interface.
// Carries copies so it stays valid independently of lexicon lifetime.
struct CastResult {
  std::string form;
  std::string chosen_use;  // "sat" for saturated entries
  BehaviorSet use_behaviors;
  InterfaceSpec satisfied;

  bool operator==(const CastResult&) const = default;
};

struct NoImplementingUse : std::runtime_error {
  NoImplementingUse(std::string form, InterfaceSpec spec);
  std::string form;
  InterfaceSpec spec;
};

// The duck test: the candidate passes iff it supports every required behavior.
bool implements(const BehaviorSet& candidate, const InterfaceSpec& spec);

// Selects the highest-weight use satisfying the interface; ties fall back
// to file order. Throws NoImplementingUse when the sieve rejects every use.
CastResult cast(const LexemeEntry& entry, const InterfaceSpec& spec);

// Saturated entries either satisfy the interface wholesale or not at all.
CastResult cast(const SaturatedEntry& entry, const InterfaceSpec& spec);

}  // namespace fwparse
