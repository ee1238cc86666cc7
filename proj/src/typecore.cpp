#include "fwparse/typecore.hpp"

namespace fwparse {

NoImplementingUse::NoImplementingUse(std::string form_in, InterfaceSpec spec_in)
    : std::runtime_error("no use of '" + form_in + "' implements '" + spec_in.form +
                         "' -> " + to_string(spec_in.out)),
      form(std::move(form_in)),
      spec(std::move(spec_in)) {}

bool implements(const BehaviorSet& candidate, const InterfaceSpec& spec) {
  return superset(candidate, spec.requires_);
}

CastResult cast(const LexemeEntry& entry, const InterfaceSpec& spec) {
  // uses are kept sorted by descending weight with file-order ties, so the
  // first satisfying profile is the selected one.
  for (const auto& use : entry.uses) {
    if (implements(use.behaviors, spec)) {
      return CastResult{entry.form, use.use_name, use.behaviors, spec};
    }
  }
  throw NoImplementingUse(entry.form, spec);
}

CastResult cast(const SaturatedEntry& entry, const InterfaceSpec& spec) {
  if (implements(entry.behaviors, spec)) {
    return CastResult{entry.form, "sat", entry.behaviors, spec};
  }
  throw NoImplementingUse(entry.form, spec);
}

}  // namespace fwparse
