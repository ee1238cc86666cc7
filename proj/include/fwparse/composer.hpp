#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fwparse/typecore.hpp"

namespace fwparse {

struct Token {
  std::string text;
  int index = 0;

  bool operator==(const Token&) const = default;
};

// A constituent. Fulfilled objects carry an interface token and either a
// token implementation (a cast content word) or an object implementation
// (a nested constituent that satisfied the contract via its offers).
// Saturated and bare objects have no interface.
struct TypedObject {
  enum class Kind { Fulfilled, Saturated, Bare };

  Kind kind = Kind::Bare;
  std::optional<OutputType> out;

  std::optional<Token> fw_token;
  std::optional<InterfaceSpec> spec;

  std::optional<Token> impl_token;
  std::optional<CastResult> impl_cast;
  std::shared_ptr<const TypedObject> impl_object;

  std::vector<TypedObject> dependents;
  std::set<std::string> features;
  bool finite = false;
  int span_start = 0;
  int span_end = 0;
  BehaviorSet offers;

  // Surface info for saturated and bare objects.
  std::string form;
  std::string use;

  bool has_interface() const { return fw_token.has_value(); }
};

// An open, not-yet-fulfilled interface instance. The guaranteed type is
// fixed at open time, before any implementation is seen.
struct Contract {
  InterfaceSpec spec;
  Token fw_token;
  int opened_at = 0;
  std::vector<TypedObject> buffer;
  OutputType guaranteed = OutputType::DP;
};

enum class AttachSite { Body, Interface };

struct OrderViolation : std::runtime_error {
  explicit OrderViolation(const std::string& what);
};

struct AdjunctOnInterface : std::runtime_error {
  explicit AdjunctOnInterface(const std::string& what);
};

Contract open_contract(const InterfaceSpec& spec, const Token& fw_token);

// Fulfills the contract with a cast token. Throws OrderViolation when the
// implementation does not strictly follow the function word.
TypedObject fulfill(const Contract& c, const Token& impl_token, const CastResult& cast_result,
                    const Lexicon& lex);

// Fulfills the contract with a nested constituent whose offers satisfy it.
TypedObject fulfill(const Contract& c, TypedObject inner, const Lexicon& lex);

// Appends a pending dependent to the contract body. Attaching to the
// interface token itself is refused: function words take no adjuncts.
Contract buffer_dependent(Contract c, TypedObject dep, AttachSite site = AttachSite::Body);

// Interface-less constituents.
TypedObject make_bare(const LexemeEntry& entry, const Token& token);
TypedObject make_saturated(const SaturatedEntry& entry, const Token& token);

// All token indices covered by the object (interface, implementation,
// dependents, recursively).
void collect_indices(const TypedObject& obj, std::set<int>& out);

}  // namespace fwparse
