#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwparse/behavior.hpp"

namespace fwparse {

// The seven constituent labels a fulfilled interface can guarantee.
enum class OutputType { DP, VP, ADJP, ADVP, SUBCL, RELCL, INTCL };

const char* to_string(OutputType out);
OutputType output_type_from(std::string_view label);  // throws std::invalid_argument
inline constexpr OutputType kAllOutputTypes[] = {
    OutputType::DP,    OutputType::VP,    OutputType::ADJP, OutputType::ADVP,
    OutputType::SUBCL, OutputType::RELCL, OutputType::INTCL};

// A function-word lexicon entry: the behaviors it demands of an
// implementation, the features it confers, and the constituent type it
// guarantees. Immutable once loaded; it carries no use-alternatives and
// no inflectional variants.
struct InterfaceSpec {
  std::string form;
  OutputType out = OutputType::DP;
  BehaviorSet requires_;
  std::set<std::string> confers;
  bool finite = false;
  int entry_rank = 0;  // position among entries sharing this form

  bool operator==(const InterfaceSpec&) const = default;
};

// One alternative behavior bundle of a content word.
struct UseProfile {
  std::string use_name;
  BehaviorSet behaviors;
  double weight = 1.0;
  std::string weight_text;  // original token, kept for serialization
  int file_pos = 0;         // position within the cw line before sorting

  bool operator==(const UseProfile& o) const {
    return use_name == o.use_name && behaviors == o.behaviors && weight == o.weight;
  }
};

// A content word with its heterosemy: alternative uses ordered by
// descending weight, ties broken by file order.
struct LexemeEntry {
  std::string form;
  std::vector<UseProfile> uses;

  bool operator==(const LexemeEntry&) const = default;
};

// A self-typed token (pronoun, proper name): forms a constituent with no
// interface and offers its behaviors to enclosing contracts directly.
struct SaturatedEntry {
  std::string form;
  OutputType out = OutputType::DP;
  BehaviorSet behaviors;

  bool operator==(const SaturatedEntry&) const = default;
};

// Behaviors a fulfilled object of a given output label (optionally
// restricted by finiteness) makes available to enclosing contracts and
// attachment hosts.
struct OffersRule {
  OutputType out = OutputType::DP;
  std::optional<bool> finite;  // nullopt = any
  BehaviorSet offers;

  bool operator==(const OffersRule&) const = default;
};

// Retroactive attachment license: a dependent may attach to a host when
// the host offers `host` and the dependent offers `dep`.
struct AttachRule {
  BehaviorId host;
  BehaviorId dep;

  bool operator==(const AttachRule&) const = default;
};

struct Lexicon {
  std::map<std::string, std::vector<InterfaceSpec>> fw;
  std::map<std::string, LexemeEntry> cw;
  std::map<std::string, SaturatedEntry> sat;
  std::vector<OffersRule> offers_rules;
  std::vector<AttachRule> attach_rules;

  const std::vector<InterfaceSpec>* fw_entries(const std::string& form) const;
  const LexemeEntry* lexeme(const std::string& form) const;
  const SaturatedEntry* saturated(const std::string& form) const;

  // Exact finiteness match wins over an any-finiteness rule.
  BehaviorSet offers_for(OutputType out, bool finite) const;

  // True when some attach rule licenses a dep with these offers under a
  // host with those offers.
  bool admits(const BehaviorSet& host_offers, const BehaviorSet& dep_offers) const;

  bool operator==(const Lexicon&) const = default;
};

struct LexiconSyntaxError : std::runtime_error {
  LexiconSyntaxError(int line, const std::string& reason);
  int line;
};

struct DuplicateUseName : LexiconSyntaxError {
  DuplicateUseName(int line, std::string form, std::string use);
  std::string form;
  std::string use;
};

// Parses the line-oriented lexicon format. Throws LexiconSyntaxError or
// DuplicateUseName on the first malformed line.
Lexicon load_lexicon(std::istream& in);

// Inverse of load_lexicon up to line ordering: reloading the output
// yields an equal Lexicon.
void serialize_lexicon(const Lexicon& lex, std::ostream& out);

struct ValidationIssue {
  std::string kind;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool clean() const { return errors.empty() && warnings.empty(); }
};

// Checks the closed-class discipline: no empty requires, no FW synonyms
// (SynonymWarning), no use unreachable by every interface
// (UnreachableUse), no required behavior absent from every use and
// saturated entry (UnsatisfiableInterface).
ValidationReport validate_lexicon(const Lexicon& lex);

}  // namespace fwparse
