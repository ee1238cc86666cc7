#pragma once

#include <map>
#include <string>
#include <vector>

#include "fwparse/composer.hpp"

namespace fwparse {

enum class EventKind { Open, Cast, Fulfill, Buffer, RetroAttach, Backtrack, Emit };

const char* to_string(EventKind kind);

struct TraceEvent {
  int index = 0;
  EventKind kind = EventKind::Open;
  std::string detail;

  bool operator==(const TraceEvent&) const = default;
};

struct ParseTrace {
  std::vector<TraceEvent> events;

  bool operator==(const ParseTrace&) const = default;
};

struct Metrics {
  int retro_count = 0;
  int backtrack_count = 0;
  int open_token_count = 0;
};

// Integrations performed without an interface contract guiding them.
int facilitation_metric(const Metrics& m);

struct ParseResult {
  std::vector<TypedObject> roots;
  ParseTrace trace;
  Metrics metrics;
};

struct UnfulfilledContract : std::runtime_error {
  UnfulfilledContract(Token fw_token_in, InterfaceSpec spec_in, ParseTrace trace_in);
  Token fw_token;
  InterfaceSpec spec;
  ParseTrace trace;  // trace of the final failed attempt
};

struct ParserState {
  std::vector<Contract> stack;  // innermost last
  std::vector<TypedObject> emitted;
  ParseTrace trace;
  Metrics metrics;

  // Backtracking over function-word entry choices.
  std::map<int, int> forced_entries;  // token index -> entry index
  struct ChoicePoint {
    int token_index = 0;
    int n_entries = 0;
    int chosen = 0;
  };
  std::vector<ChoicePoint> choices;
  std::vector<TraceEvent> pending;  // BACKTRACK events surfaced at their index
};

// Processes one token: opens a contract at a function word, casts and
// fulfills against the innermost contract, buffers what the sieve
// rejects, and retro-attaches or emits when no contract is open.
ParserState step(ParserState state, const Token& token, const Lexicon& lex);

// Folds step over the stream, backtracking chronologically over
// function-word entry choices when a contract is left open at the end.
// Throws UnfulfilledContract when no choice of entries fulfills them all.
ParseResult parse(const std::vector<Token>& tokens, const Lexicon& lex);

// Wildcard entry for an out-of-vocabulary token: one use carrying every
// behavior any use in the lexicon carries, so any interface can sieve it.
LexemeEntry handle_oov(const Token& token, const Lexicon& lex);

// Whitespace split, ASCII lowercasing, terminal punctuation stripped.
std::vector<Token> tokenize(const std::string& line);

// Short rendering used in trace details ("DP[0,1]", "bare boy:noun").
std::string describe(const TypedObject& obj);

}  // namespace fwparse
