#include "fwparse/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace fwparse {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Open: return "OPEN";
    case EventKind::Cast: return "CAST";
    case EventKind::Fulfill: return "FULFILL";
    case EventKind::Buffer: return "BUFFER";
    case EventKind::RetroAttach: return "RETRO_ATTACH";
    case EventKind::Backtrack: return "BACKTRACK";
    case EventKind::Emit: return "EMIT";
  }
  return "?";
}

int facilitation_metric(const Metrics& m) { return m.retro_count + m.backtrack_count; }

UnfulfilledContract::UnfulfilledContract(Token fw_token_in, InterfaceSpec spec_in,
                                         ParseTrace trace_in)
    : std::runtime_error("unfulfilled contract: " + fw_token_in.text + " -> " +
                         to_string(spec_in.out)),
      fw_token(std::move(fw_token_in)),
      spec(std::move(spec_in)),
      trace(std::move(trace_in)) {}

std::string describe(const TypedObject& obj) {
  switch (obj.kind) {
    case TypedObject::Kind::Bare:
      return "bare " + obj.form + ":" + obj.use;
    case TypedObject::Kind::Saturated:
      return std::string(to_string(*obj.out)) + " sat:" + obj.form;
    case TypedObject::Kind::Fulfilled:
      break;
  }
  return std::string(to_string(*obj.out)) + "[" + std::to_string(obj.span_start) + "," +
         std::to_string(obj.span_end) + "]";
}

namespace {

void record(ParserState& st, int index, EventKind kind, std::string detail) {
  st.trace.events.push_back({index, kind, std::move(detail)});
}

// Completed object with no enclosing contract: retro-attach to the
// nearest preceding root that admits it, else emit at root. Only
// interface-less material counts toward the facilitation metric.
void resolve_root(ParserState& st, TypedObject obj, const Token& token, const Lexicon& lex) {
  for (auto it = st.emitted.rbegin(); it != st.emitted.rend(); ++it) {
    if (lex.admits(it->offers, obj.offers)) {
      record(st, token.index, EventKind::RetroAttach,
             describe(obj) + "->" + describe(*it));
      if (!obj.has_interface()) st.metrics.retro_count += 1;
      it->span_end = std::max(it->span_end, obj.span_end);
      it->dependents.push_back(std::move(obj));
      return;
    }
  }
  record(st, token.index, EventKind::Emit, describe(obj));
  st.emitted.push_back(std::move(obj));
}

// Pops fulfilled contracts as far as the object's offers reach, then
// buffers or resolves at root.
void integrate(ParserState& st, TypedObject obj, const Token& token, const Lexicon& lex) {
  while (!st.stack.empty()) {
    Contract& top = st.stack.back();
    if (implements(obj.offers, top.spec)) {
      obj = fulfill(top, std::move(obj), lex);
      record(st, token.index, EventKind::Fulfill, describe(obj));
      st.stack.pop_back();
      continue;
    }
    record(st, token.index, EventKind::Buffer, describe(obj));
    top = buffer_dependent(std::move(top), std::move(obj));
    return;
  }
  resolve_root(st, std::move(obj), token, lex);
}

}  // namespace

LexemeEntry handle_oov(const Token& token, const Lexicon& lex) {
  UseProfile use;
  use.use_name = "oov";
  use.weight = 1.0;
  for (const auto& [form, entry] : lex.cw) {
    for (const auto& profile : entry.uses) {
      use.behaviors.insert(profile.behaviors.begin(), profile.behaviors.end());
    }
  }
  LexemeEntry entry;
  entry.form = token.text;
  entry.uses.push_back(std::move(use));
  return entry;
}

ParserState step(ParserState state, const Token& token, const Lexicon& lex) {
  // (a) function word: open a contract on the chosen entry. Closed class,
  // so the form decides; OOV tokens never land here.
  if (const auto* entries = lex.fw_entries(token.text)) {
    for (auto it = state.pending.begin(); it != state.pending.end();) {
      if (it->index == token.index) {
        state.trace.events.push_back(*it);
        it = state.pending.erase(it);
      } else {
        ++it;
      }
    }
    int chosen = 0;
    if (auto forced = state.forced_entries.find(token.index);
        forced != state.forced_entries.end()) {
      chosen = forced->second;
    }
    state.choices.push_back({token.index, static_cast<int>(entries->size()), chosen});
    const InterfaceSpec& spec = (*entries)[chosen];
    record(state, token.index, EventKind::Open,
           token.text + "->" + to_string(spec.out));
    state.stack.push_back(open_contract(spec, token));
    return state;
  }

  // (b)/(c)/(d) content material, saturated or lexical or OOV.
  if (const auto* entry = lex.saturated(token.text)) {
    if (!state.stack.empty()) {
      try {
        CastResult cr = cast(*entry, state.stack.back().spec);
        record(state, token.index, EventKind::Cast, token.text + ":sat");
        TypedObject obj = fulfill(state.stack.back(), token, cr, lex);
        record(state, token.index, EventKind::Fulfill, describe(obj));
        state.stack.pop_back();
        integrate(state, std::move(obj), token, lex);
      } catch (const NoImplementingUse&) {
        TypedObject obj = make_saturated(*entry, token);
        record(state, token.index, EventKind::Buffer, describe(obj));
        state.stack.back() = buffer_dependent(std::move(state.stack.back()), std::move(obj));
      }
      return state;
    }
    resolve_root(state, make_saturated(*entry, token), token, lex);
    return state;
  }

  const LexemeEntry* lexeme = lex.lexeme(token.text);
  LexemeEntry oov;
  if (!lexeme) {
    oov = handle_oov(token, lex);
    lexeme = &oov;
  }
  if (!state.stack.empty()) {
    try {
      CastResult cr = cast(*lexeme, state.stack.back().spec);
      record(state, token.index, EventKind::Cast, token.text + ":" + cr.chosen_use);
      TypedObject obj = fulfill(state.stack.back(), token, cr, lex);
      record(state, token.index, EventKind::Fulfill, describe(obj));
      state.stack.pop_back();
      integrate(state, std::move(obj), token, lex);
    } catch (const NoImplementingUse&) {
      TypedObject obj = make_bare(*lexeme, token);
      record(state, token.index, EventKind::Buffer, describe(obj));
      state.stack.back() = buffer_dependent(std::move(state.stack.back()), std::move(obj));
    }
    return state;
  }
  resolve_root(state, make_bare(*lexeme, token), token, lex);
  return state;
}

ParseResult parse(const std::vector<Token>& tokens, const Lexicon& lex) {
  std::map<int, int> forced;
  std::vector<TraceEvent> pending;
  int backtracks = 0;

  for (;;) {
    ParserState st;
    st.forced_entries = forced;
    st.pending = pending;
    for (const auto& token : tokens) {
      if (!st.stack.empty()) st.metrics.open_token_count += 1;
      st = step(std::move(st), token, lex);
    }
    if (st.stack.empty()) {
      st.metrics.backtrack_count = backtracks;
      return ParseResult{std::move(st.emitted), std::move(st.trace), st.metrics};
    }

    // Chronological backtracking: retry the most recent function-word
    // entry choice that still has alternatives.
    int retry = -1;
    for (int i = static_cast<int>(st.choices.size()) - 1; i >= 0; --i) {
      if (st.choices[i].chosen + 1 < st.choices[i].n_entries) {
        retry = i;
        break;
      }
    }
    if (retry < 0) {
      const Contract& open = st.stack.front();
      throw UnfulfilledContract(open.fw_token, open.spec, std::move(st.trace));
    }
    forced.clear();
    for (int i = 0; i < retry; ++i) {
      forced[st.choices[i].token_index] = st.choices[i].chosen;
    }
    int next = st.choices[retry].chosen + 1;
    int at = st.choices[retry].token_index;
    forced[at] = next;
    backtracks += 1;
    pending.push_back(
        {at, EventKind::Backtrack, tokens[at].text + "#" + std::to_string(next)});
  }
}

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::string word;
  int index = 0;
  auto flush = [&] {
    while (!word.empty() && std::strchr(".,;:!?\"'", word.back())) word.pop_back();
    if (!word.empty()) tokens.push_back({word, index++});
    word.clear();
  };
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  flush();
  return tokens;
}

}  // namespace fwparse
