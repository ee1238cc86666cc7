#include "fwparse/lexicon.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace fwparse {

const char* to_string(OutputType out) {
  switch (out) {
    case OutputType::DP: return "DP";
    case OutputType::VP: return "VP";
    case OutputType::ADJP: return "ADJP";
    case OutputType::ADVP: return "ADVP";
    case OutputType::SUBCL: return "SUBCL";
    case OutputType::RELCL: return "RELCL";
    case OutputType::INTCL: return "INTCL";
  }
  return "?";
}

OutputType output_type_from(std::string_view label) {
  for (OutputType out : kAllOutputTypes) {
    if (label == to_string(out)) return out;
  }
  throw std::invalid_argument("unknown output type: '" + std::string(label) + "'");
}

const std::vector<InterfaceSpec>* Lexicon::fw_entries(const std::string& form) const {
  auto it = fw.find(form);
  return it == fw.end() ? nullptr : &it->second;
}

const LexemeEntry* Lexicon::lexeme(const std::string& form) const {
  auto it = cw.find(form);
  return it == cw.end() ? nullptr : &it->second;
}

const SaturatedEntry* Lexicon::saturated(const std::string& form) const {
  auto it = sat.find(form);
  return it == sat.end() ? nullptr : &it->second;
}

BehaviorSet Lexicon::offers_for(OutputType out, bool finite) const {
  const OffersRule* any_match = nullptr;
  for (const auto& rule : offers_rules) {
    if (rule.out != out) continue;
    if (rule.finite.has_value()) {
      if (*rule.finite == finite) return rule.offers;
    } else if (!any_match) {
      any_match = &rule;
    }
  }
  return any_match ? any_match->offers : BehaviorSet{};
}

bool Lexicon::admits(const BehaviorSet& host_offers, const BehaviorSet& dep_offers) const {
  for (const auto& rule : attach_rules) {
    if (host_offers.count(rule.host) && dep_offers.count(rule.dep)) return true;
  }
  return false;
}

LexiconSyntaxError::LexiconSyntaxError(int line_no, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + reason),
      line(line_no) {}

DuplicateUseName::DuplicateUseName(int line_no, std::string form_in, std::string use_in)
    : LexiconSyntaxError(line_no, "duplicate use name '" + use_in + "' for '" + form_in + "'"),
      form(std::move(form_in)),
      use(std::move(use_in)) {}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Splits "key=value"; returns false when '=' is absent.
bool split_kv(const std::string& tok, std::string& key, std::string& value) {
  size_t eq = tok.find('=');
  if (eq == std::string::npos) return false;
  key = tok.substr(0, eq);
  value = tok.substr(eq + 1);
  return true;
}

BehaviorSet parse_behaviors(int line_no, const std::string& list) {
  try {
    return behaviors_of(list);
  } catch (const std::invalid_argument& e) {
    throw LexiconSyntaxError(line_no, e.what());
  }
}

InterfaceSpec parse_fw(int line_no, const std::vector<std::string>& toks) {
  if (toks.size() < 2) throw LexiconSyntaxError(line_no, "fw: form missing");
  InterfaceSpec spec;
  spec.form = toks[1];
  bool have_out = false;
  bool have_requires = false;
  for (size_t i = 2; i < toks.size(); ++i) {
    if (toks[i] == "finite") {
      spec.finite = true;
      continue;
    }
    std::string key, value;
    if (!split_kv(toks[i], key, value)) {
      throw LexiconSyntaxError(line_no, "fw: bad field '" + toks[i] + "'");
    }
    if (key == "out") {
      try {
        spec.out = output_type_from(value);
      } catch (const std::invalid_argument& e) {
        throw LexiconSyntaxError(line_no, e.what());
      }
      have_out = true;
    } else if (key == "requires") {
      spec.requires_ = parse_behaviors(line_no, value);
      have_requires = !spec.requires_.empty();
    } else if (key == "confers") {
      size_t pos = 0;
      while (pos <= value.size()) {
        size_t comma = value.find(',', pos);
        std::string item = comma == std::string::npos ? value.substr(pos)
                                                      : value.substr(pos, comma - pos);
        if (!item.empty()) spec.confers.insert(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      throw LexiconSyntaxError(line_no, "fw: unknown field '" + key + "'");
    }
  }
  if (!have_out) throw LexiconSyntaxError(line_no, "out missing");
  if (!have_requires) throw LexiconSyntaxError(line_no, "requires missing/empty");
  return spec;
}

LexemeEntry parse_cw(int line_no, const std::vector<std::string>& toks) {
  if (toks.size() < 2) throw LexiconSyntaxError(line_no, "cw: form missing");
  LexemeEntry entry;
  entry.form = toks[1];
  int pos = 0;
  for (size_t i = 2; i < toks.size(); ++i) {
    std::string key, value;
    if (!split_kv(toks[i], key, value) || key != "use") {
      throw LexiconSyntaxError(line_no, "cw: expected use=..., got '" + toks[i] + "'");
    }
    // use=<name>:<b1,b2>:<weight>
    size_t c1 = value.find(':');
    size_t c2 = value.rfind(':');
    if (c1 == std::string::npos || c2 == c1) {
      throw LexiconSyntaxError(line_no, "cw: bad use '" + value + "'");
    }
    UseProfile use;
    use.use_name = value.substr(0, c1);
    use.behaviors = parse_behaviors(line_no, value.substr(c1 + 1, c2 - c1 - 1));
    use.weight_text = value.substr(c2 + 1);
    use.file_pos = pos++;
    if (use.use_name.empty()) throw LexiconSyntaxError(line_no, "cw: empty use name");
    if (use.behaviors.empty()) {
      throw LexiconSyntaxError(line_no, "cw: use '" + use.use_name + "' has no behaviors");
    }
    char* end = nullptr;
    use.weight = std::strtod(use.weight_text.c_str(), &end);
    if (end == use.weight_text.c_str() || *end != '\0' || use.weight <= 0.0 ||
        use.weight > 1.0) {
      throw LexiconSyntaxError(line_no, "cw: weight must be in (0,1], got '" +
                                            use.weight_text + "'");
    }
    for (const auto& existing : entry.uses) {
      if (existing.use_name == use.use_name) {
        throw DuplicateUseName(line_no, entry.form, use.use_name);
      }
    }
    entry.uses.push_back(std::move(use));
  }
  if (entry.uses.empty()) throw LexiconSyntaxError(line_no, "cw: at least one use required");
  std::stable_sort(entry.uses.begin(), entry.uses.end(),
                   [](const UseProfile& a, const UseProfile& b) { return a.weight > b.weight; });
  return entry;
}

SaturatedEntry parse_sat(int line_no, const std::vector<std::string>& toks) {
  if (toks.size() < 2) throw LexiconSyntaxError(line_no, "sat: form missing");
  SaturatedEntry entry;
  entry.form = toks[1];
  bool have_out = false;
  for (size_t i = 2; i < toks.size(); ++i) {
    std::string key, value;
    if (!split_kv(toks[i], key, value)) {
      throw LexiconSyntaxError(line_no, "sat: bad field '" + toks[i] + "'");
    }
    if (key == "out") {
      try {
        entry.out = output_type_from(value);
      } catch (const std::invalid_argument& e) {
        throw LexiconSyntaxError(line_no, e.what());
      }
      have_out = true;
    } else if (key == "behaviors") {
      entry.behaviors = parse_behaviors(line_no, value);
    } else {
      throw LexiconSyntaxError(line_no, "sat: unknown field '" + key + "'");
    }
  }
  if (!have_out) throw LexiconSyntaxError(line_no, "out missing");
  return entry;
}

OffersRule parse_offers(int line_no, const std::vector<std::string>& toks) {
  if (toks.size() != 2) throw LexiconSyntaxError(line_no, "offers: expected one OUT=list field");
  std::string key, value;
  if (!split_kv(toks[1], key, value)) {
    throw LexiconSyntaxError(line_no, "offers: bad field '" + toks[1] + "'");
  }
  OffersRule rule;
  size_t colon = key.find(':');
  std::string out_label = colon == std::string::npos ? key : key.substr(0, colon);
  try {
    rule.out = output_type_from(out_label);
  } catch (const std::invalid_argument& e) {
    throw LexiconSyntaxError(line_no, e.what());
  }
  if (colon != std::string::npos) {
    std::string fin = key.substr(colon + 1);
    if (fin == "finite") rule.finite = true;
    else if (fin == "nonfinite") rule.finite = false;
    else throw LexiconSyntaxError(line_no, "offers: bad finiteness '" + fin + "'");
  }
  rule.offers = parse_behaviors(line_no, value);
  return rule;
}

AttachRule parse_attach(int line_no, const std::vector<std::string>& toks) {
  if (toks.size() != 3) throw LexiconSyntaxError(line_no, "attach: expected host=... dep=...");
  std::optional<BehaviorId> host, dep;
  for (size_t i = 1; i < toks.size(); ++i) {
    std::string key, value;
    if (!split_kv(toks[i], key, value)) {
      throw LexiconSyntaxError(line_no, "attach: bad field '" + toks[i] + "'");
    }
    try {
      if (key == "host") host = BehaviorId::of(value);
      else if (key == "dep") dep = BehaviorId::of(value);
      else throw LexiconSyntaxError(line_no, "attach: unknown field '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw LexiconSyntaxError(line_no, e.what());
    }
  }
  if (!host || !dep) throw LexiconSyntaxError(line_no, "attach: host and dep required");
  return AttachRule{*host, *dep};
}

}  // namespace

Lexicon load_lexicon(std::istream& in) {
  Lexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "fw") {
      InterfaceSpec spec = parse_fw(line_no, toks);
      auto& entries = lex.fw[spec.form];
      spec.entry_rank = static_cast<int>(entries.size());
      entries.push_back(std::move(spec));
    } else if (kind == "cw") {
      LexemeEntry entry = parse_cw(line_no, toks);
      if (lex.cw.count(entry.form)) {
        throw LexiconSyntaxError(line_no, "cw: duplicate form '" + entry.form + "'");
      }
      lex.cw.emplace(entry.form, std::move(entry));
    } else if (kind == "sat") {
      SaturatedEntry entry = parse_sat(line_no, toks);
      if (lex.sat.count(entry.form)) {
        throw LexiconSyntaxError(line_no, "sat: duplicate form '" + entry.form + "'");
      }
      lex.sat.emplace(entry.form, std::move(entry));
    } else if (kind == "offers") {
      lex.offers_rules.push_back(parse_offers(line_no, toks));
    } else if (kind == "attach") {
      lex.attach_rules.push_back(parse_attach(line_no, toks));
    } else {
      throw LexiconSyntaxError(line_no, "unknown entry kind '" + kind + "'");
    }
  }
  return lex;
}

namespace {

std::string join_features(const std::set<std::string>& features) {
  std::string out;
  for (const auto& f : features) {
    if (!out.empty()) out += ',';
    out += f;
  }
  return out;
}

std::string weight_repr(const UseProfile& use) {
  if (!use.weight_text.empty()) return use.weight_text;
  std::ostringstream s;
  s << use.weight;
  return s.str();
}

}  // namespace

void serialize_lexicon(const Lexicon& lex, std::ostream& out) {
  for (const auto& rule : lex.offers_rules) {
    out << "offers " << to_string(rule.out);
    if (rule.finite.has_value()) out << (*rule.finite ? ":finite" : ":nonfinite");
    out << "=" << join(rule.offers) << "\n";
  }
  for (const auto& rule : lex.attach_rules) {
    out << "attach host=" << rule.host.name() << " dep=" << rule.dep.name() << "\n";
  }
  for (const auto& [form, entries] : lex.fw) {
    for (const auto& spec : entries) {
      out << "fw " << form << " out=" << to_string(spec.out)
          << " requires=" << join(spec.requires_);
      if (!spec.confers.empty()) out << " confers=" << join_features(spec.confers);
      if (spec.finite) out << " finite";
      out << "\n";
    }
  }
  for (const auto& [form, entry] : lex.sat) {
    out << "sat " << form << " out=" << to_string(entry.out)
        << " behaviors=" << join(entry.behaviors) << "\n";
  }
  for (const auto& [form, entry] : lex.cw) {
    out << "cw " << form;
    for (const auto& use : entry.uses) {
      out << " use=" << use.use_name << ":" << join(use.behaviors) << ":"
          << weight_repr(use);
    }
    out << "\n";
  }
}

ValidationReport validate_lexicon(const Lexicon& lex) {
  ValidationReport report;

  // Errors: an interface demanding nothing is meaningless. The file
  // format cannot produce one, but hand-built lexica can.
  for (const auto& [form, entries] : lex.fw) {
    for (const auto& spec : entries) {
      if (spec.requires_.empty()) {
        report.errors.push_back(
            {"EmptyRequires", "fw '" + form + "' entry " +
                                  std::to_string(spec.entry_rank) + " has empty requires"});
      }
    }
  }

  // SynonymWarning: two FW entries under different forms that agree on
  // everything an interface is.
  struct FlatEntry {
    const std::string* form;
    const InterfaceSpec* spec;
  };
  std::vector<FlatEntry> flat;
  for (const auto& [form, entries] : lex.fw) {
    for (const auto& spec : entries) flat.push_back({&form, &spec});
  }
  for (size_t i = 0; i < flat.size(); ++i) {
    for (size_t j = i + 1; j < flat.size(); ++j) {
      if (*flat[i].form == *flat[j].form) continue;
      const InterfaceSpec& a = *flat[i].spec;
      const InterfaceSpec& b = *flat[j].spec;
      if (a.out == b.out && a.requires_ == b.requires_ && a.confers == b.confers &&
          a.finite == b.finite) {
        report.warnings.push_back(
            {"SynonymWarning", "'" + *flat[i].form + "' and '" + *flat[j].form +
                                   "' declare identical interfaces"});
      }
    }
  }

  // UnreachableUse: a use no interface in the lexicon can ever select.
  for (const auto& [form, entry] : lex.cw) {
    for (const auto& use : entry.uses) {
      bool reachable = false;
      for (const auto& f : flat) {
        if (superset(use.behaviors, f.spec->requires_)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) {
        report.warnings.push_back(
            {"UnreachableUse", "cw '" + form + "' use '" + use.use_name +
                                   "' satisfies no interface"});
      }
    }
  }

  // UnsatisfiableInterface: a required behavior nothing in the lexicon offers.
  BehaviorSet offered;
  for (const auto& [form, entry] : lex.cw) {
    for (const auto& use : entry.uses) offered.insert(use.behaviors.begin(), use.behaviors.end());
  }
  for (const auto& [form, entry] : lex.sat) {
    offered.insert(entry.behaviors.begin(), entry.behaviors.end());
  }
  for (const auto& f : flat) {
    for (auto b : f.spec->requires_) {
      if (!offered.count(b)) {
        report.warnings.push_back(
            {"UnsatisfiableInterface", "fw '" + *f.form + "' requires '" + b.name() +
                                           "' which no use or saturated entry carries"});
      }
    }
  }

  return report;
}

}  // namespace fwparse
