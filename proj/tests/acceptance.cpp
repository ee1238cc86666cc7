// Acceptance harness: exercises the end-to-end criteria against the
// bundled data and the CLI binary. Usage: acceptance DATA_DIR CLI_PATH
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fwparse/composer.hpp"
#include "fwparse/format.hpp"
#include "fwparse/lexicon.hpp"
#include "fwparse/parser.hpp"

using namespace fwparse;

namespace {

std::string g_data_dir;
std::string g_cli;
int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& why = "") {
  std::cout << "criterion " << criterion << " (" << name << "): "
            << (ok ? "pass" : "FAIL") << (ok || why.empty() ? "" : " -- " + why) << "\n";
  if (!ok) ++g_failures;
}

std::string data_path(const std::string& name) { return g_data_dir + "/" + name; }

Lexicon load_bundled() {
  std::ifstream in(data_path("lexicon.fwl"));
  if (!in) throw std::runtime_error("cannot open bundled lexicon");
  return load_lexicon(in);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return fields;
}

// Runs a command, captures stdout, returns (exit status, output).
std::pair<int, std::string> run(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Brute-force cast oracle, independent of the library's cast path.
std::optional<std::string> oracle(const LexemeEntry& entry, const InterfaceSpec& spec) {
  const UseProfile* best = nullptr;
  for (const auto& use : entry.uses) {
    bool ok = true;
    for (auto b : spec.requires_) ok = ok && use.behaviors.count(b) > 0;
    if (!ok) continue;
    if (!best || use.weight > best->weight ||
        (use.weight == best->weight && use.file_pos < best->file_pos)) {
      best = &use;
    }
  }
  return best ? std::optional(best->use_name) : std::nullopt;
}

std::optional<std::string> oracle(const SaturatedEntry& entry, const InterfaceSpec& spec) {
  for (auto b : spec.requires_) {
    if (!entry.behaviors.count(b)) return std::nullopt;
  }
  return "sat";
}

std::vector<InterfaceSpec> all_specs(const Lexicon& lex) {
  std::vector<InterfaceSpec> specs;
  for (const auto& [form, entries] : lex.fw) {
    specs.insert(specs.end(), entries.begin(), entries.end());
  }
  return specs;
}

bool has_interface_of(const TypedObject& obj, const std::string& fw_form) {
  if (obj.fw_token && obj.fw_token->text == fw_form) return true;
  if (obj.impl_object && has_interface_of(*obj.impl_object, fw_form)) return true;
  for (const auto& dep : obj.dependents) {
    if (has_interface_of(dep, fw_form)) return true;
  }
  return false;
}

void criterion1_golden_suite(const Lexicon& lex) {
  const std::vector<std::string> expected = {
      "VP", "VP", "VP", "VP", "DP", "DP", "ADJP", "ADJP",
      "ADVP", "ADVP", "SUBCL", "SUBCL", "RELCL", "RELCL", "INTCL", "INTCL"};
  auto lines = read_lines(data_path("table1.txt"));
  bool ok = lines.size() == expected.size();
  std::string why = ok ? "" : "corpus line count";
  for (size_t i = 0; ok && i < lines.size(); ++i) {
    try {
      auto result = parse(tokenize(lines[i]), lex);
      if (result.roots.size() != 1 || !result.roots.front().out ||
          to_string(*result.roots.front().out) != expected[i]) {
        ok = false;
        why = "'" + lines[i] + "' expected " + expected[i];
      }
    } catch (const UnfulfilledContract&) {
      ok = false;
      why = "'" + lines[i] + "' failed to parse";
    }
  }
  auto [status, out] = run(g_cli + " parse --lexicon " + data_path("lexicon.fwl") + " " +
                           data_path("table1.txt"));
  if (status != 0) {
    ok = false;
    why = "CLI exit status " + std::to_string(status);
  }
  report(1, "golden suite", ok, why);
}

void criterion2_order_rigidity(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  for (const auto& [fw_form, entries] : lex.fw) {
    for (const auto& [cw_form, entry] : lex.cw) {
      std::vector<Token> stream = {{cw_form, 0}, {fw_form, 1}};
      try {
        auto result = parse(stream, lex);
        for (const auto& root : result.roots) {
          if (has_interface_of(root, fw_form)) {
            ok = false;
            why = cw_form + " " + fw_form + " yielded an interface unit";
          }
        }
      } catch (const UnfulfilledContract&) {
        // Expected: the trailing interface can never be implemented.
      }
    }
  }
  report(2, "order rigidity", ok, why);
}

void criterion3_oracle_equivalence(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  for (const auto& spec : all_specs(lex)) {
    for (const auto& [form, entry] : lex.cw) {
      std::optional<std::string> got;
      try {
        got = cast(entry, spec).chosen_use;
      } catch (const NoImplementingUse&) {
      }
      if (got != oracle(entry, spec)) {
        ok = false;
        why = "cw " + form + " vs " + spec.form;
      }
    }
    for (const auto& [form, entry] : lex.sat) {
      std::optional<std::string> got;
      try {
        got = cast(entry, spec).chosen_use;
      } catch (const NoImplementingUse&) {
      }
      if (got != oracle(entry, spec)) {
        ok = false;
        why = "sat " + form + " vs " + spec.form;
      }
    }
  }
  report(3, "duck-typing oracle equivalence", ok, why);
}

void criterion4_heterosemy(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  auto check_context = [&](const std::string& form, const std::string& context,
                           const std::string& expected_use) {
    try {
      auto result = parse(tokenize(context), lex);
      if (result.roots.size() != 1) throw std::runtime_error("not one root");
      const TypedObject& root = result.roots.front();
      if (!root.impl_token || root.impl_token->text != form ||
          root.impl_cast->chosen_use != expected_use) {
        throw std::runtime_error("wrong cast");
      }
      if (oracle(*lex.lexeme(form), *root.spec) != expected_use) {
        throw std::runtime_error("oracle disagrees");
      }
    } catch (const std::exception& e) {
      ok = false;
      why = "'" + context + "': " + e.what();
    }
  };
  auto lines = read_lines(data_path("heterosemy.tsv"));
  if (lines.size() != 9) {
    ok = false;
    why = "expected nine heterosemes";
  }
  for (const auto& line : lines) {
    auto f = split_tabs(line);
    if (f.size() != 5 || f[2] == f[4]) {
      ok = false;
      why = "bad row: " + line;
      continue;
    }
    check_context(f[0], f[1], f[2]);
    check_context(f[0], f[3], f[4]);
  }
  report(4, "heterosemy casting", ok, why);
}

void criterion5_copula(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  for (const char* text : {"is happy", "is a doctor", "is running"}) {
    try {
      auto result = parse(tokenize(text), lex);
      if (result.roots.size() != 1 || result.roots.front().out != OutputType::VP) {
        ok = false;
        why = std::string("'") + text + "' is not a VP";
      }
    } catch (const UnfulfilledContract&) {
      ok = false;
      why = std::string("'") + text + "' failed";
    }
  }
  bool cast_threw = false;
  try {
    cast(*lex.lexeme("runs"), lex.fw_entries("is")->front());
  } catch (const NoImplementingUse&) {
    cast_threw = true;
  }
  bool parse_threw = false;
  try {
    parse(tokenize("is runs"), lex);
  } catch (const UnfulfilledContract&) {
    parse_threw = true;
  }
  if (!cast_threw || !parse_threw) {
    ok = false;
    why = "'is runs' did not crash";
  }
  report(5, "copula logical type", ok, why);
}

void criterion6_type_determinism(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  for (const auto& spec : all_specs(lex)) {
    Contract c = open_contract(spec, {spec.form, 0});
    bool have_first = false;
    OutputType first_out{};
    std::set<std::string> first_features;
    auto check = [&](const TypedObject& obj) {
      if (!have_first) {
        have_first = true;
        first_out = *obj.out;
        first_features = obj.features;
      } else if (*obj.out != first_out || obj.features != first_features) {
        ok = false;
        why = spec.form + " entry " + std::to_string(spec.entry_rank);
      }
    };
    for (const auto& [form, entry] : lex.cw) {
      try {
        check(fulfill(c, {form, 1}, cast(entry, spec), lex));
      } catch (const NoImplementingUse&) {
      }
    }
    for (const auto& [form, entry] : lex.sat) {
      try {
        check(fulfill(c, {form, 1}, cast(entry, spec), lex));
      } catch (const NoImplementingUse&) {
      }
    }
  }
  report(6, "type determinism", ok, why);
}

void criterion7_facilitation(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  auto metric = [&](const std::string& text) {
    return facilitation_metric(parse(tokenize(text), lex).metrics);
  };
  auto lines = read_lines(data_path("pairs.tsv"));
  if (lines.size() < 5) {
    ok = false;
    why = "fewer than five pairs";
  }
  for (const auto& line : lines) {
    auto f = split_tabs(line);
    if (f.size() != 3) {
      ok = false;
      why = "bad row: " + line;
      continue;
    }
    try {
      int with_fw = metric(f[0]);
      int without_fw = metric(f[1]);
      bool pair_ok = f[2] == "complementizer" ? with_fw < without_fw : with_fw <= without_fw;
      if (!pair_ok) {
        ok = false;
        why = "'" + f[0] + "' " + std::to_string(with_fw) + " vs " +
              std::to_string(without_fw);
      }
    } catch (const UnfulfilledContract&) {
      ok = false;
      why = "pair failed to parse: " + line;
    }
  }
  report(7, "facilitation direction", ok, why);
}

void criterion8_protected_variation(const Lexicon& lex) {
  bool ok = true;
  std::string why;
  auto base = validate_lexicon(lex);
  if (!base.errors.empty()) {
    ok = false;
    why = "bundled lexicon has errors";
  }

  Lexicon with_synonym = lex;
  InterfaceSpec clone = lex.fw.at("the").front();
  clone.form = "thee";
  with_synonym.fw["thee"].push_back(clone);
  auto syn_report = validate_lexicon(with_synonym);
  int synonyms = 0;
  for (const auto& w : syn_report.warnings) {
    if (w.kind == "SynonymWarning") ++synonyms;
  }
  if (synonyms != 1 || !syn_report.errors.empty()) {
    ok = false;
    why = "synonym injection: " + std::to_string(synonyms) + " warnings";
  }

  Lexicon with_empty = lex;
  InterfaceSpec bad;
  bad.form = "zz";
  bad.out = OutputType::DP;
  with_empty.fw["zz"].push_back(bad);
  auto empty_report = validate_lexicon(with_empty);
  if (empty_report.errors.size() != 1 || empty_report.errors.front().kind != "EmptyRequires") {
    ok = false;
    why = "empty-requires injection: " + std::to_string(empty_report.errors.size()) +
          " errors";
  }
  report(8, "protected variation", ok, why);
}

void criterion9_determinism(const Lexicon& lex) {
  bool ok = true;
  std::string why;

  std::ostringstream serialized;
  serialize_lexicon(lex, serialized);
  std::istringstream back(serialized.str());
  if (!(load_lexicon(back) == lex)) {
    ok = false;
    why = "lexicon round-trip inequality";
  }

  std::string cmd = g_cli + " parse --lexicon " + data_path("lexicon.fwl") + " " +
                    data_path("table1.txt");
  auto first = run(cmd);
  auto second = run(cmd);
  if (first.first != 0 || second.first != 0 || first.second != second.second ||
      first.second.empty()) {
    ok = false;
    why = "CLI output not byte-identical across runs";
  }
  report(9, "determinism and round-trip", ok, why);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance DATA_DIR CLI_PATH\n";
    return 2;
  }
  g_data_dir = argv[1];
  g_cli = argv[2];

  Lexicon lex;
  try {
    lex = load_bundled();
  } catch (const std::exception& e) {
    std::cerr << "cannot load bundled lexicon: " << e.what() << "\n";
    return 2;
  }

  criterion1_golden_suite(lex);
  criterion2_order_rigidity(lex);
  criterion3_oracle_equivalence(lex);
  criterion4_heterosemy(lex);
  criterion5_copula(lex);
  criterion6_type_determinism(lex);
  criterion7_facilitation(lex);
  criterion8_protected_variation(lex);
  criterion9_determinism(lex);

  return g_failures == 0 ? 0 : 1;
}
