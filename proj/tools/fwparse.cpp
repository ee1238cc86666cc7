#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fwparse/format.hpp"
#include "fwparse/lexicon.hpp"
#include "fwparse/parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseFailure = 1;
constexpr int kExitLexiconFailure = 2;
constexpr int kExitIoFailure = 3;

struct Options {
  std::string lexicon_path;
  std::string format = "sexpr";
  std::string input_path;  // empty = stdin
};

int load_validated_lexicon(const Options& opt, fwparse::Lexicon& lex) {
  std::ifstream in(opt.lexicon_path);
  if (!in) {
    std::cerr << "cannot open lexicon: " << opt.lexicon_path << "\n";
    return kExitLexiconFailure;
  }
  try {
    lex = fwparse::load_lexicon(in);
  } catch (const fwparse::LexiconSyntaxError& e) {
    std::cerr << "lexicon error: " << e.what() << "\n";
    return kExitLexiconFailure;
  }
  auto report = fwparse::validate_lexicon(lex);
  if (!report.errors.empty()) {
    for (const auto& issue : report.errors) {
      std::cerr << "lexicon error: " << issue.kind << ": " << issue.message << "\n";
    }
    return kExitLexiconFailure;
  }
  return kExitOk;
}

int with_input(const Options& opt, int (*body)(const Options&, const fwparse::Lexicon&,
                                               std::istream&)) {
  fwparse::Lexicon lex;
  if (int rc = load_validated_lexicon(opt, lex)) return rc;
  if (opt.input_path.empty()) return body(opt, lex, std::cin);
  std::ifstream in(opt.input_path);
  if (!in) {
    std::cerr << "cannot open input: " << opt.input_path << "\n";
    return kExitIoFailure;
  }
  return body(opt, lex, in);
}

int cmd_parse(const Options& opt, const fwparse::Lexicon& lex, std::istream& in) {
  std::string line;
  int line_no = 0;
  bool any_failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = fwparse::tokenize(line);
    if (tokens.empty()) continue;
    try {
      auto result = fwparse::parse(tokens, lex);
      if (opt.format == "tabular") {
        for (const auto& root : result.roots) fwparse::render_tabular(root, std::cout);
      } else {
        std::cout << fwparse::render_sexpr_line(result.roots) << "\n";
      }
    } catch (const fwparse::UnfulfilledContract& e) {
      std::cerr << "line " << line_no << ": unfulfilled contract: " << e.fw_token.text
                << " -> " << fwparse::to_string(e.spec.out) << "\n";
      any_failed = true;
    }
  }
  return any_failed ? kExitParseFailure : kExitOk;
}

int cmd_trace(const Options& opt, const fwparse::Lexicon& lex, std::istream& in) {
  std::string line;
  int line_no = 0;
  bool any_failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = fwparse::tokenize(line);
    if (tokens.empty()) continue;
    try {
      auto result = fwparse::parse(tokens, lex);
      fwparse::render_trace(result.trace, std::cout);
    } catch (const fwparse::UnfulfilledContract& e) {
      fwparse::render_trace(e.trace, std::cout);
      std::cerr << "line " << line_no << ": unfulfilled contract: " << e.fw_token.text
                << " -> " << fwparse::to_string(e.spec.out) << "\n";
      any_failed = true;
    }
  }
  return any_failed ? kExitParseFailure : kExitOk;
}

void count_objects(const fwparse::TypedObject& obj, int& fulfillments, int& fw_cw,
                   std::map<fwparse::OutputType, int>& by_out) {
  if (obj.kind == fwparse::TypedObject::Kind::Fulfilled) {
    ++fulfillments;
    by_out[*obj.out] += 1;
    if (obj.impl_token) ++fw_cw;
  }
  if (obj.impl_object) count_objects(*obj.impl_object, fulfillments, fw_cw, by_out);
  for (const auto& dep : obj.dependents) count_objects(dep, fulfillments, fw_cw, by_out);
}

std::string fraction(int num, int den) {
  if (den == 0) return "n/a";
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(4);
  s << static_cast<double>(num) / den;
  return s.str();
}

int cmd_stats(const Options& opt, const fwparse::Lexicon& lex, std::istream& in) {
  std::string line;
  int lines = 0, parsed = 0, failed = 0;
  int fulfillments = 0, fw_cw = 0, buffers = 0, retro = 0, facilitation = 0;
  std::map<fwparse::OutputType, int> by_out;
  while (std::getline(in, line)) {
    auto tokens = fwparse::tokenize(line);
    if (tokens.empty()) continue;
    ++lines;
    try {
      auto result = fwparse::parse(tokens, lex);
      ++parsed;
      for (const auto& event : result.trace.events) {
        if (event.kind == fwparse::EventKind::Buffer) ++buffers;
        if (event.kind == fwparse::EventKind::RetroAttach) ++retro;
      }
      for (const auto& root : result.roots) count_objects(root, fulfillments, fw_cw, by_out);
      facilitation += fwparse::facilitation_metric(result.metrics);
    } catch (const fwparse::UnfulfilledContract&) {
      ++failed;
    }
  }
  int all_events = fulfillments + buffers + retro;
  std::cout << "lines=" << lines << "\n"
            << "parsed=" << parsed << "\n"
            << "failed=" << failed << "\n"
            << "composition_events=" << all_events << "\n"
            << "fw_cw_fulfillments=" << fw_cw << "\n"
            << "fw_cw_fraction=" << fraction(fw_cw, all_events) << "\n"
            << "fw_cw_fraction_no_buffer=" << fraction(fw_cw, fulfillments + retro) << "\n";
  for (fwparse::OutputType out : fwparse::kAllOutputTypes) {
    std::cout << "out_" << fwparse::to_string(out) << "=" << by_out[out] << "\n";
  }
  std::cout << "facilitation_total=" << facilitation << "\n";
  return failed ? kExitParseFailure : kExitOk;
}

int cmd_validate(const Options& opt) {
  std::ifstream in(opt.lexicon_path);
  if (!in) {
    std::cerr << "cannot open lexicon: " << opt.lexicon_path << "\n";
    return kExitLexiconFailure;
  }
  fwparse::Lexicon lex;
  try {
    lex = fwparse::load_lexicon(in);
  } catch (const fwparse::LexiconSyntaxError& e) {
    std::cerr << "lexicon error: " << e.what() << "\n";
    return kExitLexiconFailure;
  }
  auto report = fwparse::validate_lexicon(lex);
  for (const auto& issue : report.errors) {
    std::cout << "error\t" << issue.kind << "\t" << issue.message << "\n";
  }
  for (const auto& issue : report.warnings) {
    std::cout << "warning\t" << issue.kind << "\t" << issue.message << "\n";
  }
  std::cout << "errors=" << report.errors.size() << " warnings=" << report.warnings.size()
            << "\n";
  return report.errors.empty() ? kExitOk : kExitLexiconFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interface-driven incremental constituent parser"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--lexicon", opt.lexicon_path, "lexicon file")->required();
    if (with_format) {
      sub->add_option("--format", opt.format, "sexpr|tabular")
          ->check(CLI::IsMember({"sexpr", "tabular"}));
    }
    sub->add_option("input", opt.input_path, "input file (default: stdin)");
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse utterances, one per line");
  add_common(parse_cmd, true);
  auto* trace_cmd = app.add_subcommand("trace", "print the per-token event log");
  add_common(trace_cmd, false);
  auto* stats_cmd = app.add_subcommand("stats", "corpus composition statistics");
  add_common(stats_cmd, false);
  auto* validate_cmd = app.add_subcommand("validate", "check a lexicon file");
  validate_cmd->add_option("--lexicon", opt.lexicon_path, "lexicon file")->required();

  CLI11_PARSE(app, argc, argv);

  if (parse_cmd->parsed()) return with_input(opt, cmd_parse);
  if (trace_cmd->parsed()) return with_input(opt, cmd_trace);
  if (stats_cmd->parsed()) return with_input(opt, cmd_stats);
  return cmd_validate(opt);
}
