#include "fwparse/format.hpp"

#include <ostream>

namespace fwparse {

std::string render_sexpr(const TypedObject& obj) {
  switch (obj.kind) {
    case TypedObject::Kind::Bare:
      return "(bare " + obj.form + ":" + obj.use + ")";
    case TypedObject::Kind::Saturated:
      return "(" + std::string(to_string(*obj.out)) + " sat:" + obj.form + ")";
    case TypedObject::Kind::Fulfilled:
      break;
  }
  std::string s = "(" + std::string(to_string(*obj.out)) + " " + obj.fw_token->text;
  if (obj.impl_token) {
    s += " (impl " + obj.impl_token->text + ":" + obj.impl_cast->chosen_use + ")";
  } else if (obj.impl_object) {
    s += " " + render_sexpr(*obj.impl_object);
  }
  for (const auto& dep : obj.dependents) s += " " + render_sexpr(dep);
  s += ")";
  return s;
}

std::string render_sexpr_line(const std::vector<TypedObject>& roots) {
  std::string s;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (i) s += " ";
    s += render_sexpr(roots[i]);
  }
  return s;
}

namespace {

std::string dash_if_empty(const std::string& s) { return s.empty() ? "-" : s; }

std::string features_cell(const TypedObject& obj) {
  std::string s;
  for (const auto& f : obj.features) {
    if (!s.empty()) s += ',';
    s += f;
  }
  return dash_if_empty(s);
}

}  // namespace

void render_tabular(const TypedObject& obj, std::ostream& out) {
  out << (obj.out ? to_string(*obj.out) : "-") << '\t' << obj.span_start << '\t'
      << obj.span_end << '\t' << (obj.fw_token ? obj.fw_token->text : "-") << '\t';
  if (obj.impl_token) {
    out << obj.impl_token->text << '\t' << obj.impl_cast->chosen_use;
  } else if (obj.kind != TypedObject::Kind::Fulfilled) {
    out << obj.form << '\t' << obj.use;
  } else {
    out << "-\t-";
  }
  out << '\t' << features_cell(obj) << '\n';
  if (obj.impl_object) render_tabular(*obj.impl_object, out);
  for (const auto& dep : obj.dependents) render_tabular(dep, out);
}

void render_trace(const ParseTrace& trace, std::ostream& out) {
  for (const auto& event : trace.events) {
    out << event.index << '\t' << to_string(event.kind) << '\t' << event.detail << '\n';
  }
}

}  // namespace fwparse
