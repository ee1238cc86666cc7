#include "fwparse/composer.hpp"

#include <algorithm>

namespace fwparse {

OrderViolation::OrderViolation(const std::string& what) : std::runtime_error(what) {}

AdjunctOnInterface::AdjunctOnInterface(const std::string& what) : std::runtime_error(what) {}

Contract open_contract(const InterfaceSpec& spec, const Token& fw_token) {
  Contract c;
  c.spec = spec;
  c.fw_token = fw_token;
  c.opened_at = fw_token.index;
  c.guaranteed = spec.out;
  return c;
}

namespace {

TypedObject fulfilled_base(const Contract& c, const Lexicon& lex) {
  TypedObject obj;
  obj.kind = TypedObject::Kind::Fulfilled;
  obj.out = c.guaranteed;
  obj.fw_token = c.fw_token;
  obj.spec = c.spec;
  obj.dependents = c.buffer;
  obj.features = c.spec.confers;
  obj.finite = c.spec.finite;
  obj.span_start = c.fw_token.index;
  obj.span_end = c.fw_token.index;
  obj.offers = lex.offers_for(c.guaranteed, c.spec.finite);
  for (const auto& dep : obj.dependents) {
    obj.span_end = std::max(obj.span_end, dep.span_end);
  }
  return obj;
}

}  // namespace

TypedObject fulfill(const Contract& c, const Token& impl_token, const CastResult& cast_result,
                    const Lexicon& lex) {
  if (impl_token.index <= c.fw_token.index) {
    throw OrderViolation("implementation '" + impl_token.text + "'@" +
                         std::to_string(impl_token.index) + " does not follow interface '" +
                         c.fw_token.text + "'@" + std::to_string(c.fw_token.index));
  }
  TypedObject obj = fulfilled_base(c, lex);
  obj.impl_token = impl_token;
  obj.impl_cast = cast_result;
  obj.span_end = std::max(obj.span_end, impl_token.index);
  return obj;
}

TypedObject fulfill(const Contract& c, TypedObject inner, const Lexicon& lex) {
  if (inner.span_start <= c.fw_token.index) {
    throw OrderViolation("implementation spanning [" + std::to_string(inner.span_start) + "," +
                         std::to_string(inner.span_end) + "] does not follow interface '" +
                         c.fw_token.text + "'@" + std::to_string(c.fw_token.index));
  }
  TypedObject obj = fulfilled_base(c, lex);
  obj.span_end = std::max(obj.span_end, inner.span_end);
  obj.impl_object = std::make_shared<const TypedObject>(std::move(inner));
  return obj;
}

Contract buffer_dependent(Contract c, TypedObject dep, AttachSite site) {
  if (site == AttachSite::Interface) {
    throw AdjunctOnInterface("'" + c.fw_token.text + "' takes no adjuncts");
  }
  if (dep.span_start <= c.fw_token.index) {
    throw OrderViolation("dependent spanning [" + std::to_string(dep.span_start) + "," +
                         std::to_string(dep.span_end) + "] precedes interface '" +
                         c.fw_token.text + "'@" + std::to_string(c.fw_token.index));
  }
  if (implements(dep.offers, c.spec)) {
    throw std::logic_error("dependent satisfies the open contract; it must fulfill, not buffer");
  }
  c.buffer.push_back(std::move(dep));
  return c;
}

TypedObject make_bare(const LexemeEntry& entry, const Token& token) {
  TypedObject obj;
  obj.kind = TypedObject::Kind::Bare;
  const UseProfile& top = entry.uses.front();
  obj.form = entry.form;
  obj.use = top.use_name;
  obj.offers = top.behaviors;
  obj.finite = top.behaviors.count(BehaviorId::of("finite_head")) > 0;
  obj.span_start = obj.span_end = token.index;
  return obj;
}

TypedObject make_saturated(const SaturatedEntry& entry, const Token& token) {
  TypedObject obj;
  obj.kind = TypedObject::Kind::Saturated;
  obj.out = entry.out;
  obj.form = entry.form;
  obj.use = "sat";
  obj.offers = entry.behaviors;
  obj.span_start = obj.span_end = token.index;
  return obj;
}

void collect_indices(const TypedObject& obj, std::set<int>& out) {
  if (obj.fw_token) out.insert(obj.fw_token->index);
  if (obj.impl_token) out.insert(obj.impl_token->index);
  if (obj.impl_object) collect_indices(*obj.impl_object, out);
  if (obj.kind != TypedObject::Kind::Fulfilled) out.insert(obj.span_start);
  for (const auto& dep : obj.dependents) collect_indices(dep, out);
}

}  // namespace fwparse
