#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fwparse/parser.hpp"

namespace fwparse {

// (<OUT> <fw-form> (impl <cw-form>:<use>) <dependent>*)
// bare: (bare <form>:<use>)   saturated: (<OUT> sat:<form>)
// An object implementation appears as a nested sexpr in the impl slot.
std::string render_sexpr(const TypedObject& obj);

// All roots of one input line, space-separated.
std::string render_sexpr_line(const std::vector<TypedObject>& roots);

// One object per line, depth-first, tab-separated:
// out, span_start, span_end, fw_form|-, impl_form|-, use|-, features|-
void render_tabular(const TypedObject& obj, std::ostream& out);

void render_trace(const ParseTrace& trace, std::ostream& out);

}  // namespace fwparse
