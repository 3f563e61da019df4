#pragma once

#include <string>

#include "ordalg/structure.hpp"

namespace ordalg {

// Text format, one structure per file:
//
//   # comment (anywhere; rest of line)
//   elements: 0 a b c d e 1        required, first
//   top: 1                         required
//   bottom: 0                      optional; must match the actual least element
//   order: 0<a 0<b a<c ...         relation pairs; reflexive-transitive closure taken
//   comp: 1 a' a b' b 0            optional; values in element order
//   star:                          optional block; one row per element, any row order
//   0: 1 1 1 1 1 1 1
//   ...
//   join: / meet:                  optional blocks, same row shape; validated
//                                  against the order and then discarded
//
// At least one of order:/star: must be present.  When both are given they
// must agree ("x <= y iff x*y = top").  Labels are opaque but may not equal
// a block keyword.  Section maps are never serialized.
Structure parse_text(const std::string& text);
Structure parse_file(const std::string& path);
std::string emit_text(const Structure& s);

// JSON mirror with the same field names: elements (array), top, bottom,
// order (array of [x, y] cover pairs), comp (array), star (object keyed by
// row label).  Accepts the same optionality rules as the text format.
Structure parse_json_text(const std::string& json);
std::string emit_json_text(const Structure& s);

} // namespace ordalg
