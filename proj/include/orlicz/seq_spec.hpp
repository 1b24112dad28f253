#pragma once

#include <string>

#include "orlicz/weight_sequence.hpp"

namespace orlicz {

// 17 significant digits: enough for any double to survive a round trip
// through strtod bit-for-bit, so emitted tables diff cleanly.
std::string fmt_double(double v);

// Sequence spec grammar, one-to-one with the JSON file format:
//
//   gevrey:s=1              qgevrey:q=2,n=2,horizon=1024
//   explicit:lq=0;0.5;1.25  @path/to/spec.json
//
// Keys are per-family (gevrey: s; qgevrey: q, n; explicit: lq) plus the
// optional horizon.  The inline quotient list uses ';' so it can live
// inside the comma-separated key list.  Unknown families, unknown keys,
// malformed numbers and unknown JSON fields all raise InvalidParameter;
// an explicit horizon that contradicts the quotient list raises
// HorizonMismatch.
SequenceSpec parse_spec_string(const std::string& text);

// Stable-key-order JSON; parse_spec_string of the written file restores an
// identical spec, bit-for-bit on every double.
std::string spec_to_json(const SequenceSpec& spec);

}  // namespace orlicz
