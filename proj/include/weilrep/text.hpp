#pragma once

#include <string>
#include <vector>

#include "weilrep/jh.hpp"
#include "weilrep/steinberg.hpp"

namespace wr {

// --- canonical rendering ---

std::string to_string(const Rat& r);
std::string to_string(const GaussQ& q);
// `1`, `w`, `nu^{s}`, `w*nu^{s}`.
std::string to_string(const RealChar& c);
// `D{l}` when centered at 0, `Ind{mu,nu}` otherwise.
std::string to_string(const IrredWR& r);
// Summands joined with ` + `, multiplicities as `2*D{3}`.
std::string to_string(const VirtualRep& v);
// `[low,high]`, `[q]`, `[q]+sgn`.
std::string to_string(const Segment& s);
std::string to_string(const InducedFactor& f);
// Factors joined with ` x `.
std::string to_string(const StandardModule& m);
std::string to_string(const std::vector<InducedFactor>& fs);

// --- parsing ---

// `expr := factor ("x" factor)*`, factors being segments `[q1,q2]`
// (order-insensitive), points `[q]` / `[q]+sgn`, or characters
// `1 | w | nu^{q} | w*nu^{q}`. Whitespace-insensitive.
// Throws parse_error with byte offset on malformed input.
std::vector<InducedFactor> parse_factors(const std::string& input);

// Parameter expression: sum of `1 | w | nu^{q} | w*nu^{q} | D{l} |
// Ind{mu,nu}` with optional `k*` multiplicities.
VirtualRep parse_param(const std::string& input);

// `GL(n)`, `Sp(2n)`, `SO(p,q)`.
GroupDescriptor parse_group(const std::string& input);

Rat parse_rat(const std::string& input);

} // namespace wr
