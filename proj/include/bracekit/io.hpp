#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"
#include "bracekit/ybe.hpp"

namespace bracekit {

// Text formats.  All are line-oriented, whitespace-separated, and written
// back byte-identically by the corresponding writer:
//
//   group <n>        brace <n>        ybe <n>
//   <n rows>         dot:             x y -> u v   (n^2 lines, row-major)
//                    <n rows>
//                    circle:
//                    <n rows>
//
// Index 0 must be the identity row/column in group and brace files; parse
// errors carry 1-based line (and column) positions.

GroupTable read_group_text(std::istream& in);
void write_group_text(std::ostream& out, const GroupTable& g);

SkewBrace read_brace_text(std::istream& in);
void write_brace_text(std::ostream& out, const SkewBrace& b);

YbeSolution read_ybe_text(std::istream& in);
void write_ybe_text(std::ostream& out, const YbeSolution& r);

// JSON mirrors of the same fields: {"n":..,"table":[[..]]} for groups,
// {"n":..,"dot":[[..]],"circle":[[..]]} for braces and {"n":..,"map":[[u,v],..]}
// (row-major) for solutions.  Unknown fields are ignored on read.

GroupTable read_group_json(std::istream& in);
std::string group_json(const GroupTable& g);

SkewBrace read_brace_json(std::istream& in);
std::string brace_json(const SkewBrace& b);

YbeSolution read_ybe_json(std::istream& in);
std::string ybe_json(const YbeSolution& r);

/// Reads either format, deciding by the first non-space byte ('{' = JSON).
SkewBrace read_brace_any(std::istream& in);
GroupTable read_group_any(std::istream& in);

/// Display labels for the elements of a named group, e.g. for D4:
/// 1, η, η^2, η^3, π, ηπ, η^2π, η^3π.  Products get pair labels "(a,b)".
std::vector<std::string> element_labels(std::string_view name);

/// Generator names usable in the CLI subgroup language for a named group
/// (e.g. {"s",1},{"t",4} for Q8); empty for direct products.
std::vector<std::pair<std::string, Index>> generator_names(std::string_view name);

}  // namespace bracekit
