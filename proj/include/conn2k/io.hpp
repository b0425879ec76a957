#pragma once

#include <iosfwd>
#include <string>

#include "conn2k/graph.hpp"

namespace conn2k {

/// Instance text format:
///   # comment lines (optional, only before the header)
///   p caug <n> <m>
///   m lines: e <u> <v> <cap>     with 1-based u < v and cap >= 1
/// Loops, out-of-range ids, duplicate pairs, cap < 1 and edge-count
/// mismatches are all rejected with a ParseError.
CapGraph parse_instance(std::istream& in);
CapGraph parse_instance_file(const std::string& path);

void write_instance(std::ostream& out, const CapGraph& g);

} // namespace conn2k
