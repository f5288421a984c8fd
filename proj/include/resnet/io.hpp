#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "resnet/network.hpp"

namespace resnet {

// Edge-list format, one record per line:
//
//   u v r [gadget]       resistor of resistance r between vertices u and v
//   vertex id [label]    declares a vertex, optionally naming it
//
// u, v and id are nonnegative integers; r is an integer, a decimal
// (`0.25`, `1e-3`) or an exact fraction `p/q`. `#` starts a comment and
// blank lines are ignored. Ids are canonicalized to [0, n) in ascending
// order; a vertex without a declared label is labelled with its original id.

ResistorNetwork parse_network(std::string_view text);
ResistorNetwork parse_network(std::istream& in);
ResistorNetwork read_network_file(const std::filesystem::path& path);

/// Writes `net` in the edge-list format. Resistances are written exactly as
/// `p/q`; labels that differ from the vertex id get a `vertex` line.
std::string render_network(const ResistorNetwork& net);

}  // namespace resnet
