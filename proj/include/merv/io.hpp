#pragma once

// Text formats.
//
// Profiles (.prof): `m <int>` then `<mult> x C|L <a1> <a2> ...` lines.
// Graphs (.gr): `p <n>`, then `e <u> <v>` and `c <v> <colour>` lines, 1-based.
// Blank lines and `#` comments are ignored in both.

#include <optional>
#include <string>

#include "merv/core.hpp"
#include "merv/graph.hpp"

namespace merv::io {

/// `source` names the input in diagnostics ("<source>:<line>: <reason>").
Profile parse_profile_text(const std::string& text, const std::string& source = "<input>");
Profile parse_profile(const std::string& path);

/// Consecutive identical votes are grouped into one line.
std::string write_profile(const Profile& p);

/// A `# decision C:<k>` / `# decision L:<k>` comment, if present.
std::optional<DecisionSpace> declared_decision(const std::string& text);

ColoredGraph parse_graph_text(const std::string& text, const std::string& source = "<input>");
ColoredGraph parse_graph(const std::string& path);

/// Colour lines are emitted only for non-zero colours.
std::string write_graph(const ColoredGraph& g);

/// Sorted 1-based edge list, one `e u v` line per edge, after `p n`.
std::string render_edges(int num_vertices, const std::vector<Edge>& edges);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace merv::io
