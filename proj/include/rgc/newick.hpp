#pragma once

// Newick text with edge labels in the branch-length slot, plus DOT export

#include <optional>
#include <string>

#include "rgc/tree.hpp"

namespace rgc {

struct ParseOptions {
    // forces the result rooted or unrooted, overriding [&R]/[&U] markers
    std::optional<bool> rooted;
};

// Reads one Newick tree.  Every branch slot must carry literally "0" or "1"
// (LabelError otherwise, including a missing slot).  A "[&R]" comment makes
// the tree rooted at the outermost grouping, "[&U]" and the default leave
// it unrooted; an unrooted outer vertex of degree 2 is suppressed by
// merging its two edges.  Unnamed inner vertices receive synthesized ids.
// Structural errors raise ParseError with 1-based line and column, inner
// vertices of degree 2 other than the root raise DegreeError.
LabeledTree parse_newick(const std::string& text, const ParseOptions& opts = {});

// Canonical Newick: starts at the root or at the centroid, children ordered
// by edge label and subtree encoding, inner ids written out, "[&R]" before
// the semicolon when rooted.  Output is stable across runs.
std::string serialize_newick(const LabeledTree& t);

// undirected DOT graph; 1-edges solid, 0-edges dashed, root double-circled
std::string serialize_dot(const LabeledTree& t);

}  // namespace rgc
