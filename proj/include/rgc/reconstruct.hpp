#pragma once

// building trees that realize an undirected quotient graph

#include <string>
#include <vector>

#include "rgc/quotient.hpp"
#include "rgc/relation.hpp"
#include "rgc/tree.hpp"

namespace rgc {

// Expands a connected, cycle-free, undirected quotient into a tree whose
// single-1-path pairs are exactly the quotient edges and whose 0-paths are
// trivial.  Every inner quotient vertex u becomes an inner tree vertex ·u
// carrying u as a pendant leaf on a 0-edge; quotient edges become 1-edges.
// A single vertex maps to the one-leaf tree, a single edge to one 1-edge.
// Throws NotATree if the quotient is disconnected or has a cycle.
LabeledTree expand_quotient(const QuotientGraph& q);

// True when the labeled tree is in the image of expand_quotient: every inner
// vertex has exactly one incident 0-edge, that edge ends in a leaf, and all
// remaining edges are labeled 1.  On failure an offending vertex id is
// written to *witness when witness is non-null.
bool in_pendant_zero_form(const LabeledTree& t, std::string* witness = nullptr);

// Inverse of expand_quotient on its image: contracts each pendant 0-edge
// into its leaf and returns the quotient on the leaf labels.  Throws
// NotInClassT when in_pendant_zero_form fails.
QuotientGraph collapse_tree(const LabeledTree& t);

// Expands a possibly disconnected, cycle-free, undirected quotient into one
// tree explaining the corresponding relation.  Components are expanded
// separately and joined through a fresh hub vertex on 1-edges; single-vertex
// components attach directly, two-vertex components gain a fresh inner
// vertex so that the pair stays a single-1 pair across the hub.  Choices
// (attachment points, which endpoint of a two-vertex component gets the
// 1-edge) are made deterministically.  Throws NotATree on a cycle.
LabeledTree infer_undirected(const QuotientGraph& q);

// All hub assemblies reachable by varying the deterministic choices of
// infer_undirected: the attachment vertex of each expanded component ranges
// over its inner vertices, and each two-vertex component may carry its
// 1-edge on either endpoint.  For a connected quotient this is the single
// expand_quotient tree.  The fixed choices of infer_undirected produce the
// first entry.
std::vector<LabeledTree> hub_assembly_pool(const QuotientGraph& q);

// Greedily contracts interior edges of t, in sorted endpoint-id order, as
// long as the tree still explains rel, then suppresses degree-2 inner
// vertices left next to pendant 0-edges.  Throws DoesNotExplain if t does
// not explain rel to begin with.
LabeledTree make_least_resolved(const LabeledTree& t, const RelationGraph& rel);

}  // namespace rgc
