#pragma once

// rooted trees for directed quotients, and the triples they all share

#include <set>
#include <vector>

#include "rgc/quotient.hpp"
#include "rgc/tree.hpp"

namespace rgc {

// Expands a connected directed quotient into a rooted tree whose directed
// single-1 pairs are exactly the arcs.  The underlying expansion follows
// expand_quotient, except that the unique source always receives an inner
// copy carrying it as a pendant 0-leaf, and that copy becomes the root; a
// single vertex stays a single rooted leaf.  Throws NotATree when
// disconnected and RejectedRelation when the arcs do not admit a tree.
LabeledTree infer_rooted_component(const QuotientGraph& q);

// Expands a possibly disconnected directed quotient into rooted trees, one
// per admissible root: the source copy of each component, then a fresh hub
// joining the components.  Components always attach to the hub through
// their source copies, and a single-vertex component grows its own copy
// when it is chosen as root.  A connected quotient yields one tree.
std::vector<LabeledTree> infer_rooted(const QuotientGraph& q);

// the triples read off the maximal directed paths of the quotient: each
// path x1 -> ... -> xm contributes xi xj | xl for l < i < j
std::set<RootedTriple> path_triples(const QuotientGraph& q);

// closes a triple set under the three dyadic inference rules
//   ab|c, ad|c  gives  bd|c
//   ab|c, ad|b  gives  bd|c and ad|c
//   ab|c, cd|b  gives  ab|d and cd|a
// and returns the fixpoint
std::set<RootedTriple> close_triples(const std::set<RootedTriple>& start);

bool displays_all(const PhyloTree& tree, const std::set<RootedTriple>& triples);

}  // namespace rgc
