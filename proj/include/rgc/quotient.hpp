#pragma once

// Collapsing a relation modulo its zero-classes, and undoing the collapse on
// a reconstructed tree.

#include "rgc/relation.hpp"
#include "rgc/tree.hpp"

namespace rgc {

// one vertex per zero-class, named by the class representative (its least
// member). Pairs between two classes must be uniform across all member pairs,
// in kind and direction; otherwise no tree can explain the relation and
// IllDefinedQuotient reports a witness.
QuotientGraph build_quotient(const RelationGraph& rel);

// expand each nontrivial class leaf of a tree over the representatives into
// a fan of 0-edges over the members, merging the fan into the leaf's inner
// neighbor when they already share a 0-edge; the result explains rel
// whenever the input explains build_quotient(rel), with no vertex spent
// beyond the member leaves
LabeledTree lift_tree(const LabeledTree& qtree, const RelationGraph& rel);

}  // namespace rgc
