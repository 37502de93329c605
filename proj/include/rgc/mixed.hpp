#pragma once

// turning mixed quotients (mandatory arcs plus free pairs) into trees

#include <string>
#include <vector>

#include "rgc/quotient.hpp"
#include "rgc/tree.hpp"

namespace rgc {

// center candidates per component, in component order; throws
// RejectedRelation when the quotient admits no tree at all
std::vector<std::vector<std::string>> admissible_centers(const QuotientGraph& q);

// orients every free pair away from the chosen center of its component and
// keeps the mandatory arcs, yielding a directed quotient.  centers holds one
// vertex per component, in component order.  Throws NotCentral when a choice
// is not admissible.
QuotientGraph orient(const QuotientGraph& q, const std::vector<std::string>& centers);

// one tree realizing every mandatory arc and exactly one direction of every
// free pair: the rooted expansion of the oriented quotient, rooted at the
// hub when the quotient is disconnected
LabeledTree reconstruct_mixed(const QuotientGraph& q,
                              const std::vector<std::string>& centers);

// reconstruction lifted over the full relation, with the center of each
// component chosen to minimize the vertex count of the lifted tree; a center
// inside a nontrivial class can absorb the class fan into the root copy, so
// the cheapest choice depends on the class sizes.  Ties keep the earliest
// admissible center.
LabeledTree reconstruct_mixed_minimal(const RelationGraph& rel);

}  // namespace rgc
