#pragma once

// Resolving multifurcations into binary explainers and counting them.
//
// Collapsing every maximal all-0 region of a binary explainer contracts it
// to a frame: the quotient of the relation, its components joined into one
// tree by extra all-1 hub vertices of degree at least three.  Reversing
// the contraction regrows each class as a fan of 0-edges at its frame
// vertex and resolves every junction into the binary shapes over its
// ports, with all resolution edges labeled 0.  Binary explainers therefore
// correspond one-to-one to a frame plus one shape choice per junction,
// which yields both the enumeration and the closed-form counts.

#include <cstdint>
#include <string>
#include <vector>

#include "rgc/quotient.hpp"
#include "rgc/relation.hpp"
#include "rgc/tree.hpp"

namespace rgc {

// number of unrooted binary trees on the given leaf count, (2k-5)!! for k>=3
long long unrooted_binary_count(int leaves);

// number of rooted binary trees on the given leaf count, (2m-3)!! for m>=2
long long rooted_binary_count(int leaves);

// edge pattern around an inner vertex of a tree in pendant-zero form
enum class StarType {
    all_one,    // every incident edge is 1
    zero_port,  // exactly one incident edge is 0
};

struct StarClass {
    StarType type;
    int zero_port;  // neighbor across the 0-edge, -1 for all_one
};

// classifies the edge pattern around inner vertex v; throws MalformedStar
// when more than one incident edge carries 0
StarClass classify_star(const LabeledTree& t, int v);

// closed-form count of the binary trees refine_binary yields for one
// frame assembly: the product over its inner vertices of the unrooted
// binary count of their degrees.  Zero when the assembly has a degree-2
// inner vertex, since no binary tree can keep such a vertex.  The leaves
// of the assembly must be exactly the taxa of rel.
long long count_binary_refinements(const LabeledTree& assembly,
                                   const RelationGraph& rel);

// every binary tree obtained from the assembly by resolving each junction
// into the binary shapes over its ports, with resolution edges labeled 0;
// kept only if it explains rel, deduplicated and sorted by canonical form.
// Resolution edges never carry 1: inside a class region a 1 would break an
// all-0 path or stretch a single-1 pair, and splitting a hub in two is the
// assembly with one more hub.
std::vector<LabeledTree> refine_binary(const LabeledTree& assembly,
                                       const RelationGraph& rel);

struct BinaryEnumeration {
    std::vector<LabeledTree> assemblies;     // one per frame, classes as 0-edge fans
    std::vector<long long> assembly_counts;  // closed-form count per assembly
    std::vector<LabeledTree> trees;          // all binary explainers, deduplicated
};

// full pipeline for an undirected relation: quotient, shape check, frame
// enumeration, refinement of every frame assembly.  Throws
// RejectedRelation when the quotient is not a forest and
// IllDefinedQuotient when it does not exist.
BinaryEnumeration enumerate_binary(const RelationGraph& rel);

}  // namespace rgc
