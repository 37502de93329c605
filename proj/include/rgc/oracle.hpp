#pragma once

// Exhaustive enumeration at desk scale. Everything here is meant to certify
// the constructive algorithms against ground truth, not to scale.

#include <functional>
#include <vector>

#include "rgc/relation.hpp"
#include "rgc/relations.hpp"
#include "rgc/tree.hpp"

namespace rgc {

struct OracleCaps {
    int max_leaves = 7;
    int max_label_bits = 13;  // refuse labelings beyond 2^13 per tree
};

// every tree shape over the given taxa, each exactly once up to
// leaf-respecting isomorphism; inner vertices get synthesized ids
void for_each_tree(const std::vector<std::string>& taxa, bool rooted,
                   const std::function<void(const PhyloTree&)>& fn,
                   const OracleCaps& caps = {});  // CapExceeded
std::vector<PhyloTree> enumerate_trees(const std::vector<std::string>& taxa,
                                       bool rooted, const OracleCaps& caps = {});

// all 2^|E| labelings in mask order
void for_each_labeling(const PhyloTree& t,
                       const std::function<void(const EdgeLabeling&)>& fn,
                       const OracleCaps& caps = {});  // CapExceeded
std::vector<EdgeLabeling> enumerate_labelings(const PhyloTree& t,
                                              const OracleCaps& caps = {});

// every labeled tree over rel's taxa that explains rel (rooted trees for
// directed and mixed modes), duplicate-free
std::vector<LabeledTree> brute_force_explainers(const RelationGraph& rel,
                                                const OracleCaps& caps = {});

}  // namespace rgc
