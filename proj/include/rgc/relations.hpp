#pragma once

// Forward direction: read the event relations off a labeled tree.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rgc/relation.hpp"
#include "rgc/tree.hpp"

namespace rgc {

struct PathSummary {
    int length = 0;  // edges on the path
    int ones = 0;
    int zeros = 0;
};

PathSummary summarize_path(const LabeledTree& t, const std::string& x,
                           const std::string& y);  // UnknownTaxon

// partition of the taxa by all-0 connecting paths
std::vector<std::vector<std::string>> relation_zero(const LabeledTree& t);

// unordered pairs whose path carries exactly one 1
std::set<TaxonPair> relation_single1(const LabeledTree& t);

// ordered pairs (x, y): from the meeting vertex the x side is all 0 and the
// y side carries exactly one 1; needs a root
std::set<TaxonPair> relation_directed1(const LabeledTree& t);

// unordered pairs whose path carries at least k 1s
std::set<TaxonPair> relation_at_least_k(const LabeledTree& t, int k);

// ordered pairs (x, y): x side all 0, y side carries at least one 1
std::set<TaxonPair> relation_squiggle(const LabeledTree& t);

// whether the tree realizes the relation exactly. Undirected and directed
// modes ask for equality of the respective relations; mixed mode asks that
// every mandatory arc is realized as stated, every symmetric pair in exactly
// one direction, and nothing else appears.
bool explains(const LabeledTree& t, const RelationGraph& rel);  // TaxonMismatch

namespace detail {

// compact signature over the sorted leaf order, for bulk comparisons;
// supports up to 8 taxa (pair bits at i*8+j)
struct RelationBits {
    int n = 0;
    std::vector<int> zero_class_of;  // normalized: classes numbered by first member
    std::uint64_t sym = 0;           // bit i*8+j for i < j
    std::uint64_t dir = 0;           // bit i*8+j for arc i -> j

    friend bool operator==(const RelationBits&, const RelationBits&) = default;
};

RelationBits tree_bits(const LabeledTree& t, bool with_directed);
RelationBits relation_bits(const RelationGraph& rel);

// the mixed-mode acceptance test against a target; sym bits of the target
// hold the pairs free to take either direction
bool bits_explain(const RelationBits& tree, const RelationBits& target,
                  RelationMode mode);

}  // namespace detail

}  // namespace rgc
