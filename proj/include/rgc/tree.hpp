#pragma once

// Phylogenetic trees with 0/1 edge labels.
//
// Vertices carry opaque string ids. Leaves (degree <= 1) are the taxa; their
// ids must not start with the reserved prefix "·", which marks synthesized
// inner-vertex ids. A single-vertex tree counts as both leaf and inner vertex.
// In a two-vertex tree both endpoints are leaves, so its edge is not interior.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rgc/errors.hpp"

namespace rgc {

inline const std::string kInnerPrefix = "·";  // "·"

bool has_inner_prefix(const std::string& id);

struct Edge {
    int u, v;  // u < v
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class PhyloTree {
public:
    struct Init {
        std::vector<std::string> ids;
        std::vector<std::pair<int, int>> edges;
        std::optional<int> root;
        // permits non-root inner vertices of degree 2, e.g. the hub of a
        // two-component assembly
        bool allow_degree_two = false;
    };

    PhyloTree() = default;
    explicit PhyloTree(Init init);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& id(int v) const { return ids_.at(v); }
    const std::vector<std::string>& ids() const { return ids_; }
    int vertex(const std::string& id) const;           // UnknownVertex
    std::optional<int> find_vertex(const std::string& id) const;

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    bool is_leaf(int v) const { return degree(v) <= 1; }
    bool is_inner(int v) const { return vertex_count() == 1 || degree(v) >= 2; }

    std::vector<int> leaves() const;                   // sorted by id
    std::vector<std::string> taxa() const;             // sorted leaf ids

    bool rooted() const { return root_.has_value(); }
    int root() const;                                  // UnrootedTree

    const std::vector<Edge>& edges() const { return edges_; }
    int edge_index(int u, int v) const;                // UnknownVertex
    bool adjacent(int u, int v) const;

    // path from x to y as an ordered edge list; empty iff x == y
    std::vector<Edge> path(int x, int y) const;
    std::vector<int> path_vertices(int x, int y) const;  // includes endpoints

    int lca(int x, int y) const;                       // UnrootedTree

    friend bool operator==(const PhyloTree&, const PhyloTree&) = default;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::map<std::string, int, std::less<>> index_;
    std::optional<int> root_;
    std::vector<int> parent_, depth_;  // filled when rooted

    void validate(bool allow_degree_two) const;
};

// labels parallel to PhyloTree::edges()
struct EdgeLabeling {
    std::vector<std::int8_t> by_edge;
    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

struct LabeledTree {
    PhyloTree tree;
    EdgeLabeling labels;

    int label(int u, int v) const { return labels.by_edge.at(tree.edge_index(u, v)); }
    int label_at(int edge_index) const { return labels.by_edge.at(edge_index); }
    void check_labeling() const;  // InvariantError unless total over edges

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

// builds a labeled tree from labels parallel to init.edges; the constructor
// normalizes and reorders edges, so the labels are realigned to match
LabeledTree make_labeled(PhyloTree::Init init, std::vector<std::int8_t> labels);

struct RootedTriple {
    // cherry {a, b} with outgroup c; constructor sorts the cherry
    std::string a, b, c;
    RootedTriple(std::string x, std::string y, std::string out);
    friend auto operator<=>(const RootedTriple&, const RootedTriple&) = default;
};

// xy|z is displayed iff the x-y path avoids the z-to-root path entirely
bool displays_triple(const PhyloTree& tree, const RootedTriple& t);

// usual edge contraction; the surviving vertex keeps the lexicographically
// smaller id and the root follows it
LabeledTree contract_edge(const LabeledTree& t, int u, int v);  // TerminalEdge

// drop a degree-2 root and merge its two edges (0+1 -> 1); InvariantError if
// both carry label 1, since the merged edge could not be labeled
LabeledTree unroot(const LabeledTree& t);

// isomorphism-invariant encoding respecting leaf ids, edge labels and
// rootedness; inner ids are ignored
std::string canonical_form(const LabeledTree& t);
bool isomorphic(const LabeledTree& a, const LabeledTree& b);

// encoding of the subtree at v as seen from parent (-1 looks at every
// neighbor); shared by canonical_form and the serializer's child ordering
std::string subtree_encoding(const LabeledTree& t, int v, int parent);

// where a serialization starts: the root if rooted, otherwise a centroid,
// ties broken by half encodings
int canonical_root_vertex(const LabeledTree& t);

// fully resolved: every inner vertex has degree 3 (a rooted tree's root has
// degree 2); single-vertex and single-edge trees count vacuously
bool is_binary(const PhyloTree& t);

// true when a vertex that is neither a leaf nor the root has degree 2.  The
// forest constructions deliberately emit one such join vertex when exactly
// two components must be connected; callers that need strict trees filter
// on this.
bool degree_two_join(const PhyloTree& t);

// fresh inner id "·base", with primes appended until unused
std::string fresh_inner_id(const std::string& base,
                           const std::vector<std::string>& used);

}  // namespace rgc
