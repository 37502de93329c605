#include "rgc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rgc {

namespace {

// growable adjacency-free tree sketch; vertices are never removed, so
// insertion positions stay stable while we recurse
struct Proto {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> taxon_of;  // taxon index per vertex, -1 for inner
    int root = -1;

    int add_vertex(int taxon) {
        taxon_of.push_back(taxon);
        return static_cast<int>(taxon_of.size()) - 1;
    }
};

PhyloTree materialize(const Proto& p, const std::vector<std::string>& taxa,
                      bool rooted) {
    PhyloTree::Init init;
    int inner_seq = 0;
    for (int t : p.taxon_of)
        init.ids.push_back(t >= 0 ? taxa[t]
                                  : kInnerPrefix + std::to_string(++inner_seq));
    init.edges = p.edges;
    if (rooted) init.root = p.root;
    return PhyloTree(std::move(init));
}

void grow_unrooted(Proto& p, int next, const std::vector<std::string>& taxa,
                   const std::function<void(const PhyloTree&)>& fn) {
    const int n = static_cast<int>(taxa.size());
    if (next == n) {
        fn(materialize(p, taxa, false));
        return;
    }
    const size_t nverts = p.taxon_of.size();
    const size_t nedges = p.edges.size();
    if (nverts == 1) {
        // the lone vertex is leaf and inner vertex at once; the only move
        // is the first edge
        int leaf = p.add_vertex(next);
        p.edges.emplace_back(0, leaf);
        grow_unrooted(p, next + 1, taxa, fn);
        p.edges.resize(nedges);
        p.taxon_of.resize(nverts);
        return;
    }
    for (size_t v = 0; v < nverts; ++v) {
        if (p.taxon_of[v] >= 0) continue;  // only inner vertices take new leaves
        int leaf = p.add_vertex(next);
        p.edges.emplace_back(static_cast<int>(v), leaf);
        grow_unrooted(p, next + 1, taxa, fn);
        p.edges.resize(nedges);
        p.taxon_of.resize(nverts);
    }
    for (size_t e = 0; e < nedges; ++e) {
        auto [a, b] = p.edges[e];
        int mid = p.add_vertex(-1);
        int leaf = p.add_vertex(next);
        p.edges[e] = {a, mid};
        p.edges.emplace_back(mid, b);
        p.edges.emplace_back(mid, leaf);
        grow_unrooted(p, next + 1, taxa, fn);
        p.edges.resize(nedges);
        p.edges[e] = {a, b};
        p.taxon_of.resize(nverts);
    }
}

void grow_rooted(Proto& p, int next, const std::vector<std::string>& taxa,
                 const std::function<void(const PhyloTree&)>& fn) {
    const int n = static_cast<int>(taxa.size());
    if (next == n) {
        fn(materialize(p, taxa, true));
        return;
    }
    const size_t nverts = p.taxon_of.size();
    const size_t nedges = p.edges.size();
    const int old_root = p.root;
    if (nverts > 1) {
        for (size_t v = 0; v < nverts; ++v) {
            if (p.taxon_of[v] >= 0) continue;
            int leaf = p.add_vertex(next);
            p.edges.emplace_back(static_cast<int>(v), leaf);
            grow_rooted(p, next + 1, taxa, fn);
            p.edges.resize(nedges);
            p.taxon_of.resize(nverts);
        }
        for (size_t e = 0; e < nedges; ++e) {
            auto [a, b] = p.edges[e];
            int mid = p.add_vertex(-1);
            int leaf = p.add_vertex(next);
            p.edges[e] = {a, mid};
            p.edges.emplace_back(mid, b);
            p.edges.emplace_back(mid, leaf);
            grow_rooted(p, next + 1, taxa, fn);
            p.edges.resize(nedges);
            p.edges[e] = {a, b};
            p.taxon_of.resize(nverts);
        }
    }
    {
        int top = p.add_vertex(-1);
        int leaf = p.add_vertex(next);
        p.edges.emplace_back(top, old_root);
        p.edges.emplace_back(top, leaf);
        p.root = top;
        grow_rooted(p, next + 1, taxa, fn);
        p.edges.resize(nedges);
        p.taxon_of.resize(nverts);
        p.root = old_root;
    }
}

}  // namespace

void for_each_tree(const std::vector<std::string>& taxa, bool rooted,
                   const std::function<void(const PhyloTree&)>& fn,
                   const OracleCaps& caps) {
    if (taxa.empty()) throw InvariantError("no taxa to build trees over");
    if (static_cast<int>(taxa.size()) > caps.max_leaves)
        throw CapExceeded("tree enumeration capped at " +
                          std::to_string(caps.max_leaves) + " leaves");
    auto sorted = taxa;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvariantError("duplicate taxon");
    Proto p;
    p.add_vertex(0);
    p.root = 0;
    if (rooted)
        grow_rooted(p, 1, sorted, fn);
    else
        grow_unrooted(p, 1, sorted, fn);
}

std::vector<PhyloTree> enumerate_trees(const std::vector<std::string>& taxa,
                                       bool rooted, const OracleCaps& caps) {
    std::vector<PhyloTree> out;
    for_each_tree(taxa, rooted, [&](const PhyloTree& t) { out.push_back(t); }, caps);
    return out;
}

void for_each_labeling(const PhyloTree& t,
                       const std::function<void(const EdgeLabeling&)>& fn,
                       const OracleCaps& caps) {
    const int m = t.edge_count();
    if (m > caps.max_label_bits)
        throw CapExceeded("labeling enumeration capped at 2^" +
                          std::to_string(caps.max_label_bits));
    EdgeLabeling l;
    l.by_edge.assign(m, 0);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        for (int e = 0; e < m; ++e)
            l.by_edge[e] = static_cast<std::int8_t>((mask >> e) & 1);
        fn(l);
    }
}

std::vector<EdgeLabeling> enumerate_labelings(const PhyloTree& t,
                                              const OracleCaps& caps) {
    std::vector<EdgeLabeling> out;
    for_each_labeling(t, [&](const EdgeLabeling& l) { out.push_back(l); }, caps);
    return out;
}

namespace {

// per-tree precomputation so the labeling scan only sums cached edge lists
struct PairScan {
    std::vector<int> leaf_vertices;  // sorted by id
    struct Pair {
        int i, j;
        std::vector<int> edge_idx;  // path edges, i side first
        int split;                  // edges on the i side of the meeting vertex
    };
    std::vector<Pair> pairs;
    std::vector<std::pair<int, int>> edge_ends;

    PairScan(const PhyloTree& t, bool rooted) {
        for (int v : t.leaves()) leaf_vertices.push_back(v);
        for (const Edge& e : t.edges()) edge_ends.emplace_back(e.u, e.v);
        const int n = static_cast<int>(leaf_vertices.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Pair p{i, j, {}, 0};
                auto vs = t.path_vertices(leaf_vertices[i], leaf_vertices[j]);
                int meet = rooted ? t.lca(leaf_vertices[i], leaf_vertices[j]) : -1;
                for (size_t k = 0; k + 1 < vs.size(); ++k) {
                    if (vs[k] == meet) p.split = static_cast<int>(p.edge_idx.size());
                    p.edge_idx.push_back(t.edge_index(vs[k], vs[k + 1]));
                }
                if (meet >= 0 && vs.back() == meet)
                    p.split = static_cast<int>(p.edge_idx.size());
                pairs.push_back(std::move(p));
            }
    }

    detail::RelationBits bits(const EdgeLabeling& l, bool rooted,
                              std::vector<int>& dsu, std::vector<int>& number) const {
        detail::RelationBits out;
        const int n = static_cast<int>(leaf_vertices.size());
        out.n = n;
        dsu.resize(edge_ends.size() + leaf_vertices.size() + 16);
        std::iota(dsu.begin(), dsu.end(), 0);
        auto find = [&](int v) {
            while (dsu[v] != v) v = dsu[v] = dsu[dsu[v]];
            return v;
        };
        for (size_t e = 0; e < edge_ends.size(); ++e)
            if (!l.by_edge[e]) {
                int a = find(edge_ends[e].first), b = find(edge_ends[e].second);
                if (a != b) dsu[a] = b;
            }
        number.assign(dsu.size(), -1);
        int next = 0;
        for (int v : leaf_vertices) {
            int r = find(v);
            if (number[r] < 0) number[r] = next++;
            out.zero_class_of.push_back(number[r]);
        }
        for (const auto& p : pairs) {
            int ones_i = 0, ones_j = 0, k = 0;
            for (int e : p.edge_idx) {
                (k++ < p.split ? ones_i : ones_j) += l.by_edge[e];
            }
            int total = ones_i + ones_j;
            if (total == 1) out.sym |= 1ull << (p.i * 8 + p.j);
            if (rooted) {
                if (ones_i == 0 && ones_j == 1) out.dir |= 1ull << (p.i * 8 + p.j);
                if (ones_j == 0 && ones_i == 1) out.dir |= 1ull << (p.j * 8 + p.i);
            }
        }
        return out;
    }
};

}  // namespace

std::vector<LabeledTree> brute_force_explainers(const RelationGraph& rel,
                                                const OracleCaps& caps) {
    if (static_cast<int>(rel.taxa().size()) > caps.max_leaves)
        throw CapExceeded("explainer search capped at " +
                          std::to_string(caps.max_leaves) + " taxa");
    const bool rooted = rel.mode() != RelationMode::undirected;
    const auto target = detail::relation_bits(rel);
    std::vector<LabeledTree> out;
    std::vector<int> dsu, number;
    for_each_tree(
        rel.taxa(), rooted,
        [&](const PhyloTree& t) {
            PairScan scan(t, rooted);
            for_each_labeling(
                t,
                [&](const EdgeLabeling& l) {
                    auto bits = scan.bits(l, rooted, dsu, number);
                    if (detail::bits_explain(bits, target, rel.mode()))
                        out.push_back({t, l});
                },
                caps);
        },
        caps);
    return out;
}

}  // namespace rgc
