#include "rgc/binary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/recognize.hpp"
#include "rgc/relations.hpp"
#include "tree_builder.hpp"

namespace rgc {

long long unrooted_binary_count(int leaves) {
    long long c = 1;
    for (int k = 3; k <= leaves; ++k) c *= 2 * k - 5;
    return c;
}

long long rooted_binary_count(int leaves) {
    long long c = 1;
    for (int m = 2; m <= leaves; ++m) c *= 2 * m - 3;
    return c;
}

StarClass classify_star(const LabeledTree& t, int v) {
    if (t.tree.is_leaf(v))
        throw MalformedStar("vertex " + t.tree.id(v) + " is a leaf");
    StarClass sc{StarType::all_one, -1};
    for (int w : t.tree.neighbors(v)) {
        if (t.label(v, w) == 1) continue;
        if (sc.zero_port >= 0)
            throw MalformedStar("vertex " + t.tree.id(v) +
                                " has more than one incident 0-edge");
        sc = {StarType::zero_port, w};
    }
    return sc;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// unrooted binary shapes over port slots 0..k-1, internal ids from k up;
// generated by leaf insertion, so each shape appears exactly once
std::vector<EdgeList> unrooted_binary_topologies(int k) {
    if (k <= 1) return {EdgeList{}};
    std::vector<EdgeList> cur{EdgeList{{0, 1}}};
    for (int leaf = 2; leaf < k; ++leaf) {
        std::vector<EdgeList> next;
        int mid = k + (leaf - 2);
        for (const EdgeList& edges : cur)
            for (size_t e = 0; e < edges.size(); ++e) {
                EdgeList grown;
                for (size_t f = 0; f < edges.size(); ++f)
                    if (f != e) grown.push_back(edges[f]);
                grown.emplace_back(edges[e].first, mid);
                grown.emplace_back(mid, edges[e].second);
                grown.emplace_back(mid, leaf);
                next.push_back(std::move(grown));
            }
        cur = std::move(next);
    }
    return cur;
}

std::string strip_prefix(const std::string& id) {
    if (has_inner_prefix(id)) return id.substr(std::string(kInnerPrefix).size());
    return id;
}

// replaces inner vertex v by a binary shape over its neighbor ports; port
// edges keep their labels, interior edges take bits of interior_mask
LabeledTree resolve_vertex(const LabeledTree& t, int v, const EdgeList& topo,
                           unsigned interior_mask) {
    const PhyloTree& tr = t.tree;
    const std::vector<int>& ports = tr.neighbors(v);
    const int k = static_cast<int>(ports.size());

    PhyloTree::Init init;
    std::vector<std::int8_t> labels;
    std::vector<int> remap(tr.vertex_count(), -1);
    for (int w = 0; w < tr.vertex_count(); ++w) {
        if (w == v) continue;
        remap[w] = static_cast<int>(init.ids.size());
        init.ids.push_back(tr.id(w));
    }
    for (int e = 0; e < tr.edge_count(); ++e) {
        const Edge& ed = tr.edges()[e];
        if (ed.u == v || ed.v == v) continue;
        init.edges.emplace_back(remap[ed.u], remap[ed.v]);
        labels.push_back(static_cast<std::int8_t>(t.label_at(e)));
    }
    std::map<int, int> internal;
    auto slot = [&](int x) {
        if (x < k) return remap[ports[x]];
        auto it = internal.find(x);
        if (it != internal.end()) return it->second;
        int idx = static_cast<int>(init.ids.size());
        init.ids.push_back(fresh_inner_id(strip_prefix(tr.id(v)), init.ids));
        internal.emplace(x, idx);
        return idx;
    };
    int interior_seen = 0;
    for (const auto& [a, b] : topo) {
        int label;
        if (a < k || b < k) {
            int port = a < k ? a : b;
            label = t.label(v, ports[port]);
        } else {
            label = (interior_mask >> interior_seen++) & 1u;
        }
        init.edges.emplace_back(slot(a), slot(b));
        labels.push_back(static_cast<std::int8_t>(label));
    }
    return make_labeled(std::move(init), std::move(labels));
}

// A frame is what a binary explainer contracts to when every maximal all-0
// region collapses to a point: one vertex per zero-class, plus hub vertices
// of degree at least 3 that join the quotient components into a single
// tree.  Every frame edge is a 1-edge of the explainer; each class vertex
// regrows its members as a fan of 0-edges; each junction then resolves into
// the binary shapes over its ports with all-0 resolution edges.  The
// resolution edges cannot carry 1 inside a class region (they would break a
// within-class all-0 path or push a pair of single-1 classes to distance
// two), and a 1 inside a hub region is the frame with one more hub, so the
// explainers correspond exactly to frames with one shape chosen per
// junction.
struct Frame {
    int reps;  // class representatives, frame indices 0..reps-1
    int hubs;  // hub vertices, frame indices reps..reps+hubs-1
    EdgeList edges;
};

// canonical encoding with anonymous hubs, for deduplication; the minimum
// over all rootings is isomorphism invariant
std::string frame_canonical(const Frame& f,
                            const std::vector<std::string>& names) {
    const int n = f.reps + f.hubs;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [x, y] : f.edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    auto encode = [&](auto&& self, int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(self(self, w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const std::string& kid : kids) s += kid;
        s += ")";
        s += v < f.reps ? names[v] : "*";
        return s;
    };
    std::string best;
    for (int v = 0; v < n; ++v) {
        std::string s = encode(encode, v, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// labeled tree on n >= 2 nodes from a Pruefer sequence of length n-2
EdgeList prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    EdgeList edges;
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.insert(x);
    }
    auto it = leaves.begin();
    int a = *it;
    ++it;
    edges.emplace_back(a, *it);
    return edges;
}

// trees on k contracted components (nodes 0..k-1) and r hubs (nodes
// k..k+r-1) where every edge touches a hub and every hub has degree at
// least 3; components may attach to several hubs
void for_each_hub_tree(int k, int r,
                       const std::function<void(const EdgeList&)>& fn) {
    const int n = k + r;
    std::vector<int> deg(n, 0);
    std::vector<int> seq;
    auto emit = [&]() {
        seq.clear();
        for (int v = 0; v < n; ++v)
            for (int c = 1; c < deg[v]; ++c) seq.push_back(v);
        do {
            EdgeList edges = prufer_decode(seq, n);
            bool crosses = false;
            for (const auto& [x, y] : edges)
                if (x < k && y < k) {
                    crosses = true;
                    break;
                }
            if (!crosses) fn(edges);
        } while (std::next_permutation(seq.begin(), seq.end()));
    };
    auto assign = [&](auto&& self, int v, int left) -> void {
        if (v == n) {
            if (left == 0) emit();
            return;
        }
        int rest = 0;
        for (int w = v + 1; w < n; ++w) rest += w < k ? 1 : 3;
        for (int d = v < k ? 1 : 3; d <= left - rest; ++d) {
            deg[v] = d;
            self(self, v + 1, left - d);
        }
    };
    assign(assign, 0, 2 * (n - 1));
}

std::vector<Frame> frames_for(const QuotientGraph& q) {
    const std::vector<std::string>& reps = q.vertices();
    const int b = static_cast<int>(reps.size());
    std::map<std::string, int> at;
    for (int i = 0; i < b; ++i) at.emplace(reps[i], i);
    EdgeList base;
    for (const auto& [x, y] : q.sym_pairs()) base.emplace_back(at.at(x), at.at(y));

    const std::vector<std::vector<std::string>> comps = q.components();
    const int k = static_cast<int>(comps.size());
    std::vector<Frame> out;
    if (k == 1) {
        out.push_back(Frame{b, 0, std::move(base)});
        return out;
    }
    // joining exactly two components would need a degree-2 hub
    if (k == 2) return out;

    std::vector<std::vector<int>> comp_vertices(k);
    for (int c = 0; c < k; ++c)
        for (const std::string& v : comps[c]) comp_vertices[c].push_back(at.at(v));

    // hub degrees consume 3r of the 2(k+r-1) edge ends, components at least
    // one each, so r never exceeds k-2
    std::set<std::string> seen;
    for (int r = 1; r <= k - 2; ++r) {
        for_each_hub_tree(k, r, [&](const EdgeList& joined) {
            // each component-hub edge picks the class vertex it enters
            std::vector<std::pair<int, int>> cross;  // (component, frame hub)
            EdgeList fixed;
            for (const auto& [x, y] : joined) {
                if (x >= k && y >= k)
                    fixed.emplace_back(b + (x - k), b + (y - k));
                else if (x >= k)
                    cross.emplace_back(y, b + (x - k));
                else
                    cross.emplace_back(x, b + (y - k));
            }
            std::vector<size_t> pick(cross.size(), 0);
            while (true) {
                Frame f{b, r, base};
                f.edges.insert(f.edges.end(), fixed.begin(), fixed.end());
                for (size_t i = 0; i < cross.size(); ++i)
                    f.edges.emplace_back(comp_vertices[cross[i].first][pick[i]],
                                         cross[i].second);
                if (seen.insert(frame_canonical(f, reps)).second)
                    out.push_back(std::move(f));
                size_t i = 0;
                while (i < pick.size()) {
                    if (++pick[i] < comp_vertices[cross[i].first].size()) break;
                    pick[i++] = 0;
                }
                if (i == pick.size()) break;
            }
        });
    }
    return out;
}

LabeledTree assemble_frame(const Frame& f, const std::vector<std::string>& reps,
                           const RelationGraph& rel) {
    std::vector<int> deg(f.reps + f.hubs, 0);
    for (const auto& [x, y] : f.edges) {
        ++deg[x];
        ++deg[y];
    }
    TreeBuilder b;
    std::vector<int> attach(f.reps + f.hubs, -1);
    for (int i = 0; i < f.reps; ++i) {
        const std::vector<std::string>& members = rel.class_of(reps[i]);
        const int m = static_cast<int>(members.size());
        if (m + deg[i] >= 3) {
            int star = b.add_fresh_inner(reps[i]);
            for (const std::string& x : members) b.link(star, b.add(x), 0);
            attach[i] = star;
        } else if (m == 2) {
            // an isolated two-member class is a single 0-edge
            int u = b.add(members[0]);
            b.link(u, b.add(members[1]), 0);
            attach[i] = u;
        } else {
            attach[i] = b.add(members[0]);
        }
    }
    for (int j = 0; j < f.hubs; ++j) attach[f.reps + j] = b.add_fresh_inner("hub");
    for (const auto& [x, y] : f.edges) b.link(attach[x], attach[y], 1);
    return b.build();
}

struct Resolver {
    const RelationGraph& rel;
    std::set<std::string> seen;
    std::vector<LabeledTree> out;

    void finish(const LabeledTree& t) {
        if (!is_binary(t.tree) || !explains(t, rel)) return;
        if (seen.insert(canonical_form(t)).second) out.push_back(t);
    }

    void resolve(const LabeledTree& t) {
        const PhyloTree& tr = t.tree;
        for (int v = 0; v < tr.vertex_count(); ++v) {
            if (tr.is_leaf(v) || tr.degree(v) <= 3) continue;
            for (const EdgeList& topo : unrooted_binary_topologies(tr.degree(v)))
                resolve(resolve_vertex(t, v, topo, 0));
            return;
        }
        finish(t);
    }
};

bool has_degree_two_inner(const PhyloTree& t) {
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!t.is_leaf(v) && t.degree(v) == 2) return true;
    return false;
}

}  // namespace

long long count_binary_refinements(const LabeledTree& assembly,
                                   const RelationGraph& rel) {
    const PhyloTree& tr = assembly.tree;
    if (tr.rooted())
        throw InvariantError("binary refinement expects an unrooted tree");
    // the closed form assumes every class of rel is realized in the
    // assembly as a 0-edge fan, so the leaves are exactly the taxa
    if (tr.taxa() != rel.taxa())
        throw TaxonMismatch("assembly leaves do not match the relation");
    if (has_degree_two_inner(tr)) return 0;

    long long total = 1;
    for (int v = 0; v < tr.vertex_count(); ++v)
        if (!tr.is_leaf(v)) total *= unrooted_binary_count(tr.degree(v));
    return total;
}

std::vector<LabeledTree> refine_binary(const LabeledTree& assembly,
                                       const RelationGraph& rel) {
    if (assembly.tree.rooted())
        throw InvariantError("binary refinement expects an unrooted tree");

    Resolver resolver{rel, {}, {}};
    if (!has_degree_two_inner(assembly.tree)) resolver.resolve(assembly);
    std::sort(resolver.out.begin(), resolver.out.end(),
              [](const LabeledTree& a, const LabeledTree& b) {
                  return canonical_form(a) < canonical_form(b);
              });
    return resolver.out;
}

BinaryEnumeration enumerate_binary(const RelationGraph& rel) {
    if (rel.mode() != RelationMode::undirected)
        throw InvariantError("binary enumeration needs an undirected relation");
    QuotientGraph q = build_quotient(rel);
    CheckResult check = check_undirected(q);
    if (!check.ok()) throw RejectedRelation(*check.rejection);

    BinaryEnumeration out;
    Resolver resolver{rel, {}, {}};
    for (const Frame& f : frames_for(q)) {
        LabeledTree assembly = assemble_frame(f, q.vertices(), rel);
        out.assembly_counts.push_back(count_binary_refinements(assembly, rel));
        resolver.resolve(assembly);
        out.assemblies.push_back(std::move(assembly));
    }
    out.trees = std::move(resolver.out);
    std::sort(out.trees.begin(), out.trees.end(),
              [](const LabeledTree& a, const LabeledTree& b) {
                  return canonical_form(a) < canonical_form(b);
              });
    return out;
}

}  // namespace rgc
