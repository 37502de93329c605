#include "rgc/reconstruct.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/relations.hpp"
#include "tree_builder.hpp"

namespace rgc {

namespace {

void require_undirected(const QuotientGraph& q, const char* where) {
    if (q.mode() != RelationMode::undirected)
        throw InvariantError(std::string(where) + " expects an undirected quotient");
}

// a connected quotient on n vertices is a tree exactly when it has n-1 edges
void require_component_tree(const QuotientGraph& q) {
    auto comps = q.components();
    if (comps.size() != 1) throw NotATree("quotient is disconnected");
    if (q.sym_pairs().size() + 1 != q.vertices().size())
        throw NotATree("quotient component contains a cycle");
}

}  // namespace

LabeledTree expand_quotient(const QuotientGraph& q) {
    require_undirected(q, "expand_quotient");
    require_component_tree(q);
    const auto& vs = q.vertices();

    TreeBuilder b;
    if (vs.size() == 1) {
        b.add(vs.front());
        return b.build();
    }
    if (vs.size() == 2) {
        int u = b.add(vs[0]);
        int v = b.add(vs[1]);
        b.link(u, v, 1);
        return b.build();
    }

    std::vector<int> image;
    for (const auto& u : vs) {
        if (q.underlying_neighbors(u).size() >= 2) {
            int copy = b.add(kInnerPrefix + u);
            int leaf = b.add(u);
            b.link(copy, leaf, 0);
            image.push_back(copy);
        } else {
            image.push_back(b.add(u));
        }
    }
    auto slot = [&](const std::string& u) {
        return image[static_cast<size_t>(
            std::lower_bound(vs.begin(), vs.end(), u) - vs.begin())];
    };
    for (const auto& [u, v] : q.sym_pairs()) b.link(slot(u), slot(v), 1);
    return b.build();
}

bool in_pendant_zero_form(const LabeledTree& t, std::string* witness) {
    auto fail = [&](const std::string& id) {
        if (witness) *witness = id;
        return false;
    };
    const PhyloTree& tr = t.tree;
    if (tr.rooted()) return fail(tr.id(tr.root()));
    if (tr.vertex_count() == 1) return true;
    if (tr.vertex_count() == 2) {
        if (t.label_at(0) == 1) return true;
        return fail(std::min(tr.id(0), tr.id(1)));
    }
    for (int v = 0; v < tr.vertex_count(); ++v) {
        if (tr.is_leaf(v)) continue;
        if (tr.degree(v) < 3) return fail(tr.id(v));
        int zero_leaves = 0, zero_edges = 0;
        for (int w : tr.neighbors(v)) {
            if (t.label(v, w) == 1) continue;
            ++zero_edges;
            if (tr.is_leaf(w)) ++zero_leaves;
        }
        if (zero_edges != 1 || zero_leaves != 1) return fail(tr.id(v));
    }
    return true;
}

QuotientGraph collapse_tree(const LabeledTree& t) {
    std::string bad;
    if (!in_pendant_zero_form(t, &bad))
        throw NotInClassT("no pendant-zero form at vertex " + bad);
    const PhyloTree& tr = t.tree;

    std::vector<std::string> vertices = tr.taxa();
    if (tr.vertex_count() <= 2) {
        std::vector<TaxonPair> sym;
        if (tr.vertex_count() == 2)
            sym.push_back({std::min(tr.id(0), tr.id(1)), std::max(tr.id(0), tr.id(1))});
        return {RelationMode::undirected, vertices, sym, {}};
    }

    // each inner vertex is named by the taxon at the end of its 0-edge
    std::vector<std::string> name(tr.vertex_count());
    for (int v = 0; v < tr.vertex_count(); ++v) {
        if (tr.is_leaf(v)) {
            name[v] = tr.id(v);
            continue;
        }
        for (int w : tr.neighbors(v))
            if (t.label(v, w) == 0) name[v] = tr.id(w);
    }
    std::set<TaxonPair> sym;
    for (int e = 0; e < tr.edge_count(); ++e) {
        if (t.label_at(e) == 0) continue;
        const Edge& ed = tr.edges()[e];
        const std::string& a = name[ed.u];
        const std::string& c = name[ed.v];
        sym.insert({std::min(a, c), std::max(a, c)});
    }
    return {RelationMode::undirected, vertices, {sym.begin(), sym.end()}, {}};
}

namespace {

// one joinable piece of a hub assembly, together with its choice space
struct Piece {
    std::vector<std::string> vertices;             // sorted component members
    std::optional<LabeledTree> expanded;           // present for 3+ vertices
    std::vector<std::string> attach_candidates;    // inner ids, canonical first
};

std::vector<Piece> make_pieces(const QuotientGraph& q) {
    std::vector<Piece> pieces;
    for (const auto& comp : q.components()) {
        Piece p;
        p.vertices = comp;
        if (comp.size() >= 3) {
            p.expanded = expand_quotient(q.induced(comp));
            const PhyloTree& tr = p.expanded->tree;
            for (int v = 0; v < tr.vertex_count(); ++v)
                if (!tr.is_leaf(v)) p.attach_candidates.push_back(tr.id(v));
            std::sort(p.attach_candidates.begin(), p.attach_candidates.end());
        }
        pieces.push_back(std::move(p));
    }
    return pieces;
}

// joins all pieces through a fresh hub on 1-edges; attach[i] selects the
// attachment vertex of piece i and flip[i] moves the 1-edge of a two-vertex
// piece to its larger endpoint
LabeledTree assemble(const std::vector<Piece>& pieces,
                     const std::vector<size_t>& attach,
                     const std::vector<char>& flip) {
    TreeBuilder b;
    std::vector<int> ports;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        if (p.vertices.size() == 1) {
            ports.push_back(b.add(p.vertices[0]));
        } else if (p.vertices.size() == 2) {
            int x = b.add_fresh_inner(p.vertices[0]);
            int v = b.add(p.vertices[0]);
            int w = b.add(p.vertices[1]);
            b.link(x, v, flip[i] ? 0 : 1);
            b.link(x, w, flip[i] ? 1 : 0);
            ports.push_back(x);
        } else {
            int offset = b.splice(*p.expanded);
            int port = p.expanded->tree.vertex(p.attach_candidates[attach[i]]);
            ports.push_back(offset + port);
        }
    }
    int hub = b.add(fresh_inner_id("hub", b.init.ids));
    for (int port : ports) b.link(hub, port, 1);
    return b.build(pieces.size() == 2);
}

}  // namespace

LabeledTree infer_undirected(const QuotientGraph& q) {
    require_undirected(q, "infer_undirected");
    auto comps = q.components();
    for (const auto& comp : comps) require_component_tree(q.induced(comp));
    if (comps.size() == 1) return expand_quotient(q);
    auto pieces = make_pieces(q);
    return assemble(pieces, std::vector<size_t>(pieces.size(), 0),
                    std::vector<char>(pieces.size(), 0));
}

std::vector<LabeledTree> hub_assembly_pool(const QuotientGraph& q) {
    require_undirected(q, "hub_assembly_pool");
    auto comps = q.components();
    for (const auto& comp : comps) require_component_tree(q.induced(comp));
    if (comps.size() == 1) return {expand_quotient(q)};

    auto pieces = make_pieces(q);
    std::vector<size_t> attach(pieces.size(), 0);
    std::vector<char> flip(pieces.size(), 0);
    std::vector<LabeledTree> pool;
    while (true) {
        pool.push_back(assemble(pieces, attach, flip));
        // odometer over (attachment, flip) choices, flips ticking fastest
        size_t i = pieces.size();
        while (i-- > 0) {
            if (pieces[i].vertices.size() == 2 && !flip[i]) {
                flip[i] = 1;
                break;
            }
            flip[i] = 0;
            if (attach[i] + 1 < pieces[i].attach_candidates.size()) {
                ++attach[i];
                break;
            }
            attach[i] = 0;
        }
        if (i == static_cast<size_t>(-1)) break;
    }
    return pool;
}

namespace {

// removes a degree-2 inner vertex by folding its pendant 0-edge into the
// leaf; the leaf keeps its taxon id and inherits the remaining edge
LabeledTree fold_into_leaf(const LabeledTree& t, int mid, int leaf) {
    const PhyloTree& tr = t.tree;
    PhyloTree::Init init;
    std::vector<int> remap(tr.vertex_count(), -1);
    for (int w = 0; w < tr.vertex_count(); ++w) {
        if (w == mid) continue;
        remap[w] = static_cast<int>(init.ids.size());
        init.ids.push_back(tr.id(w));
    }
    remap[mid] = remap[leaf];
    std::vector<std::int8_t> labels;
    for (int e = 0; e < tr.edge_count(); ++e) {
        const Edge& ed = tr.edges()[e];
        if ((ed.u == mid && ed.v == leaf) || (ed.u == leaf && ed.v == mid))
            continue;
        init.edges.emplace_back(remap[ed.u], remap[ed.v]);
        labels.push_back(static_cast<std::int8_t>(t.label_at(e)));
    }
    if (tr.rooted()) init.root = remap[tr.root()];
    init.allow_degree_two = true;
    return make_labeled(std::move(init), std::move(labels));
}

}  // namespace

LabeledTree make_least_resolved(const LabeledTree& t, const RelationGraph& rel) {
    if (!explains(t, rel))
        throw DoesNotExplain("input tree does not explain the relation");
    LabeledTree cur = t;
    bool changed = true;
    while (changed) {
        changed = false;
        const PhyloTree& tr = cur.tree;

        std::vector<std::pair<std::string, std::string>> order;
        std::vector<Edge> interior;
        for (const Edge& ed : tr.edges()) {
            if (tr.is_leaf(ed.u) || tr.is_leaf(ed.v)) continue;
            auto a = tr.id(ed.u), b = tr.id(ed.v);
            if (a > b) std::swap(a, b);
            order.emplace_back(a, b);
            interior.push_back(ed);
        }
        std::vector<size_t> by_id(interior.size());
        for (size_t i = 0; i < by_id.size(); ++i) by_id[i] = i;
        std::sort(by_id.begin(), by_id.end(),
                  [&](size_t a, size_t b) { return order[a] < order[b]; });

        for (size_t i : by_id) {
            LabeledTree next = contract_edge(cur, interior[i].u, interior[i].v);
            if (explains(next, rel)) {
                cur = std::move(next);
                changed = true;
                break;
            }
        }
        if (changed) continue;

        for (int v = 0; v < tr.vertex_count() && !changed; ++v) {
            if (tr.is_leaf(v) || tr.degree(v) != 2) continue;
            if (tr.rooted() && tr.root() == v) continue;
            for (int w : tr.neighbors(v)) {
                if (!tr.is_leaf(w) || cur.label(v, w) != 0) continue;
                LabeledTree next = fold_into_leaf(cur, v, w);
                if (explains(next, rel)) {
                    cur = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
    }
    return cur;
}

}  // namespace rgc
