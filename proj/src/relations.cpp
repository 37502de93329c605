#include "rgc/relations.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace rgc {

static int leaf_vertex(const LabeledTree& t, const std::string& id) {
    auto v = t.tree.find_vertex(id);
    if (!v || !t.tree.is_leaf(*v)) throw UnknownTaxon("no leaf taxon " + id);
    return *v;
}

PathSummary summarize_path(const LabeledTree& t, const std::string& x,
                           const std::string& y) {
    int vx = leaf_vertex(t, x), vy = leaf_vertex(t, y);
    PathSummary out;
    for (const Edge& e : t.tree.path(vx, vy)) {
        ++out.length;
        if (t.label(e.u, e.v)) ++out.ones; else ++out.zeros;
    }
    return out;
}

namespace {

// per-pair event counts, split at the meeting vertex when rooted
struct PairCounts {
    int total;
    int to_first, to_second;  // rooted only
};

struct LeafView {
    std::vector<int> leaf_vertices;  // sorted by id
    std::vector<std::string> ids;

    explicit LeafView(const LabeledTree& t) {
        for (int v : t.tree.leaves()) {
            leaf_vertices.push_back(v);
            ids.push_back(t.tree.id(v));
        }
    }
};

PairCounts count_pair(const LabeledTree& t, int vx, int vy, bool rooted) {
    auto vs = t.tree.path_vertices(vx, vy);
    PairCounts out{0, 0, 0};
    if (!rooted) {
        for (size_t i = 0; i + 1 < vs.size(); ++i)
            out.total += t.label(vs[i], vs[i + 1]);
        return out;
    }
    int meet = t.tree.lca(vx, vy);
    bool before = true;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        if (vs[i] == meet) before = false;
        int l = t.label(vs[i], vs[i + 1]);
        out.total += l;
        (before ? out.to_first : out.to_second) += l;
    }
    return out;
}

std::vector<int> zero_classes_by_leaf(const LabeledTree& t,
                                      const std::vector<int>& leaf_vertices) {
    const int n = t.tree.vertex_count();
    std::vector<int> up(n);
    std::iota(up.begin(), up.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return up[v] == v ? v : up[v] = find(up[v]);
    };
    for (int e = 0; e < t.tree.edge_count(); ++e)
        if (t.label_at(e) == 0) {
            auto [u, v] = t.tree.edges()[e];
            up[find(u)] = find(v);
        }
    std::vector<int> out;
    std::map<int, int> number;
    for (int v : leaf_vertices) {
        int r = find(v);
        auto [it, fresh] = number.emplace(r, static_cast<int>(number.size()));
        out.push_back(it->second);
        (void)fresh;
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::string>> relation_zero(const LabeledTree& t) {
    t.check_labeling();
    LeafView lv(t);
    auto cls = zero_classes_by_leaf(t, lv.leaf_vertices);
    std::vector<std::vector<std::string>> grouped(
        *std::max_element(cls.begin(), cls.end()) + 1);
    for (size_t i = 0; i < cls.size(); ++i) grouped[cls[i]].push_back(lv.ids[i]);
    std::sort(grouped.begin(), grouped.end());
    return grouped;
}

std::set<TaxonPair> relation_single1(const LabeledTree& t) {
    t.check_labeling();
    LeafView lv(t);
    std::set<TaxonPair> out;
    for (size_t i = 0; i < lv.leaf_vertices.size(); ++i)
        for (size_t j = i + 1; j < lv.leaf_vertices.size(); ++j)
            if (count_pair(t, lv.leaf_vertices[i], lv.leaf_vertices[j], false).total == 1)
                out.insert({lv.ids[i], lv.ids[j]});
    return out;
}

std::set<TaxonPair> relation_directed1(const LabeledTree& t) {
    t.check_labeling();
    if (!t.tree.rooted()) throw UnrootedTree("directed relation needs a rooted tree");
    LeafView lv(t);
    std::set<TaxonPair> out;
    for (size_t i = 0; i < lv.leaf_vertices.size(); ++i)
        for (size_t j = i + 1; j < lv.leaf_vertices.size(); ++j) {
            auto c = count_pair(t, lv.leaf_vertices[i], lv.leaf_vertices[j], true);
            if (c.to_first == 0 && c.to_second == 1) out.insert({lv.ids[i], lv.ids[j]});
            if (c.to_second == 0 && c.to_first == 1) out.insert({lv.ids[j], lv.ids[i]});
        }
    return out;
}

std::set<TaxonPair> relation_at_least_k(const LabeledTree& t, int k) {
    t.check_labeling();
    if (k < 1) throw InvariantError("threshold must be at least 1");
    LeafView lv(t);
    std::set<TaxonPair> out;
    for (size_t i = 0; i < lv.leaf_vertices.size(); ++i)
        for (size_t j = i + 1; j < lv.leaf_vertices.size(); ++j)
            if (count_pair(t, lv.leaf_vertices[i], lv.leaf_vertices[j], false).total >= k)
                out.insert({lv.ids[i], lv.ids[j]});
    return out;
}

std::set<TaxonPair> relation_squiggle(const LabeledTree& t) {
    t.check_labeling();
    if (!t.tree.rooted()) throw UnrootedTree("this relation needs a rooted tree");
    LeafView lv(t);
    std::set<TaxonPair> out;
    for (size_t i = 0; i < lv.leaf_vertices.size(); ++i)
        for (size_t j = i + 1; j < lv.leaf_vertices.size(); ++j) {
            auto c = count_pair(t, lv.leaf_vertices[i], lv.leaf_vertices[j], true);
            if (c.to_first == 0 && c.to_second >= 1) out.insert({lv.ids[i], lv.ids[j]});
            if (c.to_second == 0 && c.to_first >= 1) out.insert({lv.ids[j], lv.ids[i]});
        }
    return out;
}

namespace detail {

RelationBits tree_bits(const LabeledTree& t, bool with_directed) {
    LeafView lv(t);
    const int n = static_cast<int>(lv.leaf_vertices.size());
    if (n > 8) throw CapExceeded("signatures support at most 8 taxa");
    RelationBits out;
    out.n = n;
    out.zero_class_of = zero_classes_by_leaf(t, lv.leaf_vertices);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto c = count_pair(t, lv.leaf_vertices[i], lv.leaf_vertices[j],
                                with_directed);
            if (c.total == 1) out.sym |= 1ull << (i * 8 + j);
            if (with_directed) {
                if (c.to_first == 0 && c.to_second == 1)
                    out.dir |= 1ull << (i * 8 + j);
                if (c.to_second == 0 && c.to_first == 1)
                    out.dir |= 1ull << (j * 8 + i);
            }
        }
    return out;
}

RelationBits relation_bits(const RelationGraph& rel) {
    const auto& taxa = rel.taxa();
    const int n = static_cast<int>(taxa.size());
    if (n > 8) throw CapExceeded("signatures support at most 8 taxa");
    auto index = [&](const std::string& t) {
        return static_cast<int>(std::lower_bound(taxa.begin(), taxa.end(), t) -
                                taxa.begin());
    };
    RelationBits out;
    out.n = n;
    out.zero_class_of.resize(n);
    std::map<std::string, int> number;
    for (int i = 0; i < n; ++i) {
        const auto& rep = rel.class_rep(taxa[i]);
        auto [it, fresh] = number.emplace(rep, static_cast<int>(number.size()));
        out.zero_class_of[i] = it->second;
        (void)fresh;
    }
    for (const auto& [a, b] : rel.sym_pairs()) {
        int i = index(a), j = index(b);
        out.sym |= 1ull << (std::min(i, j) * 8 + std::max(i, j));
    }
    for (const auto& [a, b] : rel.dir_pairs())
        out.dir |= 1ull << (index(a) * 8 + index(b));
    return out;
}

bool bits_explain(const RelationBits& tree, const RelationBits& target,
                  RelationMode mode) {
    if (tree.zero_class_of != target.zero_class_of) return false;
    switch (mode) {
        case RelationMode::undirected:
            return tree.sym == target.sym;
        case RelationMode::directed:
            return tree.dir == target.dir;
        case RelationMode::mixed: {
            if ((target.dir & ~tree.dir) != 0) return false;
            std::uint64_t sym_hits = 0;
            for (int i = 0; i < target.n; ++i)
                for (int j = i + 1; j < target.n; ++j) {
                    std::uint64_t bit = 1ull << (i * 8 + j);
                    if (!(target.sym & bit)) continue;
                    bool fwd = tree.dir & bit;
                    bool bwd = tree.dir & (1ull << (j * 8 + i));
                    if (fwd == bwd) return false;  // exactly one direction
                    ++sym_hits;
                }
            return std::popcount(tree.dir) ==
                   std::popcount(target.dir) + static_cast<int>(sym_hits);
        }
    }
    return false;
}

}  // namespace detail

bool explains(const LabeledTree& t, const RelationGraph& rel) {
    if (t.tree.taxa() != rel.taxa())
        throw TaxonMismatch("tree leaves and relation taxa differ");
    bool needs_root = rel.mode() != RelationMode::undirected;
    if (needs_root && !t.tree.rooted())
        throw UnrootedTree("directed and mixed relations need a rooted tree");
    if (rel.taxa().size() <= 8) {
        auto tb = detail::tree_bits(t, needs_root);
        auto rb = detail::relation_bits(rel);
        return detail::bits_explain(tb, rb, rel.mode());
    }
    if (relation_zero(t) != rel.zero_classes()) return false;
    switch (rel.mode()) {
        case RelationMode::undirected:
            return relation_single1(t) == rel.sym_pairs();
        case RelationMode::directed:
            return relation_directed1(t) == rel.dir_pairs();
        case RelationMode::mixed: {
            auto d = relation_directed1(t);
            for (const auto& p : rel.dir_pairs())
                if (!d.count(p)) return false;
            size_t expected = rel.dir_pairs().size();
            for (const auto& [a, b] : rel.sym_pairs()) {
                if (d.count({a, b}) == d.count({b, a})) return false;
                ++expected;
            }
            return d.size() == expected;
        }
    }
    return false;
}

}  // namespace rgc
