#include "rgc/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rgc {

bool has_inner_prefix(const std::string& id) {
    return id.rfind(kInnerPrefix, 0) == 0;
}

PhyloTree::PhyloTree(Init init) : ids_(std::move(init.ids)), root_(init.root) {
    const int n = static_cast<int>(ids_.size());
    adj_.resize(n);
    for (auto [u, v] : init.edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw InvariantError("bad edge endpoints");
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v});
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvariantError("duplicate edge");
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    for (int v = 0; v < n; ++v) {
        if (ids_[v].empty()) throw InvariantError("empty vertex id");
        if (!index_.emplace(ids_[v], v).second)
            throw InvariantError("duplicate vertex id " + ids_[v]);
    }
    validate(init.allow_degree_two);
    if (root_) {
        parent_.assign(n, -1);
        depth_.assign(n, 0);
        std::deque<int> queue{*root_};
        parent_[*root_] = *root_;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj_[v])
                if (parent_[w] < 0) {
                    parent_[w] = v;
                    depth_[w] = depth_[v] + 1;
                    queue.push_back(w);
                }
        }
        parent_[*root_] = -1;
    }
}

void PhyloTree::validate(bool allow_degree_two) const {
    const int n = vertex_count();
    if (n == 0) throw NotATree("empty vertex set");
    if (edge_count() != n - 1) throw NotATree("edge count does not fit a tree");
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != n) throw NotATree("disconnected edge set");

    for (int v = 0; v < n; ++v) {
        if (is_leaf(v) && has_inner_prefix(ids_[v]))
            throw InvariantError("taxon id " + ids_[v] + " uses the reserved prefix");
        if (!is_leaf(v) && n > 1) {
            int need = 3;
            if (allow_degree_two || (root_ && *root_ == v)) need = 2;
            if (degree(v) < need)
                throw InvariantError("inner vertex " + ids_[v] + " has degree " +
                                     std::to_string(degree(v)));
        }
    }
    if (root_) {
        if (*root_ < 0 || *root_ >= n) throw InvariantError("root index out of range");
        if (n > 1 && is_leaf(*root_))
            throw InvariantError("root must be an inner vertex");
    }
}

int PhyloTree::vertex(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownVertex("no vertex named " + id);
    return it->second;
}

std::optional<int> PhyloTree::find_vertex(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> PhyloTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return ids_[a] < ids_[b]; });
    return out;
}

std::vector<std::string> PhyloTree::taxa() const {
    std::vector<std::string> out;
    for (int v : leaves()) out.push_back(ids_[v]);
    return out;
}

int PhyloTree::root() const {
    if (!root_) throw UnrootedTree("tree has no root");
    return *root_;
}

int PhyloTree::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || !(*it == Edge{u, v}))
        throw UnknownVertex("no edge " + ids_.at(u) + "-" + ids_.at(v));
    return static_cast<int>(it - edges_.begin());
}

bool PhyloTree::adjacent(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> PhyloTree::path_vertices(int x, int y) const {
    if (x < 0 || x >= vertex_count() || y < 0 || y >= vertex_count())
        throw UnknownVertex("path endpoint out of range");
    std::vector<int> from(vertex_count(), -1);
    std::deque<int> queue{x};
    from[x] = x;
    while (!queue.empty() && from[y] < 0) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (from[w] < 0) {
                from[w] = v;
                queue.push_back(w);
            }
    }
    std::vector<int> out;
    for (int v = y; v != x; v = from[v]) out.push_back(v);
    out.push_back(x);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Edge> PhyloTree::path(int x, int y) const {
    auto vs = path_vertices(x, y);
    std::vector<Edge> out;
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        out.push_back({std::min(vs[i], vs[i + 1]), std::max(vs[i], vs[i + 1])});
    return out;
}

int PhyloTree::lca(int x, int y) const {
    if (!root_) throw UnrootedTree("lca needs a rooted tree");
    while (x != y) {
        if (depth_[x] < depth_[y]) std::swap(x, y);
        x = parent_[x];
    }
    return x;
}

void LabeledTree::check_labeling() const {
    if (static_cast<int>(labels.by_edge.size()) != tree.edge_count())
        throw InvariantError("labeling does not cover the edge set");
    for (auto b : labels.by_edge)
        if (b != 0 && b != 1) throw InvariantError("labels must be 0 or 1");
}

LabeledTree make_labeled(PhyloTree::Init init, std::vector<std::int8_t> labels) {
    if (labels.size() != init.edges.size())
        throw InvariantError("labeling does not cover the edge set");
    const auto pushed = init.edges;
    PhyloTree tree(std::move(init));
    EdgeLabeling aligned;
    aligned.by_edge.assign(pushed.size(), 0);
    for (size_t e = 0; e < pushed.size(); ++e)
        aligned.by_edge[static_cast<size_t>(
            tree.edge_index(pushed[e].first, pushed[e].second))] = labels[e];
    return {std::move(tree), std::move(aligned)};
}

RootedTriple::RootedTriple(std::string x, std::string y, std::string out)
    : a(std::move(x)), b(std::move(y)), c(std::move(out)) {
    if (a > b) std::swap(a, b);
    if (a == b || a == c || b == c)
        throw InvariantError("triple needs three distinct taxa");
}

bool displays_triple(const PhyloTree& tree, const RootedTriple& t) {
    if (!tree.rooted()) throw UnrootedTree("triples only make sense in rooted trees");
    auto leaf = [&](const std::string& id) {
        auto v = tree.find_vertex(id);
        if (!v || !tree.is_leaf(*v)) throw UnknownTaxon("no leaf taxon " + id);
        return *v;
    };
    int a = leaf(t.a), b = leaf(t.b), c = leaf(t.c);
    auto cherry = tree.path_vertices(a, b);
    auto out = tree.path_vertices(c, tree.root());
    std::set<int> on(out.begin(), out.end());
    for (int v : cherry)
        if (on.count(v)) return false;
    return true;
}

LabeledTree contract_edge(const LabeledTree& t, int u, int v) {
    const PhyloTree& tr = t.tree;
    if (!tr.adjacent(u, v)) throw InvariantError("not an edge");
    if (tr.vertex_count() <= 2 || tr.is_leaf(u) || tr.is_leaf(v))
        throw TerminalEdge("cannot contract an edge at a leaf");
    int keep = tr.id(u) <= tr.id(v) ? u : v;
    int drop = keep == u ? v : u;

    PhyloTree::Init init;
    std::vector<int> remap(tr.vertex_count(), -1);
    for (int w = 0; w < tr.vertex_count(); ++w) {
        if (w == drop) continue;
        remap[w] = static_cast<int>(init.ids.size());
        init.ids.push_back(tr.id(w));
    }
    remap[drop] = remap[keep];
    std::vector<std::int8_t> labels;
    for (int e = 0; e < tr.edge_count(); ++e) {
        auto [a, b] = tr.edges()[e];
        if ((a == u && b == v) || (a == v && b == u)) continue;
        init.edges.emplace_back(remap[a], remap[b]);
        labels.push_back(static_cast<std::int8_t>(t.label_at(e)));
    }
    if (tr.rooted()) init.root = remap[tr.root()];
    init.allow_degree_two = true;
    return make_labeled(std::move(init), std::move(labels));
}

LabeledTree unroot(const LabeledTree& t) {
    const PhyloTree& tr = t.tree;
    int r = tr.root();
    if (tr.degree(r) != 2) throw InvariantError("unroot expects a degree-2 root");
    int a = tr.neighbors(r)[0], b = tr.neighbors(r)[1];
    int la = t.label(r, a), lb = t.label(r, b);
    if (la == 1 && lb == 1)
        throw InvariantError("both root edges carry 1, no merged label exists");

    PhyloTree::Init init;
    std::vector<int> remap(tr.vertex_count(), -1);
    for (int w = 0; w < tr.vertex_count(); ++w) {
        if (w == r) continue;
        remap[w] = static_cast<int>(init.ids.size());
        init.ids.push_back(tr.id(w));
    }
    std::vector<std::int8_t> labels;
    for (int e = 0; e < tr.edge_count(); ++e) {
        auto [x, y] = tr.edges()[e];
        if (x == r || y == r) continue;
        init.edges.emplace_back(remap[x], remap[y]);
        labels.push_back(static_cast<std::int8_t>(t.label_at(e)));
    }
    init.edges.emplace_back(remap[a], remap[b]);
    labels.push_back(static_cast<std::int8_t>(la | lb));
    init.allow_degree_two = true;
    return make_labeled(std::move(init), std::move(labels));
}

std::string subtree_encoding(const LabeledTree& t, int v, int parent) {
    std::vector<std::string> tokens;
    for (int w : t.tree.neighbors(v)) {
        if (w == parent) continue;
        tokens.push_back(static_cast<char>('0' + t.label(v, w)) +
                         subtree_encoding(t, w, v));
    }
    if (tokens.empty()) {
        const std::string& id = t.tree.id(v);
        return "L" + std::to_string(id.size()) + ":" + id;
    }
    std::sort(tokens.begin(), tokens.end());
    std::string out = "(";
    for (auto& s : tokens) out += s;
    out += ")";
    return out;
}

static std::vector<int> centroids(const PhyloTree& t) {
    const int n = t.vertex_count();
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    std::deque<int> queue{0};
    parent[0] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : t.neighbors(v))
            if (parent[w] < 0) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    parent[0] = -1;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::vector<int> best;
    int best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[v];
        for (int w : t.neighbors(v))
            if (w != parent[v]) weight = std::max(weight, size[w]);
        if (weight < best_weight) {
            best_weight = weight;
            best.clear();
        }
        if (weight == best_weight) best.push_back(v);
    }
    return best;
}

std::string canonical_form(const LabeledTree& t) {
    if (t.tree.rooted()) return "R:" + subtree_encoding(t, t.tree.root(), -1);
    if (t.tree.vertex_count() == 1) return "U:" + subtree_encoding(t, 0, -1);
    auto cs = centroids(t.tree);
    if (cs.size() == 1) return "U:" + subtree_encoding(t, cs[0], -1);
    std::string h1 = subtree_encoding(t, cs[0], cs[1]);
    std::string h2 = subtree_encoding(t, cs[1], cs[0]);
    if (h2 < h1) std::swap(h1, h2);
    return "E:" + std::string(1, static_cast<char>('0' + t.label(cs[0], cs[1]))) +
           h1 + "|" + h2;
}

bool isomorphic(const LabeledTree& a, const LabeledTree& b) {
    return canonical_form(a) == canonical_form(b);
}

int canonical_root_vertex(const LabeledTree& t) {
    if (t.tree.rooted()) return t.tree.root();
    auto cs = centroids(t.tree);
    if (cs.size() == 1) return cs[0];
    std::string h1 = subtree_encoding(t, cs[0], cs[1]);
    std::string h2 = subtree_encoding(t, cs[1], cs[0]);
    if (h1 != h2) return h1 < h2 ? cs[0] : cs[1];
    return t.tree.id(cs[0]) <= t.tree.id(cs[1]) ? cs[0] : cs[1];
}

bool is_binary(const PhyloTree& t) {
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.is_leaf(v)) continue;
        int want = (t.rooted() && t.root() == v) ? 2 : 3;
        if (t.degree(v) != want) return false;
    }
    return true;
}

bool degree_two_join(const PhyloTree& t) {
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (t.is_leaf(v) || t.degree(v) != 2) continue;
        if (t.rooted() && t.root() == v) continue;
        return true;
    }
    return false;
}

std::string fresh_inner_id(const std::string& base,
                           const std::vector<std::string>& used) {
    std::string id = kInnerPrefix + base;
    while (std::find(used.begin(), used.end(), id) != used.end()) id += "'";
    return id;
}

}  // namespace rgc
