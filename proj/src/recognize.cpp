#include "rgc/recognize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace rgc {

std::string Rejection::describe() const {
    auto join = [](const std::vector<std::string>& vs) {
        std::string out;
        for (const auto& v : vs) {
            if (!out.empty()) out += ", ";
            out += v;
        }
        return out;
    };
    switch (kind) {
        case Kind::cycle:
            return "cycle through " + join(witness);
        case Kind::converging_arcs:
            return "arcs from " + witness[0] + " and " + witness[1] +
                   " converge at " + witness[2];
        case Kind::no_central_vertex:
            return "component {" + join(witness) + "} has no central vertex";
    }
    return "rejected";
}

namespace {

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency underlying(const QuotientGraph& q) {
    Adjacency adj;
    for (const auto& v : q.vertices()) adj[v];
    auto add = [&](const TaxonPair& p) {
        adj[p.first].push_back(p.second);
        adj[p.second].push_back(p.first);
    };
    for (const auto& p : q.sym_pairs()) add(p);
    for (const auto& p : q.dir_pairs()) add(p);
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::optional<Rejection> find_cycle(const Adjacency& adj) {
    std::set<std::string> done;
    for (const auto& entry : adj) {
        const auto& start = entry.first;
        if (done.count(start)) continue;
        std::map<std::string, std::string> parent;
        std::vector<std::string> stack{start};
        parent[start] = start;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            done.insert(v);
            for (const auto& w : adj.at(v)) {
                if (w == parent[v]) continue;
                if (parent.count(w)) {
                    // walk both branches up to their join to report the cycle
                    std::vector<std::string> path_v{v}, path_w{w};
                    auto up = [&](std::vector<std::string>& path) {
                        while (parent[path.back()] != path.back())
                            path.push_back(parent[path.back()]);
                    };
                    up(path_v);
                    up(path_w);
                    std::set<std::string> on_v(path_v.begin(), path_v.end());
                    std::string join;
                    for (const auto& x : path_w)
                        if (on_v.count(x)) { join = x; break; }
                    std::vector<std::string> cycle;
                    for (const auto& x : path_v) {
                        cycle.push_back(x);
                        if (x == join) break;
                    }
                    std::vector<std::string> back;
                    for (const auto& x : path_w) {
                        if (x == join) break;
                        back.push_back(x);
                    }
                    cycle.insert(cycle.end(), back.rbegin(), back.rend());
                    return Rejection{Rejection::Kind::cycle, cycle};
                }
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    return std::nullopt;
}

std::optional<Rejection> find_converging(const QuotientGraph& q) {
    std::map<std::string, std::vector<std::string>> tails;
    for (const auto& [a, b] : q.dir_pairs()) tails[b].push_back(a);
    for (const auto& [v, in] : tails)
        if (in.size() >= 2)
            return Rejection{Rejection::Kind::converging_arcs, {in[0], in[1], v}};
    return std::nullopt;
}

}  // namespace

CheckResult check_undirected(const QuotientGraph& q) {
    CheckResult out;
    out.rejection = find_cycle(underlying(q));
    return out;
}

CheckResult check_directed(const QuotientGraph& q) {
    CheckResult out;
    if ((out.rejection = find_cycle(underlying(q)))) return out;
    if ((out.rejection = find_converging(q))) return out;
    std::set<std::string> heads;
    for (const auto& p : q.dir_pairs()) heads.insert(p.second);
    for (const auto& comp : q.components())
        for (const auto& v : comp)
            if (!heads.count(v)) out.sources.push_back(v);
    return out;
}

std::vector<std::string> central_vertices(const QuotientGraph& q,
                                          const std::vector<std::string>& component) {
    auto sub = q.induced(component);
    auto adj = underlying(sub);
    if (sub.sym_pairs().size() + sub.dir_pairs().size() + 1 != component.size() ||
        find_cycle(adj))
        throw NotATree("component is not a tree");

    // path from v to x, as a vertex set
    auto path_contains = [&](const std::string& v, const std::string& x,
                             const std::string& y) {
        std::map<std::string, std::string> parent;
        parent[v] = v;
        std::vector<std::string> stack{v};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (const auto& w : adj.at(u))
                if (!parent.count(w)) {
                    parent[w] = u;
                    stack.push_back(w);
                }
        }
        for (auto u = x;; u = parent.at(u)) {
            if (u == y) return true;
            if (u == v) return false;
        }
    };

    std::vector<std::string> out;
    for (const auto& v : component) {
        bool ok = true;
        for (const auto& [x, y] : sub.dir_pairs())
            if (path_contains(v, x, y)) {  // the arc x -> y must point away
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

CheckResult check_mixed(const QuotientGraph& q) {
    CheckResult out;
    if ((out.rejection = find_cycle(underlying(q)))) return out;
    if ((out.rejection = find_converging(q))) return out;
    for (const auto& comp : q.components()) {
        auto centers = central_vertices(q, comp);
        if (centers.empty()) {
            out.rejection = Rejection{Rejection::Kind::no_central_vertex, comp};
            out.centrals.clear();
            return out;
        }
        out.centrals.push_back(std::move(centers));
    }
    return out;
}

}  // namespace rgc
