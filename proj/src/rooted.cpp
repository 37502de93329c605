#include "rgc/rooted.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "rgc/errors.hpp"
#include "rgc/recognize.hpp"
#include "tree_builder.hpp"

namespace rgc {

namespace {

void require_directed(const QuotientGraph& q, const char* where) {
    if (q.mode() != RelationMode::directed)
        throw InvariantError(std::string(where) + " expects a directed quotient");
}

std::string find_source(const QuotientGraph& q) {
    for (const auto& v : q.vertices())
        if (q.dir_in_degree(v) == 0) return v;
    throw InvariantError("component has no source");
}

// appends the expansion of a connected directed component and returns the
// index of its port: the source copy, or the lone leaf unless force_copy
int append_component(TreeBuilder& b, const QuotientGraph& sub, bool force_copy) {
    const auto& vs = sub.vertices();
    const std::string source = find_source(sub);
    if (vs.size() == 1) {
        if (!force_copy) return b.add(vs.front());
        int copy = b.add(kInnerPrefix + vs.front());
        b.link(copy, b.add(vs.front()), 0);
        return copy;
    }
    std::map<std::string, int> image;
    for (const auto& u : vs) {
        if (sub.underlying_neighbors(u).size() >= 2 || u == source) {
            int copy = b.add(kInnerPrefix + u);
            b.link(copy, b.add(u), 0);
            image.emplace(u, copy);
        } else {
            image.emplace(u, b.add(u));
        }
    }
    for (const auto& [x, y] : sub.dir_pairs()) b.link(image.at(x), image.at(y), 1);
    return image.at(source);
}

void require_forest(const QuotientGraph& q) {
    CheckResult check = check_directed(q);
    if (!check.ok()) throw RejectedRelation(*check.rejection);
}

}  // namespace

LabeledTree infer_rooted_component(const QuotientGraph& q) {
    require_directed(q, "infer_rooted_component");
    if (q.components().size() != 1) throw NotATree("quotient is disconnected");
    require_forest(q);
    TreeBuilder b;
    int root = append_component(b, q, false);
    return b.build(false, root);
}

static LabeledTree assemble_rooted(
    const QuotientGraph& q, const std::vector<std::vector<std::string>>& comps,
    int root_choice) {
    TreeBuilder b;
    std::vector<int> ports;
    for (size_t i = 0; i < comps.size(); ++i)
        ports.push_back(append_component(b, q.induced(comps[i]),
                                         static_cast<int>(i) == root_choice));
    int hub = b.add(fresh_inner_id("hub", b.init.ids));
    for (int port : ports) b.link(hub, port, 1);
    int root = root_choice < 0 ? hub : ports[root_choice];
    return b.build(comps.size() == 2, root);
}

std::vector<LabeledTree> infer_rooted(const QuotientGraph& q) {
    require_directed(q, "infer_rooted");
    require_forest(q);
    auto comps = q.components();
    if (comps.size() == 1) return {infer_rooted_component(q)};
    std::vector<LabeledTree> out;
    for (size_t i = 0; i < comps.size(); ++i)
        out.push_back(assemble_rooted(q, comps, static_cast<int>(i)));
    out.push_back(assemble_rooted(q, comps, -1));
    return out;
}

std::set<RootedTriple> path_triples(const QuotientGraph& q) {
    require_directed(q, "path_triples");
    require_forest(q);
    std::set<RootedTriple> out;
    std::vector<std::string> stack;
    std::function<void(const QuotientGraph&, const std::string&)> walk =
        [&](const QuotientGraph& sub, const std::string& v) {
            stack.push_back(v);
            bool sink = true;
            for (const auto& [x, y] : sub.dir_pairs()) {
                if (x != v) continue;
                sink = false;
                walk(sub, y);
            }
            if (sink) {
                for (size_t l = 0; l < stack.size(); ++l)
                    for (size_t i = l + 1; i < stack.size(); ++i)
                        for (size_t j = i + 1; j < stack.size(); ++j)
                            out.emplace(stack[i], stack[j], stack[l]);
            }
            stack.pop_back();
        };
    for (const auto& comp : q.components()) {
        QuotientGraph sub = q.induced(comp);
        if (sub.vertices().size() >= 3) walk(sub, find_source(sub));
    }
    return out;
}

namespace {

void try_add(std::set<RootedTriple>& into, const std::string& a,
             const std::string& b, const std::string& c) {
    if (a == b || a == c || b == c) return;
    into.emplace(a, b, c);
}

// every derivation with t1 in the ab|c role and t2 in the second role
void derive(const RootedTriple& t1, const RootedTriple& t2,
            std::set<RootedTriple>& into) {
    const std::string c1[2] = {t1.a, t1.b};
    const std::string c2[2] = {t2.a, t2.b};
    for (int i = 0; i < 2; ++i) {
        const std::string& a = c1[i];
        const std::string& b = c1[1 - i];
        for (int j = 0; j < 2; ++j) {
            // t2 as ad|c: same outgroup, shared cherry taxon a
            if (c2[j] == a && t2.c == t1.c) try_add(into, b, c2[1 - j], t1.c);
            // t2 as ad|b: outgroup of t2 inside the cherry of t1
            if (c2[j] == a && t2.c == b) {
                try_add(into, b, c2[1 - j], t1.c);
                try_add(into, a, c2[1 - j], t1.c);
            }
            // t2 as cd|b: the outgroups sit in each other's cherries
            if (c2[j] == t1.c && t2.c == b) {
                try_add(into, a, b, c2[1 - j]);
                try_add(into, c2[j], c2[1 - j], a);
            }
        }
    }
}

}  // namespace

std::set<RootedTriple> close_triples(const std::set<RootedTriple>& start) {
    std::set<RootedTriple> closed = start;
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<RootedTriple> fresh;
        for (const auto& t1 : closed)
            for (const auto& t2 : closed) derive(t1, t2, fresh);
        for (const auto& t : fresh)
            if (closed.insert(t).second) grew = true;
    }
    return closed;
}

bool displays_all(const PhyloTree& tree, const std::set<RootedTriple>& triples) {
    for (const auto& t : triples)
        if (!displays_triple(tree, t)) return false;
    return true;
}

}  // namespace rgc
