#include "rgc/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rgc {

QuotientGraph build_quotient(const RelationGraph& rel) {
    const auto& classes = rel.zero_classes();
    const int k = static_cast<int>(classes.size());
    std::vector<std::string> reps;
    for (const auto& cls : classes) reps.push_back(cls.front());

    std::vector<TaxonPair> sym, dir;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& A = classes[i];
            const auto& B = classes[j];
            long total = static_cast<long>(A.size()) * static_cast<long>(B.size());
            long nsym = 0, nij = 0, nji = 0;
            for (const auto& a : A)
                for (const auto& b : B) {
                    TaxonPair canon = a < b ? TaxonPair{a, b} : TaxonPair{b, a};
                    if (rel.sym_pairs().count(canon)) ++nsym;
                    if (rel.dir_pairs().count({a, b})) ++nij;
                    if (rel.dir_pairs().count({b, a})) ++nji;
                }
            long related = nsym + nij + nji;
            if (related == 0) continue;
            if (nsym == total && nij == 0 && nji == 0)
                sym.emplace_back(reps[i], reps[j]);
            else if (nij == total && nsym == 0 && nji == 0)
                dir.emplace_back(reps[i], reps[j]);
            else if (nji == total && nsym == 0 && nij == 0)
                dir.emplace_back(reps[j], reps[i]);
            else
                throw IllDefinedQuotient(
                    "classes of " + reps[i] + " and " + reps[j] +
                    " are only partially related; no tree can realize this");
        }
    return QuotientGraph(rel.mode(), reps, sym, dir);
}

LabeledTree lift_tree(const LabeledTree& qtree, const RelationGraph& rel) {
    std::vector<std::string> reps;
    for (const auto& cls : rel.zero_classes()) reps.push_back(cls.front());
    std::sort(reps.begin(), reps.end());
    if (qtree.tree.taxa() != reps)
        throw TaxonMismatch("tree leaves are not the class representatives");

    const PhyloTree& tr = qtree.tree;

    // a single-class relation has no tree structure to hang members onto
    if (tr.vertex_count() == 1 && rel.zero_classes().front().size() > 1) {
        const auto& members = rel.zero_classes().front();
        PhyloTree::Init init;
        if (!tr.rooted() && members.size() == 2) {
            init.ids = {members[0], members[1]};
            init.edges = {{0, 1}};
            return {PhyloTree(std::move(init)), EdgeLabeling{{0}}};
        }
        init.ids.push_back(fresh_inner_id(members.front(), members));
        std::vector<std::int8_t> labels;
        for (const auto& m : members) {
            init.edges.emplace_back(0, static_cast<int>(init.ids.size()));
            init.ids.push_back(m);
            labels.push_back(0);
        }
        if (tr.rooted()) init.root = 0;
        return make_labeled(std::move(init), std::move(labels));
    }

    // class representatives whose only partner is each other form a
    // two-vertex component, and swapping the labels of their two edges at a
    // shared inner vertex leaves every path's 1-count intact; the swap lets
    // a nontrivial class trade its 1-edge to a singleton partner below
    std::map<std::string, std::set<std::string>> partners;
    for (const auto& [x, y] : rel.sym_pairs()) {
        partners[rel.class_rep(x)].insert(rel.class_rep(y));
        partners[rel.class_rep(y)].insert(rel.class_rep(x));
    }
    auto lone_pair = [&](const std::string& r, const std::string& s) {
        auto it = partners.find(r);
        if (it == partners.end() || it->second != std::set<std::string>{s})
            return false;
        return partners.at(s) == std::set<std::string>{r};
    };

    // a representative hanging on a 0-edge dissolves into its inner
    // neighbor, one hanging on a 1-edge becomes the fan vertex itself; both
    // ways the lift spends no vertex beyond the member leaves, which keeps
    // minimum-vertex explainers minimal
    std::vector<bool> dissolved(tr.vertex_count(), false);
    std::vector<int> fan_at(tr.vertex_count(), -1);
    std::set<int> relabel;
    for (const auto& cls : rel.zero_classes()) {
        if (cls.size() == 1) continue;
        int at = tr.vertex(cls.front());
        int nb = tr.neighbors(at).front();
        if (qtree.label(at, nb) == 0 && !tr.is_leaf(nb)) {
            dissolved[at] = true;
            fan_at[at] = nb;
            continue;
        }
        if (!tr.rooted() && qtree.label(at, nb) == 1 && !tr.is_leaf(nb)) {
            for (int s : tr.neighbors(nb)) {
                if (!tr.is_leaf(s) || qtree.label(nb, s) != 0) continue;
                if (rel.class_of(tr.id(s)).size() != 1) continue;
                if (!lone_pair(cls.front(), tr.id(s))) continue;
                relabel.insert(tr.edge_index(nb, s));
                dissolved[at] = true;
                fan_at[at] = nb;
                break;
            }
            if (dissolved[at]) continue;
        }
        fan_at[at] = at;
    }

    PhyloTree::Init init;
    init.allow_degree_two = true;
    std::vector<std::int8_t> labels;
    std::vector<int> remap(tr.vertex_count(), -1);
    for (int v = 0; v < tr.vertex_count(); ++v) {
        if (dissolved[v]) continue;
        remap[v] = static_cast<int>(init.ids.size());
        init.ids.push_back(tr.id(v));
    }
    for (int e = 0; e < tr.edge_count(); ++e) {
        const Edge& ed = tr.edges()[e];
        if (dissolved[ed.u] || dissolved[ed.v]) continue;
        init.edges.emplace_back(remap[ed.u], remap[ed.v]);
        int label = relabel.count(e) ? 1 : qtree.label_at(e);
        labels.push_back(static_cast<std::int8_t>(label));
    }
    if (tr.rooted()) init.root = remap[tr.root()];

    for (const auto& cls : rel.zero_classes()) {
        if (cls.size() == 1) continue;
        int at = tr.vertex(cls.front());
        int fan = remap[fan_at[at]];
        if (!dissolved[at]) init.ids[fan] = fresh_inner_id(cls.front(), init.ids);
        for (const auto& m : cls) {
            init.edges.emplace_back(fan, static_cast<int>(init.ids.size()));
            init.ids.push_back(m);
            labels.push_back(0);
        }
    }
    return make_labeled(std::move(init), std::move(labels));
}

}  // namespace rgc
