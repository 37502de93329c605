#include "rgc/mixed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "rgc/errors.hpp"
#include "rgc/recognize.hpp"
#include "rgc/rooted.hpp"

namespace rgc {

namespace {

void require_mixed(const QuotientGraph& q, const char* where) {
    if (q.mode() != RelationMode::mixed)
        throw InvariantError(std::string(where) + " expects a mixed quotient");
}

}  // namespace

std::vector<std::vector<std::string>> admissible_centers(const QuotientGraph& q) {
    require_mixed(q, "admissible_centers");
    CheckResult check = check_mixed(q);
    if (!check.ok()) throw RejectedRelation(*check.rejection);
    return check.centrals;
}

QuotientGraph orient(const QuotientGraph& q,
                     const std::vector<std::string>& centers) {
    require_mixed(q, "orient");
    auto comps = q.components();
    if (centers.size() != comps.size())
        throw InvariantError("need exactly one center per component");

    std::vector<TaxonPair> dir(q.dir_pairs().begin(), q.dir_pairs().end());
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto& comp = comps[i];
        const std::string& center = centers[i];
        if (std::find(comp.begin(), comp.end(), center) == comp.end())
            throw NotCentral("vertex " + center + " is not in its component");
        auto ok = central_vertices(q, comp);
        if (std::find(ok.begin(), ok.end(), center) == ok.end())
            throw NotCentral("vertex " + center +
                             " has a mandatory arc pointing towards it");

        // walk outward from the center; each free pair points down the walk
        std::map<std::string, std::string> parent;
        std::deque<std::string> queue{center};
        parent.emplace(center, center);
        while (!queue.empty()) {
            std::string v = queue.front();
            queue.pop_front();
            for (const auto& w : q.underlying_neighbors(v))
                if (parent.emplace(w, v).second) queue.push_back(w);
        }
        for (const auto& [x, y] : q.sym_pairs()) {
            if (!parent.count(x) || !parent.count(y)) continue;
            if (parent.at(y) == x)
                dir.emplace_back(x, y);
            else
                dir.emplace_back(y, x);
        }
    }
    return {RelationMode::directed, q.vertices(), {}, std::move(dir)};
}

LabeledTree reconstruct_mixed(const QuotientGraph& q,
                              const std::vector<std::string>& centers) {
    return infer_rooted(orient(q, centers)).back();
}

LabeledTree reconstruct_mixed_minimal(const RelationGraph& rel) {
    QuotientGraph q = build_quotient(rel);
    std::vector<std::vector<std::string>> candidates = admissible_centers(q);
    std::vector<std::string> picked;
    for (const auto& cs : candidates) picked.push_back(cs.front());
    // components contribute independently to the lifted size, so improving
    // one center at a time against the current background finds the optimum
    int best = lift_tree(reconstruct_mixed(q, picked), rel).tree.vertex_count();
    for (size_t i = 0; i < candidates.size(); ++i) {
        for (const auto& c : candidates[i]) {
            if (c == picked[i]) continue;
            std::vector<std::string> trial = picked;
            trial[i] = c;
            int count = lift_tree(reconstruct_mixed(q, trial), rel)
                            .tree.vertex_count();
            if (count < best) {
                best = count;
                picked = std::move(trial);
            }
        }
    }
    return lift_tree(reconstruct_mixed(q, picked), rel);
}

}  // namespace rgc
