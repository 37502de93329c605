#pragma once

// internal helper to assemble labeled trees piecewise

#include <optional>
#include <string>
#include <vector>

#include "rgc/tree.hpp"

namespace rgc {

struct TreeBuilder {
    PhyloTree::Init init;
    std::vector<std::int8_t> labels;

    int add(const std::string& id) {
        init.ids.push_back(id);
        return static_cast<int>(init.ids.size()) - 1;
    }

    int add_fresh_inner(const std::string& base) {
        return add(fresh_inner_id(base, init.ids));
    }

    void link(int a, int b, int label) {
        init.edges.emplace_back(a, b);
        labels.push_back(static_cast<std::int8_t>(label));
    }

    // copies another labeled tree in; returns the index offset of its vertices
    int splice(const LabeledTree& part) {
        int offset = static_cast<int>(init.ids.size());
        for (const auto& id : part.tree.ids()) add(id);
        for (int e = 0; e < part.tree.edge_count(); ++e) {
            const Edge& ed = part.tree.edges()[e];
            link(offset + ed.u, offset + ed.v, part.label_at(e));
        }
        return offset;
    }

    int index_of(const std::string& id) const {
        for (int v = 0; v < static_cast<int>(init.ids.size()); ++v)
            if (init.ids[v] == id) return v;
        throw UnknownVertex("builder has no vertex " + id);
    }

    LabeledTree build(bool allow_degree_two = false,
                      std::optional<int> root = std::nullopt) {
        init.allow_degree_two = allow_degree_two;
        init.root = root;
        return make_labeled(std::move(init), std::move(labels));
    }
};

}  // namespace rgc
