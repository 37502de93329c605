#pragma once

// Which relations admit an explaining tree at all. Rejections are ordinary
// values carrying a witness, not exceptions.

#include <optional>
#include <string>
#include <vector>

#include "rgc/relation.hpp"

namespace rgc {

struct Rejection {
    enum class Kind { cycle, converging_arcs, no_central_vertex };
    Kind kind;
    std::vector<std::string> witness;  // cycle vertices, or {x, y, v} for arcs
    std::string describe() const;
};

struct CheckResult {
    std::optional<Rejection> rejection;
    // directed mode: the unique source per component, in component order
    std::vector<std::string> sources;
    // mixed mode: admissible center vertices per component
    std::vector<std::vector<std::string>> centrals;
    bool ok() const { return !rejection.has_value(); }
};

CheckResult check_undirected(const QuotientGraph& q);
CheckResult check_directed(const QuotientGraph& q);
CheckResult check_mixed(const QuotientGraph& q);

// vertices v of a connected component such that every mandatory arc points
// away from v (the arc's tail lies on v's side of the arc's edge)
std::vector<std::string> central_vertices(const QuotientGraph& q,
                                          const std::vector<std::string>& component);

// thrown by the constructive algorithms when handed a rejected relation
struct RejectedRelation : Error {
    Rejection rejection;
    explicit RejectedRelation(Rejection r)
        : Error(r.describe()), rejection(std::move(r)) {}
};

}  // namespace rgc
