#include "rgc/relation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rgc/tree.hpp"

namespace rgc {

std::string to_string(RelationMode m) {
    switch (m) {
        case RelationMode::undirected: return "undirected";
        case RelationMode::directed: return "directed";
        case RelationMode::mixed: return "mixed";
    }
    return "?";
}

RelationMode relation_mode_from(const std::string& name) {
    if (name == "undirected") return RelationMode::undirected;
    if (name == "directed") return RelationMode::directed;
    if (name == "mixed") return RelationMode::mixed;
    throw InvariantError("unknown mode " + name);
}

static void check_taxon_id(const std::string& t) {
    if (t.empty()) throw InvariantError("empty taxon id");
    if (has_inner_prefix(t))
        throw InvariantError("taxon id " + t + " uses the reserved prefix");
}

RelationGraph::RelationGraph(RelationMode mode,
                             std::vector<std::string> taxa,
                             std::vector<std::vector<std::string>> zero_classes,
                             std::vector<TaxonPair> sym,
                             std::vector<TaxonPair> dir)
    : mode_(mode), taxa_(std::move(taxa)) {
    std::sort(taxa_.begin(), taxa_.end());
    if (std::adjacent_find(taxa_.begin(), taxa_.end()) != taxa_.end())
        throw InvariantError("duplicate taxon");
    for (const auto& t : taxa_) check_taxon_id(t);

    std::map<std::string, int> where;
    for (auto& cls : zero_classes) {
        if (cls.empty()) continue;
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        for (const auto& t : cls) {
            if (!std::binary_search(taxa_.begin(), taxa_.end(), t))
                throw UnknownTaxon("zero-class member " + t + " is not a taxon");
            if (!where.emplace(t, static_cast<int>(classes_.size())).second)
                throw InvariantError("taxon " + t + " in two zero-classes");
        }
        classes_.push_back(std::move(cls));
    }
    for (const auto& t : taxa_)
        if (!where.count(t)) {
            where.emplace(t, static_cast<int>(classes_.size()));
            classes_.push_back({t});
        }
    std::sort(classes_.begin(), classes_.end());
    where.clear();
    for (int i = 0; i < static_cast<int>(classes_.size()); ++i)
        for (const auto& t : classes_[i]) where[t] = i;

    auto check_pair = [&](const TaxonPair& p, const char* what) {
        if (!std::binary_search(taxa_.begin(), taxa_.end(), p.first) ||
            !std::binary_search(taxa_.begin(), taxa_.end(), p.second))
            throw UnknownTaxon(std::string(what) + " pair over unknown taxa");
        if (p.first == p.second)
            throw InvariantError(std::string(what) + " pair " + p.first +
                                 " relates a taxon to itself");
        if (where[p.first] == where[p.second])
            throw InvariantError(std::string(what) + " pair " + p.first + "," +
                                 p.second + " inside a zero-class");
    };
    for (auto p : sym) {
        check_pair(p, "sym");
        if (p.first > p.second) std::swap(p.first, p.second);
        sym_.insert(p);
    }
    for (const auto& p : dir) {
        check_pair(p, "dir");
        if (dir_.count({p.second, p.first}))
            throw InvariantError("both arc directions between " + p.first + " and " +
                                 p.second);
        dir_.insert(p);
    }
    for (const auto& p : dir_) {
        TaxonPair canon = p.first < p.second ? p : TaxonPair{p.second, p.first};
        if (sym_.count(canon))
            throw InvariantError("pair " + canon.first + "," + canon.second +
                                 " is both symmetric and directed");
    }
    if (mode_ == RelationMode::undirected && !dir_.empty())
        throw InvariantError("directed arcs in an undirected relation");
    if (mode_ == RelationMode::directed && !sym_.empty())
        throw InvariantError("symmetric pairs in a directed relation");
}

bool RelationGraph::has_taxon(const std::string& t) const {
    return std::binary_search(taxa_.begin(), taxa_.end(), t);
}

const std::vector<std::string>& RelationGraph::class_of(const std::string& taxon) const {
    for (const auto& cls : classes_)
        if (std::binary_search(cls.begin(), cls.end(), taxon)) return cls;
    throw UnknownTaxon("no taxon " + taxon);
}

const std::string& RelationGraph::class_rep(const std::string& taxon) const {
    return class_of(taxon).front();
}

bool RelationGraph::same_class(const std::string& a, const std::string& b) const {
    return class_rep(a) == class_rep(b);
}

bool RelationGraph::discrete() const {
    return classes_.size() == taxa_.size();
}

QuotientGraph::QuotientGraph(RelationMode mode,
                             std::vector<std::string> vertices,
                             std::vector<TaxonPair> sym,
                             std::vector<TaxonPair> dir)
    : mode_(mode), vertices_(std::move(vertices)) {
    // delegate the shared validation, then copy the canonicalized sets
    RelationGraph check(mode, vertices_, {}, sym, dir);
    vertices_ = check.taxa();
    sym_ = check.sym_pairs();
    dir_ = check.dir_pairs();
}

bool QuotientGraph::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<std::string> QuotientGraph::underlying_neighbors(const std::string& v) const {
    if (!has_vertex(v)) throw UnknownTaxon("no quotient vertex " + v);
    std::set<std::string> out;
    for (const auto& [a, b] : sym_) {
        if (a == v) out.insert(b);
        if (b == v) out.insert(a);
    }
    for (const auto& [a, b] : dir_) {
        if (a == v) out.insert(b);
        if (b == v) out.insert(a);
    }
    return {out.begin(), out.end()};
}

int QuotientGraph::dir_in_degree(const std::string& v) const {
    int n = 0;
    for (const auto& p : dir_)
        if (p.second == v) ++n;
    return n;
}

std::vector<std::vector<std::string>> QuotientGraph::components() const {
    std::map<std::string, std::string> up;
    for (const auto& v : vertices_) up[v] = v;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& v) -> std::string {
        return up[v] == v ? v : up[v] = find(up[v]);
    };
    auto unite = [&](const std::string& a, const std::string& b) {
        auto ra = find(a), rb = find(b);
        if (ra != rb) up[std::max(ra, rb)] = std::min(ra, rb);
    };
    for (const auto& [a, b] : sym_) unite(a, b);
    for (const auto& [a, b] : dir_) unite(a, b);
    std::map<std::string, std::vector<std::string>> grouped;
    for (const auto& v : vertices_) grouped[find(v)].push_back(v);
    std::vector<std::vector<std::string>> out;
    for (auto& [rep, members] : grouped) out.push_back(std::move(members));
    return out;
}

QuotientGraph QuotientGraph::induced(const std::vector<std::string>& vs) const {
    std::set<std::string> keep(vs.begin(), vs.end());
    std::vector<TaxonPair> sym, dir;
    for (const auto& p : sym_)
        if (keep.count(p.first) && keep.count(p.second)) sym.push_back(p);
    for (const auto& p : dir_)
        if (keep.count(p.first) && keep.count(p.second)) dir.push_back(p);
    return QuotientGraph(mode_, {keep.begin(), keep.end()}, sym, dir);
}

RelationGraph QuotientGraph::as_relation() const {
    return RelationGraph(mode_, vertices_, {},
                         {sym_.begin(), sym_.end()}, {dir_.begin(), dir_.end()});
}

}  // namespace rgc
