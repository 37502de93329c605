#pragma once

// Event relations between taxa, and their quotients modulo the zero-classes.
//
// A RelationGraph holds a partition of the taxa (pairs connected by all-0
// paths), symmetric single-event pairs and directed single-event arcs. Which
// fields may be populated depends on the mode. A QuotientGraph is the same
// structure after collapsing each zero-class to its representative, so its
// partition is discrete and left implicit.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"

namespace rgc {

enum class RelationMode { undirected, directed, mixed };

std::string to_string(RelationMode m);
RelationMode relation_mode_from(const std::string& name);  // ParseError-free: InvariantError

using TaxonPair = std::pair<std::string, std::string>;

class RelationGraph {
public:
    RelationGraph(RelationMode mode,
                  std::vector<std::string> taxa,
                  std::vector<std::vector<std::string>> zero_classes,
                  std::vector<TaxonPair> sym,
                  std::vector<TaxonPair> dir);

    RelationMode mode() const { return mode_; }
    const std::vector<std::string>& taxa() const { return taxa_; }
    const std::vector<std::vector<std::string>>& zero_classes() const { return classes_; }
    const std::set<TaxonPair>& sym_pairs() const { return sym_; }
    const std::set<TaxonPair>& dir_pairs() const { return dir_; }

    bool has_taxon(const std::string& t) const;
    const std::string& class_rep(const std::string& taxon) const;  // UnknownTaxon
    const std::vector<std::string>& class_of(const std::string& taxon) const;
    bool same_class(const std::string& a, const std::string& b) const;
    bool discrete() const;  // every class a singleton

    friend bool operator==(const RelationGraph&, const RelationGraph&) = default;

private:
    RelationMode mode_;
    std::vector<std::string> taxa_;                  // sorted
    std::vector<std::vector<std::string>> classes_;  // sorted members, sorted by rep
    std::set<TaxonPair> sym_;                        // first < second
    std::set<TaxonPair> dir_;
};

class QuotientGraph {
public:
    QuotientGraph(RelationMode mode,
                  std::vector<std::string> vertices,
                  std::vector<TaxonPair> sym,
                  std::vector<TaxonPair> dir);

    RelationMode mode() const { return mode_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::set<TaxonPair>& sym_pairs() const { return sym_; }
    const std::set<TaxonPair>& dir_pairs() const { return dir_; }

    bool has_vertex(const std::string& v) const;
    // neighbors in the underlying undirected graph (sym and dir together)
    std::vector<std::string> underlying_neighbors(const std::string& v) const;
    int dir_in_degree(const std::string& v) const;

    // connected components of the underlying graph, each sorted, ordered by
    // their least vertex
    std::vector<std::vector<std::string>> components() const;
    QuotientGraph induced(const std::vector<std::string>& vs) const;
    bool connected() const { return components().size() <= 1; }

    // the same data as a relation over the representatives, discrete classes
    RelationGraph as_relation() const;

    friend bool operator==(const QuotientGraph&, const QuotientGraph&) = default;

private:
    RelationMode mode_;
    std::vector<std::string> vertices_;  // sorted
    std::set<TaxonPair> sym_, dir_;
};

}  // namespace rgc
