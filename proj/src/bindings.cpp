#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rgc/binary.hpp"
#include "rgc/errors.hpp"
#include "rgc/mixed.hpp"
#include "rgc/newick.hpp"
#include "rgc/oracle.hpp"
#include "rgc/quotient.hpp"
#include "rgc/recognize.hpp"
#include "rgc/reconstruct.hpp"
#include "rgc/relation_io.hpp"
#include "rgc/relations.hpp"
#include "rgc/rooted.hpp"
#include "rgc/tree.hpp"

namespace py = pybind11;
using namespace rgc;

namespace {

CheckResult run_mode_check(const QuotientGraph& q) {
    switch (q.mode()) {
        case RelationMode::undirected: return check_undirected(q);
        case RelationMode::directed: return check_directed(q);
        case RelationMode::mixed: return check_mixed(q);
    }
    throw InvariantError("unreachable mode");
}

py::dict check_relation(const RelationGraph& rel) {
    py::dict out;
    try {
        QuotientGraph q = build_quotient(rel);
        CheckResult res = run_mode_check(q);
        out["explainable"] = res.ok();
        if (!res.ok()) out["witness"] = res.rejection->describe();
        if (res.ok() && rel.mode() == RelationMode::directed)
            out["sources"] = res.sources;
        if (res.ok() && rel.mode() == RelationMode::mixed)
            out["centers"] = res.centrals;
    } catch (const IllDefinedQuotient& e) {
        out["explainable"] = false;
        out["witness"] = std::string(e.what());
    }
    return out;
}

LabeledTree infer(const RelationGraph& rel) {
    QuotientGraph q = build_quotient(rel);
    CheckResult res = check_undirected(q);
    if (!res.ok()) throw RejectedRelation(*res.rejection);
    return lift_tree(infer_undirected(q), rel);
}

std::vector<LabeledTree> infer_rooted_rel(const RelationGraph& rel) {
    QuotientGraph q = build_quotient(rel);
    CheckResult res = check_directed(q);
    if (!res.ok()) throw RejectedRelation(*res.rejection);
    std::vector<LabeledTree> out;
    for (const LabeledTree& t : infer_rooted(q)) out.push_back(lift_tree(t, rel));
    return out;
}

LabeledTree reconstruct_mixed_rel(const RelationGraph& rel,
                                  std::optional<std::vector<std::string>> centers) {
    if (!centers) return reconstruct_mixed_minimal(rel);
    QuotientGraph q = build_quotient(rel);
    return lift_tree(reconstruct_mixed(q, *centers), rel);
}

using PyTriple = std::tuple<std::string, std::string, std::string>;

std::set<RootedTriple> to_triples(const std::vector<PyTriple>& raw) {
    std::set<RootedTriple> out;
    for (const auto& [a, b, c] : raw) out.insert(RootedTriple(a, b, c));
    return out;
}

std::vector<PyTriple> from_triples(const std::set<RootedTriple>& triples) {
    std::vector<PyTriple> out;
    for (const auto& t : triples) out.emplace_back(t.a, t.b, t.c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "rare-event path relations on edge-labeled phylogenetic trees";

    py::register_exception<Error>(m, "Error");

    py::class_<LabeledTree>(m, "Tree")
        .def_property_readonly(
            "taxa", [](const LabeledTree& t) { return t.tree.taxa(); })
        .def_property_readonly(
            "rooted", [](const LabeledTree& t) { return t.tree.rooted(); })
        .def_property_readonly(
            "vertex_count",
            [](const LabeledTree& t) { return t.tree.vertex_count(); })
        .def_property_readonly(
            "binary", [](const LabeledTree& t) { return is_binary(t.tree); })
        .def_property_readonly(
            "degree_two_join",
            [](const LabeledTree& t) { return degree_two_join(t.tree); })
        .def("newick", [](const LabeledTree& t) { return serialize_newick(t); })
        .def("dot", [](const LabeledTree& t) { return serialize_dot(t); })
        .def("canonical", [](const LabeledTree& t) { return canonical_form(t); })
        .def("__eq__",
             [](const LabeledTree& a, const LabeledTree& b) {
                 return isomorphic(a, b);
             })
        .def("__repr__", [](const LabeledTree& t) {
            return "Tree(" + serialize_newick(t) + ")";
        });

    py::class_<RelationGraph>(m, "Relation")
        .def(py::init([](const std::string& mode,
                         std::vector<std::string> taxa,
                         std::vector<std::vector<std::string>> zero,
                         std::vector<TaxonPair> sym,
                         std::vector<TaxonPair> dir) {
                 return RelationGraph(relation_mode_from(mode), std::move(taxa),
                                      std::move(zero), std::move(sym),
                                      std::move(dir));
             }),
             py::arg("mode"), py::arg("taxa"),
             py::arg("zero") = std::vector<std::vector<std::string>>{},
             py::arg("sym") = std::vector<TaxonPair>{},
             py::arg("dir") = std::vector<TaxonPair>{})
        .def_property_readonly(
            "mode", [](const RelationGraph& r) { return to_string(r.mode()); })
        .def_property_readonly(
            "taxa", [](const RelationGraph& r) { return r.taxa(); })
        .def_property_readonly(
            "zero_classes",
            [](const RelationGraph& r) { return r.zero_classes(); })
        .def_property_readonly(
            "sym_pairs",
            [](const RelationGraph& r) {
                return std::vector<TaxonPair>(r.sym_pairs().begin(),
                                              r.sym_pairs().end());
            })
        .def_property_readonly(
            "dir_pairs",
            [](const RelationGraph& r) {
                return std::vector<TaxonPair>(r.dir_pairs().begin(),
                                              r.dir_pairs().end());
            })
        .def("tsv", [](const RelationGraph& r) { return serialize_relation(r); })
        .def("__eq__", [](const RelationGraph& a, const RelationGraph& b) {
            return a == b;
        });

    m.def(
        "parse_newick",
        [](const std::string& text, std::optional<bool> rooted) {
            ParseOptions opts;
            opts.rooted = rooted;
            return parse_newick(text, opts);
        },
        py::arg("text"), py::arg("rooted") = std::nullopt,
        "read a labeled Newick tree");
    m.def("parse_relation", &parse_relation, py::arg("text"),
          "read a relation from its TSV form");

    m.def(
        "zero_classes",
        [](const LabeledTree& t) { return relation_zero(t); },
        "partition of the taxa by all-0 paths");
    m.def(
        "single1_pairs",
        [](const LabeledTree& t) {
            auto s = relation_single1(t);
            return std::vector<TaxonPair>(s.begin(), s.end());
        },
        "pairs whose path carries exactly one 1");
    m.def(
        "directed1_pairs",
        [](const LabeledTree& t) {
            auto s = relation_directed1(t);
            return std::vector<TaxonPair>(s.begin(), s.end());
        },
        "ordered single-1 pairs of a rooted tree");
    m.def(
        "at_least_k_pairs",
        [](const LabeledTree& t, int k) {
            auto s = relation_at_least_k(t, k);
            return std::vector<TaxonPair>(s.begin(), s.end());
        },
        py::arg("tree"), py::arg("k"), "pairs whose path carries at least k 1s");
    m.def("explains", &explains, py::arg("tree"), py::arg("relation"),
          "whether the tree realizes the relation exactly");

    m.def("check", &check_relation, py::arg("relation"),
          "decide explainability; returns a dict with a witness on failure");
    m.def("infer", &infer, py::arg("relation"),
          "minimally resolved tree for an undirected relation");
    m.def("infer_rooted", &infer_rooted_rel, py::arg("relation"),
          "rooted trees for a directed relation, one per admissible root");
    m.def(
        "enumerate_binary",
        [](const RelationGraph& rel) {
            BinaryEnumeration res = enumerate_binary(rel);
            return py::make_tuple(res.assembly_counts, res.trees);
        },
        py::arg("relation"),
        "per-assembly counts and all binary explaining trees");
    m.def(
        "make_least_resolved",
        [](const LabeledTree& t, const RelationGraph& rel) {
            return make_least_resolved(t, rel);
        },
        py::arg("tree"), py::arg("relation"),
        "contract edges while the tree still explains the relation");
    m.def(
        "admissible_centers",
        [](const RelationGraph& rel) {
            return admissible_centers(build_quotient(rel));
        },
        py::arg("relation"), "center candidates per component");
    m.def("reconstruct_mixed", &reconstruct_mixed_rel, py::arg("relation"),
          py::arg("centers") = std::nullopt,
          "tree realizing a mixed relation, for the given centers or the "
          "vertex-minimal admissible choice");

    m.def(
        "path_triples",
        [](const RelationGraph& rel) {
            return from_triples(path_triples(build_quotient(rel)));
        },
        py::arg("relation"), "triples read off the maximal directed paths");
    m.def(
        "close_triples",
        [](const std::vector<PyTriple>& raw) {
            return from_triples(close_triples(to_triples(raw)));
        },
        py::arg("triples"), "fixpoint under the three inference rules");

    m.def(
        "brute_force_explainers",
        [](const RelationGraph& rel, int max_leaves) {
            OracleCaps caps;
            caps.max_leaves = max_leaves;
            return brute_force_explainers(rel, caps);
        },
        py::arg("relation"), py::arg("max_leaves") = 7,
        "every explaining tree at desk scale, for certification");
}
