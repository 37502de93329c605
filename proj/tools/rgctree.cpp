#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
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

namespace {

using nlohmann::json;
using namespace rgc;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

json relation_json(const RelationGraph& rel) {
    json out;
    out["mode"] = to_string(rel.mode());
    out["taxa"] = rel.taxa();
    out["zero_classes"] = rel.zero_classes();
    json sym = json::array(), dir = json::array();
    for (const auto& [a, b] : rel.sym_pairs()) sym.push_back({a, b});
    for (const auto& [a, b] : rel.dir_pairs()) dir.push_back({a, b});
    out["sym"] = std::move(sym);
    out["dir"] = std::move(dir);
    return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- explain

struct ExplainArgs {
    std::string tree_path;
    std::vector<std::string> relation;
    bool rooted = false;
    bool json_out = false;
};

RelationGraph relation_of_tree(const LabeledTree& t,
                               const std::vector<std::string>& choice) {
    const std::vector<std::string> taxa = t.tree.taxa();
    auto sym_rel = [&](std::set<TaxonPair> pairs) {
        return RelationGraph(RelationMode::undirected, taxa, {},
                             {pairs.begin(), pairs.end()}, {});
    };
    auto dir_rel = [&](std::set<TaxonPair> pairs) {
        return RelationGraph(RelationMode::directed, taxa, {}, {},
                             {pairs.begin(), pairs.end()});
    };
    if (choice.empty()) {
        if (t.tree.rooted()) {
            auto dir = relation_directed1(t);
            return {RelationMode::directed, taxa, relation_zero(t), {},
                    {dir.begin(), dir.end()}};
        }
        auto sym = relation_single1(t);
        return {RelationMode::undirected, taxa, relation_zero(t),
                {sym.begin(), sym.end()}, {}};
    }
    const std::string& kind = choice.front();
    if (kind == "atleast-k") {
        if (choice.size() != 2)
            throw CLI::ValidationError("--relation atleast-k needs a threshold");
        int k = 0;
        try {
            k = std::stoi(choice[1]);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--relation atleast-k needs an integer");
        }
        if (k < 1) throw CLI::ValidationError("the threshold must be >= 1");
        return sym_rel(relation_at_least_k(t, k));
    }
    if (choice.size() != 1)
        throw CLI::ValidationError("only atleast-k takes a second value");
    if (kind == "single1") return sym_rel(relation_single1(t));
    if (kind == "zero")
        return {RelationMode::undirected, taxa, relation_zero(t), {}, {}};
    if (kind == "dir1") return dir_rel(relation_directed1(t));
    if (kind == "squiggle") return dir_rel(relation_squiggle(t));
    throw CLI::ValidationError(
        "--relation takes single1|zero|dir1|atleast-k K|squiggle");
}

void run_explain(const ExplainArgs& args) {
    ParseOptions opts;
    if (args.rooted) opts.rooted = true;
    LabeledTree t = parse_newick(read_file(args.tree_path), opts);
    RelationGraph rel = relation_of_tree(t, args.relation);
    if (args.json_out)
        print_json(relation_json(rel));
    else
        std::cout << serialize_relation(rel);
}

// ------------------------------------------------------------------ check

struct CheckArgs {
    std::string rel_path;
    bool json_out = false;
};

CheckResult run_mode_check(const QuotientGraph& q) {
    switch (q.mode()) {
        case RelationMode::undirected: return check_undirected(q);
        case RelationMode::directed: return check_directed(q);
        case RelationMode::mixed: return check_mixed(q);
    }
    throw InvariantError("unreachable mode");
}

void run_check(const CheckArgs& args) {
    RelationGraph rel = parse_relation(read_file(args.rel_path));
    QuotientGraph q = build_quotient(rel);
    CheckResult res = run_mode_check(q);
    if (!res.ok()) throw RejectedRelation(*res.rejection);

    auto comps = q.components();
    if (args.json_out) {
        json out;
        out["mode"] = to_string(rel.mode());
        out["taxa"] = rel.taxa().size();
        out["zero_classes"] = rel.zero_classes().size();
        out["quotient_vertices"] = q.vertices().size();
        out["quotient_components"] = comps.size();
        out["explainable"] = true;
        if (rel.mode() == RelationMode::directed) out["sources"] = res.sources;
        if (rel.mode() == RelationMode::mixed) out["centers"] = res.centrals;
        print_json(out);
        return;
    }
    std::cout << "mode: " << to_string(rel.mode()) << "\n"
              << "taxa: " << rel.taxa().size() << "\n"
              << "zero-classes: " << rel.zero_classes().size() << "\n"
              << "quotient: " << q.vertices().size() << " vertices, "
              << q.sym_pairs().size() + q.dir_pairs().size() << " edges, "
              << comps.size() << (comps.size() == 1 ? " component" : " components")
              << "\n";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (rel.mode() == RelationMode::directed)
            std::cout << "component " << i + 1 << " source: " << res.sources[i]
                      << "\n";
        if (rel.mode() == RelationMode::mixed) {
            std::cout << "component " << i + 1 << " centers:";
            for (const auto& c : res.centrals[i]) std::cout << " " << c;
            std::cout << "\n";
        }
    }
    std::cout << "explainable: yes\n";
}

// ------------------------------------------------------------------ infer

struct InferArgs {
    std::string rel_path;
    std::string dot_path;
    bool json_out = false;
};

void run_infer(const InferArgs& args) {
    RelationGraph rel = parse_relation(read_file(args.rel_path));
    if (rel.mode() != RelationMode::undirected)
        throw Error("infer handles undirected relations; see infer-rooted and"
                    " orient for the other modes");
    QuotientGraph q = build_quotient(rel);
    CheckResult res = check_undirected(q);
    if (!res.ok()) throw RejectedRelation(*res.rejection);
    LabeledTree t = lift_tree(infer_undirected(q), rel);
    if (!args.dot_path.empty()) write_file(args.dot_path, serialize_dot(t));
    if (args.json_out)
        print_json(json{{"newick", serialize_newick(t)}});
    else
        std::cout << serialize_newick(t) << "\n";
}

// ----------------------------------------------------------- infer-rooted

struct InferRootedArgs {
    std::string rel_path;
    std::string root;
    bool all = false;
    bool json_out = false;
};

void run_infer_rooted(const InferRootedArgs& args) {
    RelationGraph rel = parse_relation(read_file(args.rel_path));
    if (rel.mode() != RelationMode::directed)
        throw Error("infer-rooted handles directed relations");
    QuotientGraph q = build_quotient(rel);
    CheckResult res = check_directed(q);
    if (!res.ok()) throw RejectedRelation(*res.rejection);

    std::vector<LabeledTree> trees;
    for (const LabeledTree& t : infer_rooted(q)) trees.push_back(lift_tree(t, rel));
    std::vector<std::string> names = res.sources;
    if (trees.size() > names.size()) names.push_back("hub");

    size_t pick = 0;
    if (!args.root.empty()) {
        auto it = std::find(names.begin(), names.end(), args.root);
        if (it == names.end()) {
            std::string admissible;
            for (const auto& n : names) admissible += " " + n;
            throw Error("--root " + args.root +
                        " is not admissible; choose one of:" + admissible);
        }
        pick = static_cast<size_t>(it - names.begin());
    }

    if (args.json_out) {
        json out = json::array();
        for (size_t i = 0; i < trees.size(); ++i) {
            if (!args.all && i != pick) continue;
            out.push_back({{"root", names[i]}, {"newick", serialize_newick(trees[i])}});
        }
        print_json(json{{"trees", out}});
        return;
    }
    if (args.all) {
        for (const auto& t : trees) std::cout << serialize_newick(t) << "\n";
    } else {
        std::cout << serialize_newick(trees[pick]) << "\n";
    }
}

// ------------------------------------------------------- enumerate-binary

struct EnumerateArgs {
    std::string rel_path;
    bool count_only = false;
    bool json_out = false;
};

void run_enumerate_binary(const EnumerateArgs& args) {
    RelationGraph rel = parse_relation(read_file(args.rel_path));
    if (rel.mode() != RelationMode::undirected)
        throw Error("enumerate-binary handles undirected relations");
    BinaryEnumeration res = enumerate_binary(rel);
    if (args.json_out) {
        json out;
        out["count"] = res.trees.size();
        out["assembly_counts"] = res.assembly_counts;
        if (!args.count_only) {
            json trees = json::array();
            for (const auto& t : res.trees) trees.push_back(serialize_newick(t));
            out["trees"] = std::move(trees);
        }
        print_json(out);
        return;
    }
    if (args.count_only) {
        std::cout << res.trees.size() << "\n";
        return;
    }
    for (const auto& t : res.trees) std::cout << serialize_newick(t) << "\n";
}

// ----------------------------------------------------------------- orient

struct OrientArgs {
    std::string rel_path;
    std::vector<std::string> centers;
    bool list_centers = false;
    bool json_out = false;
};

void run_orient(const OrientArgs& args) {
    RelationGraph rel = parse_relation(read_file(args.rel_path));
    if (rel.mode() != RelationMode::mixed)
        throw Error("orient handles mixed relations");
    QuotientGraph q = build_quotient(rel);
    std::vector<std::vector<std::string>> admissible = admissible_centers(q);
    auto comps = q.components();

    if (args.list_centers) {
        if (args.json_out) {
            print_json(json{{"components", comps}, {"centers", admissible}});
            return;
        }
        for (size_t i = 0; i < comps.size(); ++i) {
            std::cout << "component " << i + 1 << " {";
            for (size_t j = 0; j < comps[i].size(); ++j)
                std::cout << (j ? "," : "") << comps[i][j];
            std::cout << "} centers:";
            for (const auto& c : admissible[i]) std::cout << " " << c;
            std::cout << "\n";
        }
        return;
    }

    // default to the least admissible center; --center values override the
    // component that contains them
    std::vector<std::string> chosen;
    for (const auto& cs : admissible) chosen.push_back(cs.front());
    for (const auto& pick : args.centers) {
        bool placed = false;
        for (size_t i = 0; i < comps.size(); ++i)
            if (std::find(comps[i].begin(), comps[i].end(), pick) !=
                comps[i].end()) {
                chosen[i] = pick;
                placed = true;
            }
        if (!placed) throw Error("--center " + pick + " names no quotient vertex");
    }
    QuotientGraph oriented = orient(q, chosen);

    // write the orientation back over the full taxon set so that the output
    // feeds infer-rooted directly
    std::vector<TaxonPair> arcs;
    for (const auto& [x, y] : oriented.dir_pairs())
        for (const auto& a : rel.class_of(x))
            for (const auto& b : rel.class_of(y)) arcs.emplace_back(a, b);
    RelationGraph out{RelationMode::directed, rel.taxa(), rel.zero_classes(),
                      {}, arcs};

    if (args.json_out) {
        print_json(json{{"centers", chosen},
                        {"admissible", admissible},
                        {"relation", relation_json(out)}});
        return;
    }
    std::string joined, pool;
    for (size_t i = 0; i < chosen.size(); ++i)
        joined += (i ? "," : "") + chosen[i];
    for (size_t i = 0; i < admissible.size(); ++i)
        for (size_t j = 0; j < admissible[i].size(); ++j)
            pool += (pool.empty() ? "" : ",") + admissible[i][j];
    std::cout << "#mode=directed\n"
              << "#centers=" << joined << "\n"
              << "#admissible=" << pool << "\n";
    std::string body = serialize_relation(out);
    std::cout << body.substr(body.find('\n') + 1);
}

// ---------------------------------------------------------- oracle-verify

struct VerifyArgs {
    std::string rel_path;
    int max_leaves = 7;
    bool json_out = false;
};

std::set<std::string> canonical_set(const std::vector<LabeledTree>& trees) {
    std::set<std::string> out;
    for (const auto& t : trees) out.insert(canonical_form(t));
    return out;
}

void run_oracle_verify(const VerifyArgs& args) {
    RelationGraph rel = parse_relation(read_file(args.rel_path));
    OracleCaps caps;
    caps.max_leaves = args.max_leaves;
    std::vector<LabeledTree> oracle = brute_force_explainers(rel, caps);

    std::vector<LabeledTree> constructed;
    std::string rejection;
    try {
        QuotientGraph q = build_quotient(rel);
        CheckResult res = run_mode_check(q);
        if (!res.ok()) throw RejectedRelation(*res.rejection);
        switch (rel.mode()) {
            case RelationMode::undirected:
                constructed.push_back(lift_tree(infer_undirected(q), rel));
                break;
            case RelationMode::directed:
                for (const LabeledTree& t : infer_rooted(q))
                    constructed.push_back(lift_tree(t, rel));
                break;
            case RelationMode::mixed:
                constructed.push_back(reconstruct_mixed_minimal(rel));
                break;
        }
    } catch (const RejectedRelation& e) {
        rejection = e.what();
    } catch (const IllDefinedQuotient& e) {
        rejection = e.what();
    }

    // the oracle enumerates strict trees only, while the constructions
    // deliberately join exactly two components through a degree-2 vertex;
    // such trees are checked for explaining but not against the oracle
    int joins = 0;
    std::vector<std::string> problems;
    if (!rejection.empty()) {
        if (!oracle.empty())
            problems.push_back("relation was rejected but the oracle found " +
                               std::to_string(oracle.size()) + " explainers");
    } else {
        std::set<std::string> seen = canonical_set(oracle);
        int oracle_min = 0;
        for (const auto& t : oracle)
            if (oracle_min == 0 || t.tree.vertex_count() < oracle_min)
                oracle_min = t.tree.vertex_count();
        int built_min = 0;
        for (const auto& t : constructed) {
            if (!explains(t, rel))
                problems.push_back("a constructed tree fails to explain");
            if (degree_two_join(t.tree)) {
                ++joins;
                continue;
            }
            if (!seen.count(canonical_form(t)))
                problems.push_back("a constructed tree is missing from the oracle");
            if (built_min == 0 || t.tree.vertex_count() < built_min)
                built_min = t.tree.vertex_count();
        }
        if (joins == static_cast<int>(constructed.size())) {
            if (!oracle.empty())
                problems.push_back(
                    "only degree-2 joins were constructed but the oracle "
                    "found strict explainers");
        } else {
            if (oracle.empty())
                problems.push_back("constructed a tree but the oracle found none");
            else if (built_min != oracle_min)
                problems.push_back("constructed minimum " +
                                   std::to_string(built_min) +
                                   " vertices, oracle minimum " +
                                   std::to_string(oracle_min));
        }
    }

    if (args.json_out) {
        print_json(json{{"oracle_explainers", oracle.size()},
                        {"constructed", constructed.size()},
                        {"degree_two_joins", joins},
                        {"rejected", !rejection.empty()},
                        {"problems", problems}});
    } else {
        std::cout << "oracle explainers: " << oracle.size() << "\n";
        if (!rejection.empty()) std::cout << "rejected: " << rejection << "\n";
        std::cout << "constructed trees: " << constructed.size() << "\n";
        if (joins > 0)
            std::cout << "degree-2 joins (not oracle-comparable): " << joins
                      << "\n";
        for (const auto& p : problems) std::cout << "mismatch: " << p << "\n";
        if (problems.empty()) std::cout << "oracle agrees\n";
    }
    if (!problems.empty()) throw Error("oracle disagreement");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rare-event path relations on edge-labeled phylogenetic trees"};
    app.require_subcommand(1);

    ExplainArgs explain_args;
    auto* explain = app.add_subcommand(
        "explain", "read the relations off a labeled Newick tree");
    explain->add_option("tree", explain_args.tree_path, "labeled Newick file")
        ->required();
    explain
        ->add_option("--relation", explain_args.relation,
                     "single1|zero|dir1|atleast-k K|squiggle")
        ->expected(1, 2);
    explain->add_flag("--rooted", explain_args.rooted, "treat the tree as rooted");
    explain->add_flag("--json", explain_args.json_out, "JSON output");

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check", "decide whether a relation admits an explaining tree");
    check->add_option("relation", check_args.rel_path, "relation TSV file")
        ->required();
    check->add_flag("--json", check_args.json_out, "JSON output");

    InferArgs infer_args;
    auto* infer = app.add_subcommand(
        "infer", "construct the minimally resolved explaining tree");
    infer->add_option("relation", infer_args.rel_path, "relation TSV file")
        ->required();
    infer->add_option("--dot", infer_args.dot_path, "also write a DOT file");
    infer->add_flag("--json", infer_args.json_out, "JSON output");

    InferRootedArgs rooted_args;
    auto* infer_rooted_cmd = app.add_subcommand(
        "infer-rooted", "construct rooted trees for a directed relation");
    infer_rooted_cmd
        ->add_option("relation", rooted_args.rel_path, "relation TSV file")
        ->required();
    infer_rooted_cmd->add_option("--root", rooted_args.root,
                                 "root at this component source, or 'hub'");
    infer_rooted_cmd->add_flag("--all", rooted_args.all,
                               "print every admissible rooting");
    infer_rooted_cmd->add_flag("--json", rooted_args.json_out, "JSON output");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand(
        "enumerate-binary", "list all binary explaining trees");
    enumerate->add_option("relation", enum_args.rel_path, "relation TSV file")
        ->required();
    enumerate->add_flag("--count-only", enum_args.count_only,
                        "print only the number of trees");
    enumerate->add_flag("--json", enum_args.json_out, "JSON output");

    OrientArgs orient_args;
    auto* orient_cmd = app.add_subcommand(
        "orient", "orient the free pairs of a mixed relation");
    orient_cmd->add_option("relation", orient_args.rel_path, "relation TSV file")
        ->required();
    orient_cmd->add_option("--center", orient_args.centers,
                           "center choice, repeatable per component");
    orient_cmd->add_flag("--list-centers", orient_args.list_centers,
                         "only print the admissible centers");
    orient_cmd->add_flag("--json", orient_args.json_out, "JSON output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "oracle-verify", "cross-check the constructions against brute force");
    verify->add_option("relation", verify_args.rel_path, "relation TSV file")
        ->required();
    verify->add_option("--max-leaves", verify_args.max_leaves,
                       "enumeration cap on the leaf count");
    verify->add_flag("--json", verify_args.json_out, "JSON output");

    explain->callback([&] { run_explain(explain_args); });
    check->callback([&] { run_check(check_args); });
    infer->callback([&] { run_infer(infer_args); });
    infer_rooted_cmd->callback([&] { run_infer_rooted(rooted_args); });
    enumerate->callback([&] { run_enumerate_binary(enum_args); });
    orient_cmd->callback([&] { run_orient(orient_args); });
    verify->callback([&] { run_oracle_verify(verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const RejectedRelation& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const IllDefinedQuotient& e) {
        std::cerr << "no explaining tree exists: " << e.what() << "\n";
        return 1;
    } catch (const NotCentral& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
