#include <string>
#include <vector>

#include "doctest.h"
#include "rgc/newick.hpp"
#include "rgc/tree.hpp"

using namespace rgc;

namespace {

PhyloTree make(std::vector<std::string> ids,
               std::vector<std::pair<int, int>> edges,
               std::optional<int> root = std::nullopt,
               bool allow_degree_two = false) {
    PhyloTree::Init init;
    init.ids = std::move(ids);
    init.edges = std::move(edges);
    init.root = root;
    init.allow_degree_two = allow_degree_two;
    return PhyloTree(std::move(init));
}

}  // namespace

TEST_CASE("single vertex is both leaf and inner") {
    PhyloTree t = make({"a"}, {});
    CHECK(t.vertex_count() == 1);
    CHECK(t.is_leaf(0));
    CHECK(t.is_inner(0));
    CHECK(t.taxa() == std::vector<std::string>{"a"});
    CHECK(t.path(0, 0).empty());
}

TEST_CASE("two-vertex tree has two leaves") {
    PhyloTree t = make({"b", "a"}, {{0, 1}});
    CHECK(t.is_leaf(0));
    CHECK(t.is_leaf(1));
    CHECK(t.taxa() == std::vector<std::string>{"a", "b"});
    CHECK(t.path(0, 1).size() == 1);
}

TEST_CASE("inner vertices need degree three") {
    CHECK_THROWS_AS(make({"a", "·m", "b"}, {{0, 1}, {1, 2}}), InvariantError);
    CHECK_NOTHROW(make({"a", "·m", "b"}, {{0, 1}, {1, 2}}, std::nullopt, true));
    CHECK_NOTHROW(make({"a", "·m", "b"}, {{0, 1}, {1, 2}}, 1));
}

TEST_CASE("taxa must not use the reserved prefix") {
    CHECK(has_inner_prefix("·m"));
    CHECK_FALSE(has_inner_prefix("m·"));
    CHECK_THROWS_AS(make({"·a", "b"}, {{0, 1}}), InvariantError);
}

TEST_CASE("non-trees are rejected") {
    CHECK_THROWS_AS(make({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}), NotATree);
    CHECK_THROWS_AS(make({"a", "b", "c", "d"}, {{0, 1}, {2, 3}}), NotATree);
    CHECK_THROWS_AS(make({"a", "b"}, {{0, 1}, {0, 1}}), InvariantError);
}

TEST_CASE("paths and meeting vertices") {
    // a and b under ·u, c and d under ·v
    PhyloTree t = make({"a", "b", "c", "d", "·u", "·v"},
                       {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}, 4);
    CHECK(t.path(0, 2).size() == 3);
    CHECK(t.path_vertices(0, 2) == std::vector<int>{0, 4, 5, 2});
    CHECK(t.lca(0, 1) == 4);
    CHECK(t.lca(0, 2) == 4);
    CHECK(t.lca(2, 3) == 5);
    CHECK(t.lca(2, 2) == 2);
}

TEST_CASE("contracting an interior edge keeps the smaller id") {
    LabeledTree t = parse_newick("((a:1,b:0)·u:1,c:0,d:1)·v;");
    int u = t.tree.vertex("·u"), v = t.tree.vertex("·v");
    LabeledTree small = contract_edge(t, u, v);
    CHECK(small.tree.vertex_count() == 5);
    CHECK(small.tree.find_vertex("·u").has_value());
    CHECK_FALSE(small.tree.find_vertex("·v").has_value());
    CHECK(small.label(small.tree.vertex("·u"), small.tree.vertex("a")) == 1);

    CHECK_THROWS_AS(contract_edge(t, t.tree.vertex("a"), u), TerminalEdge);
}

TEST_CASE("unroot merges the two root edges") {
    LabeledTree t = parse_newick("((a:1,b:1):1,(c:1,d:1):0)[&R];");
    LabeledTree u = parse_newick("((a:1,b:1):1,c:1,d:1);");
    CHECK(isomorphic(unroot(t), u));
    CHECK_THROWS_AS(unroot(parse_newick("((a:1,b:1):1,(c:1,d:1):1)[&R];")),
                    InvariantError);
}

TEST_CASE("canonical form ignores order and inner names") {
    LabeledTree a = parse_newick("(x:1,y:0,z:1)·p;");
    LabeledTree b = parse_newick("(z:1,x:1,y:0)·q;");
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(isomorphic(a, b));

    LabeledTree c = parse_newick("(x:1,y:1,z:0);");
    CHECK(canonical_form(a) != canonical_form(c));

    LabeledTree rooted = parse_newick("(x:1,y:0,z:1)[&R];");
    CHECK(canonical_form(a) != canonical_form(rooted));
}

TEST_CASE("rooted triples sort their cherry") {
    RootedTriple t("b", "a", "c");
    CHECK(t.a == "a");
    CHECK(t.b == "b");
    CHECK(t.c == "c");

    LabeledTree cat = parse_newick("((a:1,b:1):1,c:1)[&R];");
    CHECK(displays_triple(cat.tree, RootedTriple("a", "b", "c")));
    CHECK_FALSE(displays_triple(cat.tree, RootedTriple("a", "c", "b")));
    CHECK_FALSE(displays_triple(cat.tree, RootedTriple("b", "c", "a")));
}

TEST_CASE("binary recognition") {
    CHECK(is_binary(parse_newick("((a:1,b:1):1,c:1,d:1);").tree));
    CHECK_FALSE(is_binary(parse_newick("(a:1,b:1,c:1,d:1);").tree));
    CHECK(is_binary(parse_newick("((a:1,b:1):1,c:1)[&R];").tree));
    CHECK(is_binary(parse_newick("a;").tree));
}

TEST_CASE("degree-2 joins are spotted except at the root") {
    CHECK_FALSE(degree_two_join(parse_newick("(a:1,b:0,c:1);").tree));
    CHECK_FALSE(degree_two_join(parse_newick("(a:1,b:1)[&R];").tree));
    PhyloTree::Init init;
    init.ids = {"a", "·m", "b"};
    init.edges = {{0, 1}, {1, 2}};
    init.allow_degree_two = true;
    CHECK(degree_two_join(PhyloTree(std::move(init))));
}

TEST_CASE("fresh inner ids append primes") {
    std::vector<std::string> used{"·h", "·h'"};
    CHECK(fresh_inner_id("h", {}) == "·h");
    CHECK(fresh_inner_id("h", used) == "·h''");
}
