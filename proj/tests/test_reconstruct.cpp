#include <set>

#include "doctest.h"
#include "rgc/newick.hpp"
#include "rgc/reconstruct.hpp"
#include "rgc/relations.hpp"

using namespace rgc;

namespace {

QuotientGraph undirected(std::vector<std::string> vs, std::vector<TaxonPair> sym) {
    return {RelationMode::undirected, std::move(vs), std::move(sym), {}};
}

RelationGraph as_relation(const QuotientGraph& q) { return q.as_relation(); }

}  // namespace

TEST_CASE("expanding a path hangs the middle vertex on a 0-edge") {
    QuotientGraph q = undirected({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    LabeledTree t = expand_quotient(q);
    CHECK(t.tree.vertex_count() == 4);
    CHECK(isomorphic(t, parse_newick("(x:1,y:0,z:1);")));
    CHECK(explains(t, as_relation(q)));
}

TEST_CASE("expanding trivial quotients") {
    LabeledTree lone = expand_quotient(undirected({"a"}, {}));
    CHECK(lone.tree.vertex_count() == 1);

    LabeledTree edge = expand_quotient(undirected({"a", "b"}, {{"a", "b"}}));
    CHECK(edge.tree.vertex_count() == 2);
    CHECK(edge.label(0, 1) == 1);

    CHECK_THROWS_AS(expand_quotient(undirected({"a", "b"}, {})), NotATree);
    CHECK_THROWS_AS(
        expand_quotient(undirected({"a", "b", "c"},
                                   {{"a", "b"}, {"b", "c"}, {"a", "c"}})),
        NotATree);
}

TEST_CASE("pendant-zero form recognition") {
    std::string witness;
    CHECK(in_pendant_zero_form(parse_newick("(x:1,y:0,z:1);")));
    CHECK(in_pendant_zero_form(parse_newick("a;")));
    CHECK(in_pendant_zero_form(parse_newick("(a:1)b;")));

    CHECK_FALSE(in_pendant_zero_form(parse_newick("(a:0)b;")));
    CHECK_FALSE(
        in_pendant_zero_form(parse_newick("(x:1,y:0,z:0);"), &witness));
    CHECK_FALSE(witness.empty());
    CHECK_FALSE(in_pendant_zero_form(parse_newick("(x:1,y:1,z:1);")));
    CHECK_FALSE(in_pendant_zero_form(parse_newick("(x:1,y:0,z:1)[&R];")));
    // the 0-edge leads to an inner vertex, not a leaf
    CHECK_FALSE(in_pendant_zero_form(
        parse_newick("((a:1,b:1):0,(c:1,d:1):1,e:1);")));
}

TEST_CASE("collapse inverts expansion") {
    for (auto q : {undirected({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}),
                   undirected({"a", "b", "c", "d"},
                              {{"a", "b"}, {"b", "c"}, {"b", "d"}}),
                   undirected({"a"}, {}),
                   undirected({"a", "b"}, {{"a", "b"}})}) {
        CHECK(collapse_tree(expand_quotient(q)) == q);
    }
    CHECK_THROWS_AS(collapse_tree(parse_newick("(x:1,y:1,z:1);")), NotInClassT);
}

TEST_CASE("disconnected quotients get a hub") {
    QuotientGraph q = undirected({"a", "b", "c"}, {{"a", "b"}});
    LabeledTree t = infer_undirected(q);
    CHECK(t.tree.vertex_count() == 5);
    CHECK(explains(t, as_relation(q)));

    // two single vertices: hub of degree 2, allowed in this one shape
    QuotientGraph two = undirected({"a", "b"}, {});
    LabeledTree t2 = infer_undirected(two);
    CHECK(t2.tree.vertex_count() == 3);
    CHECK(explains(t2, as_relation(two)));

    QuotientGraph three = undirected({"a", "b", "c"}, {});
    LabeledTree t3 = infer_undirected(three);
    CHECK(t3.tree.vertex_count() == 4);
    CHECK(explains(t3, as_relation(three)));
}

TEST_CASE("the assembly pool varies attachments and flips") {
    // one edge component and one isolated vertex: the fresh middle vertex
    // can put its 1-edge on either endpoint
    QuotientGraph q = undirected({"a", "b", "c"}, {{"a", "b"}});
    std::vector<LabeledTree> pool = hub_assembly_pool(q);
    REQUIRE(pool.size() == 2);
    CHECK(isomorphic(pool[0], infer_undirected(q)));
    CHECK_FALSE(isomorphic(pool[0], pool[1]));
    for (const auto& t : pool) CHECK(explains(t, as_relation(q)));

    // a connected quotient leaves nothing to vary
    QuotientGraph path = undirected({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    CHECK(hub_assembly_pool(path).size() == 1);

    // a 4-vertex star component offers three attachment points to a second
    // component: its own inner copy plus nothing else, so the pool stays
    // at the flip count of the edge component
    QuotientGraph mixed_comps =
        undirected({"a", "b", "c", "d", "e", "f"},
                   {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"e", "f"}});
    std::vector<LabeledTree> pool2 = hub_assembly_pool(mixed_comps);
    CHECK(pool2.size() == 2);
    std::set<std::string> forms;
    for (const auto& t : pool2) {
        CHECK(explains(t, as_relation(mixed_comps)));
        forms.insert(canonical_form(t));
    }
    CHECK(forms.size() == pool2.size());
}

TEST_CASE("least resolved contraction undoes needless refinement") {
    QuotientGraph star =
        undirected({"x", "y", "z", "w"}, {{"x", "y"}, {"y", "z"}, {"y", "w"}});
    RelationGraph rel = as_relation(star);
    LabeledTree refined = parse_newick("((x:1,z:1):0,y:0,w:1);");
    REQUIRE(explains(refined, rel));
    LabeledTree least = make_least_resolved(refined, rel);
    CHECK(least.tree.vertex_count() == 5);
    CHECK(isomorphic(least, expand_quotient(star)));

    // an already-minimal tree stays put
    LabeledTree minimal = expand_quotient(star);
    CHECK(isomorphic(make_least_resolved(minimal, rel), minimal));

    CHECK_THROWS_AS(
        make_least_resolved(parse_newick("(x:1,y:1,z:1,w:1);"), rel),
        DoesNotExplain);
}
