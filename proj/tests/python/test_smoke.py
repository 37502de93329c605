"""End-to-end smoke checks through the Python bindings."""

import pytest

import rgctree as rg


def test_parse_and_reserialize():
    t = rg.parse_newick("(x:1,y:0,z:1);")
    assert t.taxa == ["x", "y", "z"]
    assert not t.rooted
    again = rg.parse_newick(t.newick())
    assert t == again


def test_star_relations():
    t = rg.parse_newick("(x:1,y:0,z:1);")
    assert rg.zero_classes(t) == [["x"], ["y"], ["z"]]
    assert rg.single1_pairs(t) == [("x", "y"), ("y", "z")]
    assert rg.at_least_k_pairs(t, 2) == [("x", "z")]


def test_parse_errors_carry_position():
    with pytest.raises(rg.Error, match="label"):
        rg.parse_newick("(x:1,y:0,z);")
    with pytest.raises(rg.Error, match="label"):
        rg.parse_newick("((a:1,b:0):0.5,c:1);")


def test_infer_round_trip():
    rel = rg.Relation(
        "undirected",
        ["a", "b", "c", "d"],
        sym=[("a", "b"), ("b", "c"), ("b", "d")],
    )
    tree = rg.infer(rel)
    assert rg.explains(tree, rel)
    parsed = rg.parse_relation(rel.tsv())
    assert parsed == rel


def test_check_reports_witnesses():
    cyclic = rg.Relation(
        "undirected",
        ["a", "b", "c"],
        sym=[("a", "b"), ("b", "c"), ("a", "c")],
    )
    verdict = rg.check(cyclic)
    assert not verdict["explainable"]
    assert "cycle" in verdict["witness"]


def test_rooted_and_mixed():
    rel = rg.Relation("directed", ["a", "b", "c"], dir=[("a", "b"), ("a", "c")])
    trees = rg.infer_rooted(rel)
    assert len(trees) == 1
    assert trees[0].rooted
    assert rg.explains(trees[0], rel)

    mixed = rg.Relation(
        "mixed", ["a", "b", "c"], sym=[("b", "c")], dir=[("a", "b")]
    )
    centers = rg.admissible_centers(mixed)
    assert centers == [["a"]]
    t = rg.reconstruct_mixed(mixed)
    assert rg.explains(t, mixed)


def test_two_component_join_is_flagged():
    rel = rg.Relation("undirected", ["a", "b", "c"], zero=[["a", "b"], ["c"]])
    tree = rg.infer(rel)
    assert rg.explains(tree, rel)
    assert tree.degree_two_join
    assert rg.brute_force_explainers(rel) == []


def test_mixed_reconstruction_is_vertex_minimal():
    rel = rg.Relation(
        "mixed",
        ["a", "b", "c"],
        zero=[["a"], ["b", "c"]],
        sym=[("a", "b"), ("a", "c")],
    )
    t = rg.reconstruct_mixed(rel)
    explainers = rg.brute_force_explainers(rel)
    assert t.vertex_count == min(e.vertex_count for e in explainers)


def test_binary_enumeration_and_triples():
    rel = rg.Relation(
        "undirected",
        ["a", "b", "c", "d"],
        sym=[("a", "b"), ("b", "c"), ("c", "d")],
    )
    counts, trees = rg.enumerate_binary(rel)
    assert sum(counts) == len(trees)
    assert all(t.binary for t in trees)

    closed = rg.close_triples([("a", "b", "c"), ("a", "d", "c")])
    assert ("b", "d", "c") in closed


def test_oracle_agrees_on_a_small_case():
    rel = rg.Relation(
        "undirected", ["a", "b", "c"], sym=[("a", "b"), ("b", "c")]
    )
    explainers = rg.brute_force_explainers(rel, max_leaves=5)
    tree = rg.infer(rel)
    assert any(tree == e for e in explainers)
    assert min(e.vertex_count for e in explainers) == tree.vertex_count
