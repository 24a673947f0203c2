import random

import pytest
from hypothesis import given, settings, strategies as st

from raagtools.graphs import (
    GraphParseError,
    SimplicialGraph,
    graph_automorphisms,
    graph_to_text,
    is_asymmetric,
    join,
    parse_graph,
)
from support import (
    C4,
    CORPUS,
    EMPTY,
    K1,
    K2_K3,
    K2_K2,
    K4,
    P3,
    brute_force_automorphisms,
    random_graph,
)


# -- construction and parsing ---------------------------------------------------


def test_parse_two_vertex_graph():
    g = parse_graph("v a\nv b\ne a b\n")
    assert g.vertices == ("a", "b")
    assert g.edges() == (("a", "b"),)


def test_parse_comments_and_blanks():
    g = parse_graph("# header\n\nv a\n  # indented comment\nv b\n\ne a b\n")
    assert g.vertices == ("a", "b")
    assert g.adjacent("a", "b")


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("v a\ne a b\n", "unknown endpoint"),
        ("v a\nv a\n", "duplicate vertex"),
        ("v a\ne a a\n", "self-loop"),
        ("v a\nv b\ne a b\ne b a\n", "duplicate edge"),
        ("v a\nw b\n", "unrecognized directive"),
        ("v a-b\n", "invalid vertex name"),
    ],
)
def test_parse_errors_name_line(text, fragment):
    with pytest.raises(GraphParseError) as err:
        parse_graph(text)
    assert fragment in str(err.value)
    assert "line" in str(err.value)


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        SimplicialGraph(("a", "a"))
    with pytest.raises(ValueError):
        SimplicialGraph(("a",), [("a", "a")])
    with pytest.raises(ValueError):
        SimplicialGraph(("a",), [("a", "b")])


def test_round_trip_through_text():
    for g in CORPUS:
        assert parse_graph(graph_to_text(g)) == g


# -- link, star, subgraph, components ---------------------------------------------


def test_link_and_star_on_path():
    assert P3.link("b") == {"a", "c"}
    assert P3.star("b") == {"a", "b", "c"}
    assert P3.link("a") == {"b"}


def test_link_complete_graph():
    assert K4.link("a") == {"b", "c", "d"}
    assert K4.star("a") == {"a", "b", "c", "d"}


def test_link_isolated_vertex():
    g = SimplicialGraph(("a", "b"), [])
    assert g.link("a") == frozenset()
    assert g.star("a") == {"a"}


def test_link_unknown_vertex():
    with pytest.raises(ValueError):
        P3.link("z")


def test_link_star_symmetry_over_corpus():
    for g in CORPUS:
        for v in g.vertices:
            assert v not in g.link(v)
            assert v in g.star(v)
            for w in g.vertices:
                assert (w in g.link(v)) == (v in g.link(w))


def test_full_subgraph_whole_and_empty():
    assert K4.full_subgraph(K4.vertices) == K4
    assert len(K4.full_subgraph([])) == 0


def test_full_subgraph_unknown_vertex():
    with pytest.raises(ValueError):
        K4.full_subgraph(["a", "z"])


def test_full_subgraph_c4_minus_vertex_is_path():
    sub = C4.full_subgraph(["a", "b", "c"])
    assert sub.vertices == ("a", "b", "c")
    assert set(map(frozenset, sub.edges())) == {
        frozenset(("a", "b")),
        frozenset(("b", "c")),
    }


def test_connected_components():
    assert K4.connected_components() == (("a", "b", "c", "d"),)
    assert K2_K3.connected_components() == (("a", "b"), ("c", "d", "e"))
    assert EMPTY.connected_components() == ()


def test_components_partition_vertices():
    for g in CORPUS:
        blocks = g.connected_components()
        seen = [v for block in blocks for v in block]
        assert sorted(seen) == sorted(g.vertices)
        assert all(block for block in blocks)


def test_star_cut_components_path_middle():
    assert P3.star_cut_components("b") == ()


def test_star_cut_components_path_end():
    assert P3.star_cut_components("a") == (("c",),)


# -- join ---------------------------------------------------------------------------


def test_join_two_singletons_is_edge():
    g = join([K1, SimplicialGraph(("z",))])
    assert g.adjacent("a", "z")
    assert g.edge_count() == 1


def test_join_single_graph_is_identity():
    assert join([C4]) == C4


def test_join_name_collision():
    with pytest.raises(ValueError):
        join([K1, K1])


def test_join_edge_count_formula():
    z = SimplicialGraph(("z1", "z2"), [("z1", "z2")])
    g = join([z, K2_K3])
    expected = z.edge_count() + K2_K3.edge_count() + len(z) * len(K2_K3)
    assert g.edge_count() == expected


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_join_edge_count_property(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    g1 = random_graph(rng, rng.randint(0, 4))
    names2 = tuple(f"w{i}" for i in range(rng.randint(0, 4)))
    g2 = SimplicialGraph(
        names2,
        [
            (names2[i], names2[j])
            for i in range(len(names2))
            for j in range(i + 1, len(names2))
            if rng.random() < 0.5
        ],
    )
    joined = join([g1, g2])
    assert joined.edge_count() == g1.edge_count() + g2.edge_count() + len(g1) * len(g2)


# -- automorphisms --------------------------------------------------------------------


def test_c4_has_eight_automorphisms():
    autos = graph_automorphisms(C4)
    assert len(autos) == 8
    assert {p.images for p in autos} == brute_force_automorphisms(C4)


def test_k1_trivial():
    assert is_asymmetric(K1)
    assert len(graph_automorphisms(EMPTY)) == 1


def test_identity_always_present():
    for g in CORPUS:
        autos = graph_automorphisms(g)
        assert any(p.is_identity() for p in autos)


def test_size_bound_enforced():
    with pytest.raises(ValueError):
        graph_automorphisms(K4, max_vertices=3)


def test_agrees_with_brute_force_on_corpus():
    for g in CORPUS:
        if len(g) > 7:
            continue
        assert {p.images for p in graph_automorphisms(g)} == brute_force_automorphisms(
            g
        )


def test_agrees_with_brute_force_on_random_graphs():
    rng = random.Random(20240811)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 6), rng.random())
        assert {
            p.images for p in graph_automorphisms(g)
        } == brute_force_automorphisms(g)


def test_seven_vertex_brute_force():
    rng = random.Random(7)
    for _ in range(2):
        g = random_graph(rng, 7, 0.4)
        assert {
            p.images for p in graph_automorphisms(g)
        } == brute_force_automorphisms(g)


def test_group_closure_under_composition_and_inverse():
    for g in [C4, K2_K2, P3, K2_K3]:
        autos = graph_automorphisms(g)
        images = {p.images for p in autos}
        for p in autos:
            assert p.inverse().images in images
            for q in autos:
                assert p.compose(q).images in images


def test_deterministic_order():
    first = [p.images for p in graph_automorphisms(C4)]
    second = [p.images for p in graph_automorphisms(C4)]
    assert first == second
    assert first == sorted(first)


def test_disjoint_nonisomorphic_cliques_symmetries():
    # S2 x S3 acting on the two blocks independently
    assert len(graph_automorphisms(K2_K3)) == 12
