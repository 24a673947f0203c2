import random
from itertools import permutations


from raagtools.domination import (
    dominates,
    domination_structure,
    has_dominated_vertex,
    verify_order_antisymmetry,
)
from raagtools.families import frucht
from raagtools.graphs import SimplicialGraph
from support import (
    CORPUS,
    EMPTY,
    K1,
    K2_K2,
    K2_K3,
    K4,
    P3,
    random_graph,
)


def brute_dominates(g, x, y):
    return all(z == x or g.adjacent(x, z) for z in g.link(y))


# -- the relation ------------------------------------------------------------------


def test_path_domination():
    assert dominates(P3, "b", "a")
    assert not dominates(P3, "a", "b")


def test_complete_graph_everything_dominates():
    for x in K4.vertices:
        for y in K4.vertices:
            assert dominates(K4, x, y)


def test_reflexive():
    for g in CORPUS:
        for v in g.vertices:
            assert dominates(g, v, v)


def test_matches_brute_force_inclusion():
    rng = random.Random(2024)
    graphs = CORPUS + [random_graph(rng, rng.randint(1, 6)) for _ in range(20)]
    for g in graphs:
        for x in g.vertices:
            for y in g.vertices:
                assert dominates(g, x, y) == brute_dominates(g, x, y)


def test_transitive_on_small_graphs():
    rng = random.Random(4)
    graphs = [g for g in CORPUS if len(g) <= 7]
    graphs += [random_graph(rng, rng.randint(1, 6)) for _ in range(15)]
    for g in graphs:
        for x in g.vertices:
            for y in g.vertices:
                for z in g.vertices:
                    if dominates(g, x, y) and dominates(g, y, z):
                        assert dominates(g, x, z)


def test_has_dominated_vertex():
    assert not has_dominated_vertex(frucht())
    assert has_dominated_vertex(P3)
    assert not has_dominated_vertex(K1)
    assert not has_dominated_vertex(EMPTY)


# -- structure ----------------------------------------------------------------------


def test_structure_two_distinct_cliques():
    s = domination_structure(K2_K3)
    assert s.classes == (("a", "b"), ("c", "d", "e"))
    assert s.orbits == ((0,), (1,))
    # no domination between the blocks in either direction
    assert (0, 1) not in s.orbit_order
    assert (1, 0) not in s.orbit_order


def test_structure_two_equal_cliques_single_orbit():
    s = domination_structure(K2_K2)
    assert s.classes == (("a", "b"), ("c", "d"))
    assert s.orbits == ((0, 1),)


def test_structure_single_vertex():
    s = domination_structure(K1)
    assert s.classes == (("a",),)
    assert s.labels["a"] == (1, 1, 1)


def test_structure_path():
    s = domination_structure(P3)
    # the two ends dominate each other; the middle dominates both
    assert s.classes == (("a", "c"), ("b",))
    assert (0, 1) in s.class_order
    assert (1, 0) not in s.class_order


def test_pairs_include_reflexive_and_match_relation():
    for g in [P3, K2_K3, K4]:
        s = domination_structure(g)
        for x in g.vertices:
            for y in g.vertices:
                assert ((x, y) in s.pairs) == dominates(g, x, y)


def test_labels_are_a_bijection_onto_positions():
    for g in CORPUS:
        if len(g) > 7:
            continue
        s = domination_structure(g)
        labels = s.labels
        assert len(labels) == len(g)
        assert len(set(labels.values())) == len(g)
        ps = sorted({p for p, _, _ in labels.values()})
        assert ps == list(range(1, len(s.orbits) + 1))
        # labels respect class and orbit membership
        for v, (p, q, r) in labels.items():
            ci = s.class_index_of(v)
            assert s.orbit_index_of_class(ci) == _orbit_at_position(s, labels, p)


def _orbit_at_position(s, labels, p):
    classes_at_p = {
        s.class_index_of(v) for v, (pp, _, _) in labels.items() if pp == p
    }
    orbits = {s.orbit_index_of_class(ci) for ci in classes_at_p}
    assert len(orbits) == 1
    return orbits.pop()


def test_orbit_order_is_representative_independent():
    # replacing the distinguished class by any other class of the same orbit
    # yields the same relation
    rng = random.Random(6)
    graphs = [g for g in CORPUS if 0 < len(g) <= 6]
    graphs += [random_graph(rng, rng.randint(1, 6)) for _ in range(15)]
    for g in graphs:
        s = domination_structure(g)
        for a, oa in enumerate(s.orbits):
            for b, ob in enumerate(s.orbits):
                answers = {
                    any((ci, cj) in s.class_order for cj in ob) for ci in oa
                }
                assert len(answers) == 1
                assert ((a, b) in s.orbit_order) == answers.pop()


def test_orbit_order_is_partial_order():
    for g in CORPUS:
        if len(g) > 7:
            continue
        s = domination_structure(g)
        n = len(s.orbits)
        for a in range(n):
            assert (a, a) in s.orbit_order
            for b in range(n):
                if a != b:
                    assert not (
                        (a, b) in s.orbit_order and (b, a) in s.orbit_order
                    )
                for c in range(n):
                    if (a, b) in s.orbit_order and (b, c) in s.orbit_order:
                        assert (a, c) in s.orbit_order


def test_structure_invariant_under_declaration_order():
    # same graph, shuffled vertex declaration: classes and orbits agree as
    # name sets even though the labels may differ
    base = K2_K3
    for perm in list(permutations(base.vertices))[:40:7]:
        g = SimplicialGraph(perm, base.edges())
        s1 = domination_structure(base)
        s2 = domination_structure(g)
        as_sets = lambda s: {frozenset(cls) for cls in s.classes}
        assert as_sets(s1) == as_sets(s2)


# -- antisymmetry report --------------------------------------------------------------


def test_verify_order_antisymmetry_corpus():
    for g in CORPUS:
        if len(g) > 7:
            continue
        assert verify_order_antisymmetry(g).ok


def test_verify_order_antisymmetry_empty_graph_vacuous():
    report = verify_order_antisymmetry(EMPTY)
    assert report.ok
