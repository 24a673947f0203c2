import random

import pytest

from raagtools.bounds import (
    AUSTERE,
    AUSTERE_WITH_STAR_CUTS,
    austerity,
    find_sil,
    star_cut_bound,
)
from raagtools.decomposition import (
    join_decomposition,
    out_aut_lower_bound_center,
    sign_classes,
    social_vertices,
)
from raagtools.families import cycle_hub, frucht, join_complete, validate_spokes
from raagtools.graphs import graph_automorphisms, parse_graph, graph_to_text


# -- frucht ---------------------------------------------------------------------


def test_frucht_shape():
    g = frucht()
    assert len(g) == 12
    assert g.edge_count() == 18
    assert all(g.degree(v) == 3 for v in g.vertices)


def test_frucht_asymmetric_and_austere():
    g = frucht()
    assert len(graph_automorphisms(g)) == 1
    assert austerity(g).verdict == AUSTERE


def test_frucht_every_star_cut_connected():
    g = frucht()
    assert all(len(g.star_cut_components(v)) == 1 for v in g.vertices)


# -- cycle hub -------------------------------------------------------------------


def test_cycle_hub_figure_case():
    g = cycle_hub([3, 7, 12])
    assert len(g) == 13
    assert g.link("c") == {"0", "3", "7"}
    sizes = sorted(len(c) for c in g.star_cut_components("c"))
    assert sizes == [2, 3, 4]


def test_cycle_hub_properties():
    g = cycle_hub([3, 7, 12])
    assert austerity(g).verdict == AUSTERE_WITH_STAR_CUTS
    assert find_sil(g) is None
    assert len(graph_automorphisms(g)) == 1


@pytest.mark.parametrize(
    "spokes, fragment",
    [
        ([3, 6, 9], "condition 2"),
        ([2, 7, 12], "condition 1"),
        ([3, 5, 12], "condition 1"),
        ([3, 7], "at least 3"),
        ([7, 3, 12], "strictly increasing"),
        ([3, 7, 7], "strictly increasing"),
        ([-3, 7, 12], "positive"),
    ],
)
def test_spoke_validation_errors(spokes, fragment):
    with pytest.raises(ValueError) as err:
        validate_spokes(spokes)
    assert fragment in str(err.value)


def test_randomized_valid_spoke_families():
    rng = random.Random(1812)
    for t in (3, 4, 5):
        for _ in range(3):
            gaps = rng.sample(range(3, 10), t)
            spokes = []
            total = 0
            for gap in gaps:
                total += gap
                spokes.append(total)
            g = cycle_hub(spokes)
            assert austerity(g).verdict == AUSTERE_WITH_STAR_CUTS
            assert find_sil(g) is None
            assert len(g.star_cut_components("c")) == t
            assert star_cut_bound(g) == 2 ** (t - 1)


# -- join of complete graphs -------------------------------------------------------


def test_join_complete_basic():
    g = join_complete(1, [2, 3])
    assert len(g) == 6
    assert social_vertices(g) == ("s1",)
    d = join_decomposition(g)
    assert sign_classes(d).m == 2


def test_join_complete_three_blocks():
    g = join_complete(2, [2, 3, 4])
    assert sign_classes(join_decomposition(g)).m == 3


def test_join_complete_bound_matches_block_count():
    for d_count in (2, 3):
        sizes = list(range(2, 2 + d_count))
        g = join_complete(1, sizes)
        assert out_aut_lower_bound_center(g) == 2 ** (d_count - 1)


@pytest.mark.parametrize(
    "k, sizes",
    [
        (1, [2, 2]),
        (1, [1, 3]),
        (0, [2, 3]),
        (1, []),
    ],
)
def test_join_complete_validation(k, sizes):
    with pytest.raises(ValueError):
        join_complete(k, sizes)


# -- serialization round trips --------------------------------------------------------


def test_families_round_trip_through_files():
    for g in [frucht(), cycle_hub([3, 7, 12]), join_complete(2, [2, 3])]:
        assert parse_graph(graph_to_text(g)) == g
