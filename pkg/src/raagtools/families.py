"""Constructors for the witness graph families used by the verification
suites, with parameter validation.

The 12-vertex cubic graph with trivial symmetry group is hard-coded from
its standard LCF description and its defining properties are re-verified
at construction time rather than trusted.  The cycle-with-hub family takes
a strictly increasing spoke set with all gaps larger than two and pairwise
distinct, which forces trivial symmetry and no dominated vertices while
the hub's star cut has one component per gap.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .bounds import AUSTERE, austerity
from .graphs import SimplicialGraph, join

_FRUCHT_LCF = (-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2)


@lru_cache(maxsize=1)
def frucht() -> SimplicialGraph:
    """The 12-vertex, 18-edge, 3-regular graph with trivial symmetry group,
    no dominated vertices, and connected star cuts."""
    n = 12
    names = tuple(str(i) for i in range(n))
    edge_set = set()
    for i in range(n):
        edge_set.add(frozenset((i, (i + 1) % n)))
        edge_set.add(frozenset((i, (i + _FRUCHT_LCF[i]) % n)))
    edges = sorted(tuple(sorted(e)) for e in edge_set)
    g = SimplicialGraph(names, [(names[i], names[j]) for i, j in edges])
    if g.edge_count() != 18 or any(g.degree(v) != 3 for v in g.vertices):
        raise RuntimeError("construction error: graph is not 3-regular with 18 edges")
    if austerity(g).verdict != AUSTERE:
        raise RuntimeError("construction error: graph failed the austerity checks")
    return g


def validate_spokes(spokes: Sequence[int]) -> tuple[int, ...]:
    """Validate a spoke set: at least three strictly increasing positive
    integers whose successive gaps (from an implicit 0) all exceed two
    (condition 1) and are pairwise distinct (condition 2)."""
    e = tuple(spokes)
    if len(e) < 3:
        raise ValueError(f"invalid spoke set {list(e)}: need at least 3 spokes")
    if any(not isinstance(x, int) or x <= 0 for x in e):
        raise ValueError(f"invalid spoke set {list(e)}: entries must be positive integers")
    if any(a >= b for a, b in zip(e, e[1:])):
        raise ValueError(f"invalid spoke set {list(e)}: must be strictly increasing")
    gaps = [b - a for a, b in zip((0,) + e, e)]
    for i, gap in enumerate(gaps):
        if gap <= 2:
            raise ValueError(
                f"invalid spoke set {list(e)}: gap {gap} at position {i} "
                "must exceed 2 (condition 1)"
            )
    if len(set(gaps)) != len(gaps):
        raise ValueError(
            f"invalid spoke set {list(e)}: gaps {gaps} must be pairwise "
            "distinct (condition 2)"
        )
    return e


def cycle_hub(spokes: Sequence[int]) -> SimplicialGraph:
    """Cycle on 0..e_t-1 plus a hub vertex c adjacent to 0 and to each spoke
    position except the last (which wraps to 0)."""
    e = validate_spokes(spokes)
    size = e[-1]
    names = tuple(str(i) for i in range(size)) + ("c",)
    edges = [(str(i), str((i + 1) % size)) for i in range(size)]
    edges += [("c", str(pos)) for pos in (0,) + e[:-1]]
    return SimplicialGraph(names, edges)


def join_complete(k: int, sizes: Sequence[int]) -> SimplicialGraph:
    """Join of a complete graph on k social vertices with a disjoint union
    of pairwise distinct complete graphs of the given sizes (each >= 2)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one component size")
    if any(not isinstance(s, int) or s < 2 for s in sizes):
        raise ValueError(f"component sizes must be integers >= 2, got {sizes!r}")
    if len(set(sizes)) != len(sizes):
        raise ValueError(f"component sizes must be pairwise distinct, got {sizes!r}")
    social = _complete(tuple(f"s{i}" for i in range(1, k + 1)))
    blocks = []
    for i, size in enumerate(sizes, start=1):
        names = tuple(f"a{i}_{j}" for j in range(1, size + 1))
        blocks.append(_complete(names))
    delta_names: list[str] = []
    delta_edges: list[tuple[str, str]] = []
    for b in blocks:
        delta_names.extend(b.vertices)
        delta_edges.extend(b.edges())
    delta = SimplicialGraph(delta_names, delta_edges)
    return join([social, delta])


def _complete(names: tuple[str, ...]) -> SimplicialGraph:
    return SimplicialGraph(
        names, [(a, b) for i, a in enumerate(names) for b in names[i + 1 :]]
    )
