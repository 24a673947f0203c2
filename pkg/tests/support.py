"""Shared test fixtures: a corpus of small graphs and independent
brute-force oracles (word rewriting BFS, permutation enumeration).

The oracles deliberately avoid the library's reduction and normal-form
code paths: the word oracle explores the rewriting moves themselves
(adjacent commuting swaps, adjacent inverse-pair deletions and
insertions), and the permutation oracle filters all |V|! bijections.
"""

from __future__ import annotations

import random
from itertools import permutations

from raagtools.graphs import SimplicialGraph

# -- graph corpus -------------------------------------------------------------


def complete_graph(names) -> SimplicialGraph:
    names = tuple(names)
    return SimplicialGraph(
        names, [(a, b) for i, a in enumerate(names) for b in names[i + 1 :]]
    )


def path_graph(names) -> SimplicialGraph:
    names = tuple(names)
    return SimplicialGraph(names, list(zip(names, names[1:])))


def cycle_graph(names) -> SimplicialGraph:
    names = tuple(names)
    edges = list(zip(names, names[1:])) + [(names[-1], names[0])]
    return SimplicialGraph(names, edges)


def disjoint_union(*graphs: SimplicialGraph) -> SimplicialGraph:
    names: list[str] = []
    edges: list[tuple[str, str]] = []
    for g in graphs:
        names.extend(g.vertices)
        edges.extend(g.edges())
    return SimplicialGraph(names, edges)


EMPTY = SimplicialGraph(())
K1 = SimplicialGraph(("a",))
K2 = complete_graph(("a", "b"))
K3 = complete_graph(("a", "b", "c"))
K4 = complete_graph(("a", "b", "c", "d"))
P3 = path_graph(("a", "b", "c"))
P4 = path_graph(("a", "b", "c", "d"))
C4 = cycle_graph(("a", "b", "c", "d"))
C5 = cycle_graph(("a", "b", "c", "d", "e"))
FREE2 = SimplicialGraph(("a", "b"))
FREE3 = SimplicialGraph(("a", "b", "c"))
TRIPOD = SimplicialGraph(("x", "u", "v", "w"), [("x", "u"), ("x", "v"), ("x", "w")])
K2_K3 = disjoint_union(complete_graph(("a", "b")), complete_graph(("c", "d", "e")))
K2_K2 = disjoint_union(complete_graph(("a", "b")), complete_graph(("c", "d")))
K3_PENDANT = SimplicialGraph(
    ("a", "b", "c", "d"), [("a", "b"), ("a", "c"), ("b", "c"), ("c", "d")]
)

CORPUS = [
    EMPTY,
    K1,
    K2,
    K3,
    K4,
    P3,
    P4,
    C4,
    C5,
    FREE2,
    FREE3,
    TRIPOD,
    K2_K3,
    K2_K2,
    K3_PENDANT,
]

# the 4 graphs on 3 vertices, one per isomorphism class
THREE_VERTEX_GRAPHS = [
    SimplicialGraph(("a", "b", "c")),
    SimplicialGraph(("a", "b", "c"), [("a", "b")]),
    P3,
    K3,
]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimplicialGraph:
    names = tuple(f"v{i}" for i in range(n))
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return SimplicialGraph(names, edges)


# -- brute-force automorphism oracle ------------------------------------------


def brute_force_automorphisms(g: SimplicialGraph) -> set[tuple[int, ...]]:
    """All adjacency-preserving bijections, by filtering every permutation."""
    n = len(g.vertices)
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [[g.adjacent(u, v) for v in g.vertices] for u in g.vertices]
    found = set()
    for perm in permutations(range(n)):
        if all(
            adj[i][j] == adj[perm[i]][perm[j]]
            for i in range(n)
            for j in range(i + 1, n)
        ):
            found.add(perm)
    return found


# -- word rewriting oracle -----------------------------------------------------
#
# Moves on letter tuples:
#   swap   - exchange adjacent letters whose vertices are adjacent in the graph
#   delete - remove an adjacent inverse pair (x, e), (x, -e)
#   insert - insert an inverse pair at any position, while the length stays
#            within the cap
#
# Every move preserves the per-vertex exponent-sum vector, and the moves are
# mutually inverse, so the reachable classes partition the capped word space.


def _exponent_key(g, w):
    sums = {v: 0 for v in g.vertices}
    for v, sign in w:
        sums[v] += sign
    return tuple(sums[v] for v in g.vertices)


def _neighbors(g, w, cap):
    adj = g.neighbor_map()
    n = len(w)
    for i in range(n - 1):
        (x, e), (y, f) = w[i], w[i + 1]
        if y in adj[x]:
            yield w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        if x == y and e == -f:
            yield w[:i] + w[i + 2 :]
    if n + 2 <= cap:
        letters = [(v, s) for v in g.vertices for s in (1, -1)]
        for i in range(n + 1):
            for v, s in letters:
                yield w[:i] + ((v, s), (v, -s)) + w[i:]


def oracle_words_equal(g, u, w, cap=None) -> bool:
    """Bidirectional BFS over the rewriting moves, early exit on meeting.

    The default cap leaves insertion headroom of one pair above the longer
    input, which is already more than the minimum swap/delete path between
    equal words needs.
    """
    u, w = tuple(u), tuple(w)
    if _exponent_key(g, u) != _exponent_key(g, w):
        return False
    if cap is None:
        cap = max(len(u), len(w)) + 2
    if u == w:
        return True
    seen_a, seen_b = {u}, {w}
    front_a, front_b = {u}, {w}
    while front_a and front_b:
        # expand the smaller frontier
        if len(front_a) > len(front_b):
            seen_a, seen_b = seen_b, seen_a
            front_a, front_b = front_b, front_a
        new_front = set()
        for word in front_a:
            for nxt in _neighbors(g, word, cap):
                if nxt in seen_b:
                    return True
                if nxt not in seen_a:
                    seen_a.add(nxt)
                    new_front.add(nxt)
        front_a = new_front
    return False


def random_word(rng: random.Random, g, max_len: int):
    n = rng.randint(0, max_len)
    letters = [(v, s) for v in g.vertices for s in (1, -1)]
    return tuple(rng.choice(letters) for _ in range(n))


def scramble(rng: random.Random, g, w, moves: int, cap: int):
    """Apply random legal rewriting moves; the result equals w in the group."""
    current = tuple(w)
    for _ in range(moves):
        options = list(_neighbors(g, current, cap))
        if not options:
            break
        current = rng.choice(options)
    return current
