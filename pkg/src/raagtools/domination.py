"""The domination preorder and its derived structure.

``x`` dominates ``y`` when lk(y) is contained in st(x); this is the
condition for the transvection sending y to y*x to define a group
automorphism.  Mutual domination is an equivalence; the preorder descends
to a partial order on the classes; graph automorphisms act on the classes
and the induced relation on the orbits of that action is again a partial
order.  Extending the orbit order to a total order (topological sort with
canonical-vertex tie-breaks) assigns every vertex a position label
(p, q, r): r-th vertex of the q-th class of the p-th orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graphs import DEFAULT_MAX_VERTICES, SimplicialGraph, graph_automorphisms
from .report import Check, Report


def dominates(g: SimplicialGraph, x: str, y: str) -> bool:
    """True when lk(y) is a subset of st(x); every vertex dominates itself."""
    return g.link(y) <= g.star(x)


def has_dominated_vertex(g: SimplicialGraph) -> bool:
    """True when some vertex dominates a different one."""
    return any(
        x != y and dominates(g, x, y) for x in g.vertices for y in g.vertices
    )


@dataclass(frozen=True)
class DominationStructure:
    """Domination pairs, classes, class order, orbits and position labels.

    ``pairs`` holds every ordered pair (x, y) with x dominating y,
    including the reflexive ones.  ``classes`` partitions the vertices by
    mutual domination; ``class_order`` holds (i, j) whenever class i is
    dominated by class j (reflexive).  ``orbits`` partitions class indices
    under the graph-automorphism action; ``orbit_order`` holds (a, b)
    whenever some class of orbit b dominates the classes of orbit a
    (reflexive).  ``labels`` maps each vertex to its 1-based (p, q, r)
    position in the canonical total order.
    """

    graph: SimplicialGraph
    pairs: frozenset[tuple[str, str]]
    classes: tuple[tuple[str, ...], ...]
    class_order: frozenset[tuple[int, int]]
    orbits: tuple[tuple[int, ...], ...]
    orbit_order: frozenset[tuple[int, int]]
    labels: Mapping[str, tuple[int, int, int]] = field(compare=False)

    def class_index_of(self, v: str) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise ValueError(f"unknown vertex {v!r}")

    def orbit_index_of_class(self, class_index: int) -> int:
        for a, orbit in enumerate(self.orbits):
            if class_index in orbit:
                return a
        raise ValueError(f"unknown class index {class_index}")


def domination_structure(
    g: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> DominationStructure:
    verts = g.vertices
    n = len(verts)

    dom = {
        (x, y): dominates(g, x, y) for x in verts for y in verts
    }
    pairs = frozenset((x, y) for (x, y), d in dom.items() if d)

    # classes of mutual domination, canonical order
    assigned: dict[str, int] = {}
    classes: list[tuple[str, ...]] = []
    for v in verts:
        if v in assigned:
            continue
        members = tuple(
            w for w in verts if dom[(v, w)] and dom[(w, v)]
        )
        idx = len(classes)
        classes.append(members)
        for w in members:
            assigned[w] = idx

    class_order = frozenset(
        (i, j)
        for i, ci in enumerate(classes)
        for j, cj in enumerate(classes)
        if dom[(cj[0], ci[0])]
    )

    # orbits of the automorphism action on classes
    perms = graph_automorphisms(g, max_vertices)
    parent = list(range(len(classes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for p in perms:
        name_map = p.name_map(g)
        for i, cls in enumerate(classes):
            image = name_map[cls[0]]
            union(i, assigned[image])
    orbit_of: dict[int, list[int]] = {}
    for i in range(len(classes)):
        orbit_of.setdefault(find(i), []).append(i)
    orbits = tuple(
        tuple(sorted(v, key=lambda i: g.index(classes[i][0])))
        for _, v in sorted(
            orbit_of.items(), key=lambda kv: min(g.index(classes[i][0]) for i in kv[1])
        )
    )

    # orbit order: a below b when some class of orbit b dominates a class of a
    orbit_order = set()
    for a, oa in enumerate(orbits):
        for b, ob in enumerate(orbits):
            ci = oa[0]
            if any((ci, cj) in class_order for cj in ob):
                orbit_order.add((a, b))

    labels = _position_labels(g, classes, orbits, frozenset(orbit_order))

    return DominationStructure(
        graph=g,
        pairs=pairs,
        classes=tuple(classes),
        class_order=class_order,
        orbits=orbits,
        orbit_order=frozenset(orbit_order),
        labels=labels,
    )


def _position_labels(
    g: SimplicialGraph,
    classes: list[tuple[str, ...]],
    orbits: tuple[tuple[int, ...], ...],
    orbit_order: frozenset[tuple[int, int]],
) -> dict[str, tuple[int, int, int]]:
    """Extend the orbit order to a total order by Kahn's algorithm.

    Ties break on the smallest canonical vertex index in the orbit, so the
    labelling is reproducible run to run.
    """

    def orbit_key(a: int) -> int:
        return min(g.index(v) for i in orbits[a] for v in classes[i])

    remaining = set(range(len(orbits)))
    total: list[int] = []
    while remaining:
        sources = [
            a
            for a in remaining
            if not any(b != a and (b, a) in orbit_order for b in remaining)
        ]
        if not sources:
            raise RuntimeError("orbit order contains a cycle; antisymmetry violated")
        pick = min(sources, key=orbit_key)
        total.append(pick)
        remaining.remove(pick)

    labels: dict[str, tuple[int, int, int]] = {}
    for p, a in enumerate(total, start=1):
        ordered_classes = sorted(
            orbits[a], key=lambda i: min(g.index(v) for v in classes[i])
        )
        for q, i in enumerate(ordered_classes, start=1):
            for r, v in enumerate(classes[i], start=1):
                labels[v] = (p, q, r)
    return labels


def verify_order_antisymmetry(g: SimplicialGraph) -> Report:
    """Check that dominated classes have no larger stars, and that equal
    star sizes force equality of related classes.  A failure here means an
    implementation bug, never an accepted outcome."""
    s = domination_structure(g)
    checks = []
    star_size = {v: len(g.star(v)) for v in g.vertices}
    for i, ci in enumerate(s.classes):
        for j, cj in enumerate(s.classes):
            if (i, j) not in s.class_order:
                continue
            below, above = ci[0], cj[0]
            checks.append(
                Check(
                    f"star-monotone [{below}] <= [{above}]",
                    star_size[below] <= star_size[above],
                )
            )
            if star_size[below] == star_size[above]:
                checks.append(
                    Check(f"equal-star-forces-equality [{below}] [{above}]", i == j)
                )
    if not checks:
        checks.append(Check("vacuous (no related classes)", True))
    return Report("order-antisymmetry", tuple(checks))
