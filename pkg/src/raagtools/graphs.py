"""Finite simplicial graphs and exact automorphism-group enumeration.

A graph here is the universal input for the whole package: vertices are
named tokens, edges are unordered pairs of distinct vertices, and the
declaration order of the vertices is the canonical total order used for
every deterministic tie-break downstream (word normal forms, orbit
labelling, report output).

Automorphism enumeration refines an initial colouring by degree and
neighbour-colour multiset until stable, then backtracks over colour-
compatible images.  That is enough to finish in milliseconds on the
desk-scale graphs this package targets (default bound 64 vertices).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VERTEX_NAME = re.compile(r"[A-Za-z0-9_]+\Z")

DEFAULT_MAX_VERTICES = 64


class GraphParseError(ValueError):
    """Malformed graph file; the message names the offending line."""


class SimplicialGraph:
    """Immutable finite simple graph with named vertices.

    Vertices keep their declaration order.  No self-loops; adjacency is
    symmetric; names are unique and match ``[A-Za-z0-9_]+``.
    """

    __slots__ = ("vertices", "_index", "_adj", "_adj_names", "_edge_set", "_hash")

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
    ) -> None:
        verts = tuple(vertices)
        index: dict[str, int] = {}
        for v in verts:
            if not isinstance(v, str) or not VERTEX_NAME.match(v):
                raise ValueError(f"invalid vertex name {v!r}")
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj: list[set[int]] = [set() for _ in verts]
        for u, w in edges:
            if u not in index:
                raise ValueError(f"unknown vertex {u!r} in edge ({u!r}, {w!r})")
            if w not in index:
                raise ValueError(f"unknown vertex {w!r} in edge ({u!r}, {w!r})")
            if u == w:
                raise ValueError(f"self-loop at {u!r}")
            adj[index[u]].add(index[w])
            adj[index[w]].add(index[u])
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(
            self,
            "_adj_names",
            {v: frozenset(verts[j] for j in adj[i]) for i, v in enumerate(verts)},
        )
        edge_set = frozenset(
            frozenset((i, j)) for i, nbrs in enumerate(adj) for j in nbrs
        )
        object.__setattr__(self, "_edge_set", edge_set)
        object.__setattr__(self, "_hash", hash((verts, edge_set)))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("SimplicialGraph is immutable")

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __contains__(self, v: str) -> bool:
        return v in self._index

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self._adj[self.index(v)])

    def adjacent(self, u: str, v: str) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def neighbor_map(self) -> dict[str, frozenset[str]]:
        """Vertex name -> frozenset of neighbour names (read-only use)."""
        return self._adj_names

    def link(self, v: str) -> frozenset[str]:
        """All neighbours of ``v``, excluding ``v`` itself."""
        self.index(v)
        return self._adj_names[v]

    def star(self, v: str) -> frozenset[str]:
        """The link of ``v`` together with ``v``."""
        return self.link(v) | {v}

    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as (u, w) with u before w canonically, sorted canonically."""
        pairs = sorted(tuple(sorted(e)) for e in self._edge_set)
        return tuple((self.vertices[i], self.vertices[j]) for i, j in pairs)

    def edge_count(self) -> int:
        return len(self._edge_set)

    # -- derived graphs ---------------------------------------------------

    def full_subgraph(self, subset: Iterable[str]) -> "SimplicialGraph":
        """Induced subgraph on ``subset``; vertex order is inherited."""
        chosen = {self.index(v) for v in subset}
        keep = [i for i in range(len(self.vertices)) if i in chosen]
        names = tuple(self.vertices[i] for i in keep)
        edges = [
            (self.vertices[i], self.vertices[j])
            for i in keep
            for j in self._adj[i]
            if j in chosen and i < j
        ]
        return SimplicialGraph(names, edges)

    def connected_components(self) -> tuple[tuple[str, ...], ...]:
        """Vertex blocks of the components, each canonically ordered,
        blocks ordered by smallest vertex index."""
        return self._components_of(range(len(self.vertices)))

    def star_cut_components(self, c: str) -> tuple[tuple[str, ...], ...]:
        """Components of the induced subgraph on V minus star(c)."""
        removed = self._adj[self.index(c)] | {self.index(c)}
        remaining = [i for i in range(len(self.vertices)) if i not in removed]
        return self._components_of(remaining)

    def _components_of(self, indices: Iterable[int]) -> tuple[tuple[str, ...], ...]:
        allowed = set(indices)
        seen: set[int] = set()
        blocks: list[tuple[str, ...]] = []
        for i in sorted(allowed):
            if i in seen:
                continue
            stack = [i]
            comp = []
            seen.add(i)
            while stack:
                cur = stack.pop()
                comp.append(cur)
                for j in self._adj[cur]:
                    if j in allowed and j not in seen:
                        seen.add(j)
                        stack.append(j)
            blocks.append(tuple(self.vertices[k] for k in sorted(comp)))
        return tuple(blocks)

    # -- equality ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialGraph({list(self.vertices)!r}, {len(self._edge_set)} edges)"


# -- file format ------------------------------------------------------------


def parse_graph(text: str) -> SimplicialGraph:
    """Parse the graph file format.

    One directive per line: ``v <name>`` declares a vertex, ``e <a> <b>``
    an undirected edge between previously declared vertices; ``#`` starts a
    comment and blank lines are ignored.  Declaration order of ``v`` lines
    is the canonical vertex order.
    """
    vertices: list[str] = []
    declared: set[str] = set()
    edges: list[tuple[str, str]] = []
    seen_edges: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            name = parts[1]
            if not VERTEX_NAME.match(name):
                raise GraphParseError(f"line {lineno}: invalid vertex name {name!r}")
            if name in declared:
                raise GraphParseError(f"line {lineno}: duplicate vertex {name!r}")
            declared.add(name)
            vertices.append(name)
        elif parts[0] == "e" and len(parts) == 3:
            a, b = parts[1], parts[2]
            for end in (a, b):
                if end not in declared:
                    raise GraphParseError(f"line {lineno}: unknown endpoint {end!r}")
            if a == b:
                raise GraphParseError(f"line {lineno}: self-loop at {a!r}")
            key = frozenset((a, b))
            if key in seen_edges:
                raise GraphParseError(f"line {lineno}: duplicate edge {a!r} {b!r}")
            seen_edges.add(key)
            edges.append((a, b))
        else:
            raise GraphParseError(f"line {lineno}: unrecognized directive {line!r}")
    return SimplicialGraph(vertices, edges)


def graph_to_text(g: SimplicialGraph) -> str:
    """Serialize to the file format; round-trips through parse_graph."""
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {u} {w}" for u, w in g.edges()]
    return "".join(line + "\n" for line in lines)


# -- join ---------------------------------------------------------------------


def join(graphs: Sequence[SimplicialGraph]) -> SimplicialGraph:
    """Disjoint union plus every edge between vertices of distinct inputs.

    Vertex names must be pairwise disjoint across the inputs; the vertex
    order is the concatenation of the input orders.
    """
    names: list[str] = []
    seen: set[str] = set()
    for g in graphs:
        for v in g.vertices:
            if v in seen:
                raise ValueError(f"vertex name collision in join: {v!r}")
            seen.add(v)
            names.append(v)
    edges: list[tuple[str, str]] = []
    for g in graphs:
        edges.extend(g.edges())
    for i, g in enumerate(graphs):
        for h in graphs[i + 1 :]:
            edges.extend((u, w) for u in g.vertices for w in h.vertices)
    return SimplicialGraph(names, edges)


# -- automorphisms ------------------------------------------------------------


@dataclass(frozen=True)
class GraphPermutation:
    """A graph automorphism as a bijection on vertex indices."""

    images: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.images[i]

    def is_identity(self) -> bool:
        return all(w == i for i, w in enumerate(self.images))

    def inverse(self) -> "GraphPermutation":
        inv = [0] * len(self.images)
        for i, w in enumerate(self.images):
            inv[w] = i
        return GraphPermutation(tuple(inv))

    def compose(self, other: "GraphPermutation") -> "GraphPermutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return GraphPermutation(tuple(self.images[w] for w in other.images))

    def name_map(self, g: SimplicialGraph) -> dict[str, str]:
        return {g.vertices[i]: g.vertices[w] for i, w in enumerate(self.images)}


def _refined_colors(g: SimplicialGraph) -> list[int]:
    n = len(g.vertices)
    adj = g._adj
    colors = _normalize([len(adj[i]) for i in range(n)])
    while True:
        sig = [
            (colors[i], tuple(sorted(colors[j] for j in adj[i]))) for i in range(n)
        ]
        new = _normalize(sig)
        if new == colors:
            return colors
        colors = new


def _normalize(values: list) -> list[int]:
    ranks = {v: r for r, v in enumerate(sorted(set(values)))}
    return [ranks[v] for v in values]


def graph_automorphisms(
    g: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[GraphPermutation]:
    """The full automorphism group, in lexicographic order of image tuples.

    Raises ValueError when the graph exceeds ``max_vertices``.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise ValueError(
            f"graph has {n} vertices; automorphism search bound is {max_vertices}"
        )
    if n == 0:
        return [GraphPermutation(())]
    adj = g._adj
    colors = _refined_colors(g)
    perms: list[GraphPermutation] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            perms.append(GraphPermutation(tuple(image)))
            return
        cv = colors[v]
        for w in range(n):
            if used[w] or colors[w] != cv:
                continue
            ok = True
            for u in range(v):
                if (image[u] in adj[w]) != (u in adj[v]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    assert any(p.is_identity() for p in perms)
    return perms


def is_asymmetric(g: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    """True exactly when the identity is the only graph automorphism."""
    return len(graph_automorphisms(g, max_vertices)) == 1
