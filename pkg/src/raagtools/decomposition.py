"""Join decompositions and the lateral transvection lattice.

When the graph has social vertices (adjacent to everything else), the
group splits as a direct product of a free abelian factor on the social
set S and the graph group of the remainder Delta, and Aut splits as the
free abelian lattice of lateral transvections (one per pair in S x Delta)
extended by GL(S) x Aut(A_Delta).  A diagonal sign matrix over Delta
centralizes the abelianized image of Aut(A_Delta) exactly when its signs
are constant on the "sign classes" of Delta: the transitive closure of
lying in one automorphism orbit of domination classes or being related by
domination.  Each centralizing assignment extends to an automorphism of
the whole automorphism group fixing the non-lateral part, and distinct
assignments differ by an inner automorphism only when they are opposite
everywhere, which certifies the 2^(m-1) lower bound computed here.

The sign-class functions accept either a JoinDecomposition or a bare
graph treated as Delta, since the combinatorics only involves Delta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Mapping, Union

from . import intmat
from .automorphisms import (
    Inversion,
    RaagAutomorphism,
    Transvection,
    abelianization_matrix,
    automorphisms_equal,
    automorphism_power,
    compose,
    conjugate_automorphism,
    describe_generator,
    enumerate_ls_generators,
    identity_automorphism,
    invert_automorphism,
    ls_to_automorphism,
)
from .domination import dominates, domination_structure
from .graphs import DEFAULT_MAX_VERTICES, SimplicialGraph, join
from .report import Check, Report


def social_vertices(g: SimplicialGraph) -> tuple[str, ...]:
    """Vertices adjacent to every other vertex, in canonical order."""
    n = len(g)
    return tuple(v for v in g.vertices if g.degree(v) == n - 1)


@dataclass(frozen=True)
class JoinDecomposition:
    """The canonical split of a graph into its social set and the rest."""

    graph: SimplicialGraph
    social: tuple[str, ...]
    delta: SimplicialGraph

    @property
    def k(self) -> int:
        return len(self.social)


def join_decomposition(g: SimplicialGraph) -> JoinDecomposition:
    social = social_vertices(g)
    delta = g.full_subgraph(v for v in g.vertices if v not in social)
    # re-join and compare against the input as vertex/edge sets
    s_graph = g.full_subgraph(social)
    rejoined = join([s_graph, delta])
    if set(rejoined.vertices) != set(g.vertices) or {
        frozenset(e) for e in rejoined.edges()
    } != {frozenset(e) for e in g.edges()}:
        raise AssertionError("join decomposition failed to reassemble the graph")
    return JoinDecomposition(graph=g, social=social, delta=delta)


@dataclass(frozen=True)
class LateralLattice:
    """Basis of the free abelian group of lateral transvections, grouped in
    blocks by social vertex."""

    decomposition: JoinDecomposition
    basis: tuple[tuple[str, str], ...]


def lateral_transvections(d: JoinDecomposition) -> LateralLattice:
    if d.k == 0:
        raise ValueError("no social vertices; the lateral lattice is undefined")
    if len(d.delta) == 0:
        raise ValueError("empty complement; the lateral lattice is undefined")
    basis = tuple((s, a) for s in d.social for a in d.delta.vertices)
    return LateralLattice(decomposition=d, basis=basis)


def lateral_automorphism(d: JoinDecomposition, s: str, a: str) -> RaagAutomorphism:
    """The transvection sending a to a*s on the full graph."""
    if s not in d.social:
        raise ValueError(f"{s!r} is not a social vertex")
    if a not in d.delta:
        raise ValueError(f"{a!r} is not a vertex of the complement")
    return ls_to_automorphism(d.graph, Transvection(s, a))


def central_inversion(d: JoinDecomposition) -> RaagAutomorphism:
    """The automorphism inverting every social generator and fixing the rest."""
    out = identity_automorphism(d.graph)
    for s in d.social:
        out = compose(out, ls_to_automorphism(d.graph, Inversion(s)))
    return out


def verify_lateral_lattice(d: JoinDecomposition) -> Report:
    """Pairwise commutation of the basis transvections plus integer linear
    independence of their abelianization matrices minus the identity."""
    lat = lateral_transvections(d)
    autos = {pair: lateral_automorphism(d, *pair) for pair in lat.basis}
    checks = []
    for p1, p2 in combinations(lat.basis, 2):
        f, h = autos[p1], autos[p2]
        ok = automorphisms_equal(compose(f, h), compose(h, f))
        checks.append(Check(f"commute tv{p1} tv{p2}", ok))
    n = len(d.graph)
    ident = intmat.identity(n)
    rows = []
    for pair in lat.basis:
        m = abelianization_matrix(autos[pair])
        rows.append(
            [m[i][j] - ident[i][j] for i in range(n) for j in range(n)]
        )
    rank = intmat.mat_rank(rows)
    checks.append(
        Check(
            f"lattice rank {len(lat.basis)}",
            rank == len(lat.basis),
            f"computed rank {rank}",
        )
    )
    return Report("lateral-lattice", tuple(checks))


def lateral_conjugation_relations(d: JoinDecomposition) -> Report:
    """The defining relations of the lattice, verified verbatim: conjugating
    one lateral transvection of a vertex by another of the same vertex
    fixes it."""
    lat = lateral_transvections(d)
    autos = {pair: lateral_automorphism(d, *pair) for pair in lat.basis}
    checks = []
    for s, t in product(d.social, repeat=2):
        if s == t:
            continue
        for a in d.delta.vertices:
            conj = conjugate_automorphism(autos[(t, a)], autos[(s, a)])
            checks.append(
                Check(
                    f"tv({t},{a})*tv({s},{a})*tv({t},{a})^-1 = tv({s},{a})",
                    automorphisms_equal(conj, autos[(s, a)]),
                )
            )
    if not checks:
        checks.append(Check("vacuous (single social vertex)", True))
    return Report("lateral-relations", tuple(checks))


# -- sign classes ------------------------------------------------------------------


@dataclass(frozen=True)
class SignClassPartition:
    """Blocks of Delta vertices forced to share a diagonal sign."""

    classes: tuple[tuple[str, ...], ...]

    @property
    def m(self) -> int:
        return len(self.classes)

    def class_index_of(self, v: str) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise ValueError(f"unknown vertex {v!r}")


DeltaLike = Union[JoinDecomposition, SimplicialGraph]


def _delta_of(d: DeltaLike) -> SimplicialGraph:
    return d.delta if isinstance(d, JoinDecomposition) else d


def sign_classes(
    d: DeltaLike, max_vertices: int = DEFAULT_MAX_VERTICES
) -> SignClassPartition:
    """Union-find closure over the complement's vertices: merge everything
    lying in one automorphism orbit of domination classes, and every pair
    related by domination.  Independent of any ordering choices."""
    delta = _delta_of(d)
    verts = delta.vertices
    parent = {v: v for v in verts}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u: str, v: str) -> None:
        ru, rv = find(u), find(v)
        if ru != rv:
            # keep the canonically smaller representative
            if delta.index(ru) > delta.index(rv):
                ru, rv = rv, ru
            parent[rv] = ru

    structure = domination_structure(delta, max_vertices)
    for orbit in structure.orbits:
        members = [v for i in orbit for v in structure.classes[i]]
        for v in members[1:]:
            union(members[0], v)
    for x in verts:
        for y in verts:
            if x != y and dominates(delta, x, y):
                union(x, y)

    blocks: dict[str, list[str]] = {}
    for v in verts:
        blocks.setdefault(find(v), []).append(v)
    ordered = sorted(blocks.values(), key=lambda b: delta.index(b[0]))
    return SignClassPartition(tuple(tuple(b) for b in ordered))


def centralizer_order(d: DeltaLike, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """Exact order 2^m of the diagonal centralizer, m the sign-class count."""
    delta = _delta_of(d)
    if len(delta) == 0:
        raise ValueError("empty complement; centralizer order undefined")
    return 2 ** sign_classes(delta, max_vertices).m


@lru_cache(maxsize=None)
def _abelianized_generator_matrices(
    delta: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> tuple[intmat.Matrix, ...]:
    mats = []
    for gen in enumerate_ls_generators(delta, max_vertices):
        mats.append(abelianization_matrix(ls_to_automorphism(delta, gen)))
    # deduplicate while preserving order (partial conjugations all abelianize
    # to the identity, for instance)
    seen = set()
    out = []
    for m in mats:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return tuple(out)


def check_sign_matrix_centralizes(
    d: DeltaLike,
    signs: Mapping[str, int],
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> bool:
    """Whether the diagonal matrix built from per-vertex signs commutes with
    the abelianization of every LS generator of Aut(A_Delta).  Those images
    generate the whole abelianized automorphism group, so commuting with all
    of them is equivalent to centralizing it."""
    delta = _delta_of(d)
    if len(delta) == 0:
        raise ValueError("empty complement; no sign matrices")
    entries = []
    for v in delta.vertices:
        sign = signs.get(v)
        if sign not in (1, -1):
            raise ValueError(f"sign for {v!r} must be +1 or -1, got {sign!r}")
        entries.append(sign)
    return all(
        intmat.commutes_with_diagonal(entries, m)
        for m in _abelianized_generator_matrices(delta, max_vertices)
    )


@dataclass(frozen=True)
class SignAction:
    """Generator-level action on Aut(A_Gamma) of a centralizing sign matrix:
    each lateral transvection maps to itself or its inverse by the sign of
    its complement vertex, and every generator of GL(S) x Aut(A_Delta) is
    fixed."""

    decomposition: JoinDecomposition
    lateral_signs: tuple[tuple[tuple[str, str], int], ...]

    def sign_of(self, s: str, a: str) -> int:
        for pair, sign in self.lateral_signs:
            if pair == (s, a):
                return sign
        raise ValueError(f"({s!r}, {a!r}) is not a lateral pair")

    def image_of_lateral(self, s: str, a: str) -> RaagAutomorphism:
        tau = lateral_automorphism(self.decomposition, s, a)
        return tau if self.sign_of(s, a) == 1 else invert_automorphism(tau)


def sign_automorphism(d: JoinDecomposition, signs: Mapping[str, int]) -> SignAction:
    """The action table of the extension along the centralizing signs;
    raises when the signs fail the centralizing check."""
    if not check_sign_matrix_centralizes(d, signs):
        raise ValueError("signs do not centralize the abelianized automorphisms")
    lat = lateral_transvections(d)
    return SignAction(
        decomposition=d,
        lateral_signs=tuple((pair, signs[pair[1]]) for pair in lat.basis),
    )


def out_aut_lower_bound_center(
    g: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> int:
    """Certified lower bound 2^(m-1) on the outer automorphism group of
    Aut(A_Gamma) for graphs with social vertices: sign actions are pairwise
    non-inner unless opposite everywhere."""
    d = join_decomposition(g)
    if d.k == 0:
        raise ValueError("no social vertices; the centre-based bound does not apply")
    if len(d.delta) == 0:
        raise ValueError("empty complement; the centre-based bound does not apply")
    return 2 ** (sign_classes(d, max_vertices).m - 1)


# -- verification harnesses ----------------------------------------------------------


def verify_split_normality(
    g: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Report:
    """Conjugating any lateral transvection by any LS generator lands back
    in the lateral lattice: the conjugate's abelianization determines
    candidate lattice coordinates, and the resulting product of lateral
    transvections is confirmed equal by normal forms."""
    d = join_decomposition(g)
    if d.k == 0 or len(d.delta) == 0:
        return Report(
            "split-normality",
            (Check("skipped (no lateral lattice)", True),),
        )
    lat = lateral_transvections(d)
    autos = {pair: lateral_automorphism(d, *pair) for pair in lat.basis}
    n = len(g)
    cells = {
        (g.index(s), g.index(a)): (s, a) for s, a in lat.basis
    }
    checks = []
    for gen in enumerate_ls_generators(g, max_vertices):
        lam = ls_to_automorphism(g, gen)
        for pair in lat.basis:
            conj = conjugate_automorphism(lam, autos[pair])
            m = abelianization_matrix(conj)
            coeffs: dict[tuple[str, str], int] = {}
            in_lattice = True
            for i in range(n):
                for j in range(n):
                    want = 1 if i == j else 0
                    if m[i][j] == want:
                        continue
                    cell = cells.get((i, j))
                    if cell is None:
                        in_lattice = False
                        break
                    coeffs[cell] = m[i][j]
                if not in_lattice:
                    break
            label = f"conj of tv{pair} by {describe_generator(gen)}"
            if not in_lattice:
                checks.append(
                    Check(label, False, "abelianization leaves the lattice")
                )
                continue
            candidate = identity_automorphism(g)
            for cell, c in sorted(coeffs.items()):
                candidate = compose(
                    candidate, automorphism_power(autos[cell], c)
                )
            checks.append(Check(label, automorphisms_equal(conj, candidate)))
    return Report("split-normality", tuple(checks))


def iota_noncentrality_check(
    g: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Report:
    """Conjugation by the central inversion sends every lateral transvection
    to its inverse, and never fixes one."""
    d = join_decomposition(g)
    if d.k == 0 or len(d.delta) == 0:
        return Report(
            "iota-noncentrality",
            (Check("vacuous (no lateral transvections)", True),),
        )
    iota = central_inversion(d)
    checks = []
    for pair in lateral_transvections(d).basis:
        tau = lateral_automorphism(d, *pair)
        conj = conjugate_automorphism(iota, tau)
        inverted = automorphisms_equal(conj, invert_automorphism(tau))
        moved = not automorphisms_equal(conj, tau)
        checks.append(Check(f"iota inverts tv{pair}", inverted and moved))
    return Report("iota-noncentrality", tuple(checks))


def sign_class_equivalence_report(
    delta: SimplicialGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Report:
    """Exhaustive agreement of the two routes to the centralizer: a sign
    assignment constant on domination classes passes the matrix commutation
    check exactly when it is constant on the sign classes."""
    structure = domination_structure(delta, max_vertices)
    partition = sign_classes(delta, max_vertices)
    checks = []
    for bits in product((1, -1), repeat=len(structure.classes)):
        signs = {}
        for cls, sign in zip(structure.classes, bits):
            for v in cls:
                signs[v] = sign
        expected = all(
            len({signs[v] for v in block}) == 1 for block in partition.classes
        )
        actual = check_sign_matrix_centralizes(delta, signs, max_vertices)
        desc = ",".join(
            f"{cls[0]}:{'+' if s == 1 else '-'}"
            for cls, s in zip(structure.classes, bits)
        )
        checks.append(
            Check(
                f"signs {desc}",
                actual == expected,
                f"matrix says {actual}, classes say {expected}",
            )
        )
    return Report("sign-class-equivalence", tuple(checks))
