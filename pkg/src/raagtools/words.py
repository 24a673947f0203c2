"""Exact element arithmetic in graph groups.

A word is a tuple of ``(vertex, sign)`` letters, sign +1 or -1.  Two
generators commute exactly when their vertices are adjacent in the
defining graph.  ``reduce_word`` deletes every cancellable pair (a letter
and its inverse separated only by letters adjacent to it) until none
remain, which yields a geodesic representative.  ``normal_form`` then
picks the lexicographically least shuffle of that representative, taking
vertices in declaration order and +1 before -1 on equal vertices.  Equal
group elements have identical normal forms, so word equality is a tuple
comparison of normal forms.
"""

from __future__ import annotations

from .graphs import SimplicialGraph

Letter = tuple[str, int]
Word = tuple[Letter, ...]


def check_word(g: SimplicialGraph, w: Word) -> Word:
    """Validate letters against the graph; returns ``w`` unchanged."""
    for letter in w:
        if not (isinstance(letter, tuple) and len(letter) == 2):
            raise ValueError(f"malformed letter {letter!r}")
        v, sign = letter
        if v not in g:
            raise ValueError(f"unknown vertex {v!r} in word")
        if sign not in (1, -1):
            raise ValueError(f"invalid sign {sign!r} on letter {v!r}")
    return tuple(w)


def parse_word(g: SimplicialGraph, text: str) -> Word:
    """Parse whitespace-separated tokens ``name`` or ``name^-1``."""
    letters = []
    for tok in text.split():
        if tok.endswith("^-1"):
            name, sign = tok[:-3], -1
        else:
            name, sign = tok, 1
        if name not in g:
            raise ValueError(f"unknown generator {name!r} in word {text!r}")
        letters.append((name, sign))
    return tuple(letters)


def word_to_str(w: Word) -> str:
    return " ".join(v if sign == 1 else f"{v}^-1" for v, sign in w)


def reduce_word(g: SimplicialGraph, w: Word) -> Word:
    """Delete cancellable pairs until none remain.

    A pair x^e ... x^-e cancels when every intermediate letter's vertex is
    adjacent to x.  The result represents the same group element and has
    minimal length among all representatives.
    """
    adj = g.neighbor_map()
    letters = list(check_word(g, w))
    changed = True
    while changed:
        changed = False
        for i in range(len(letters)):
            x, e = letters[i]
            nbrs = adj[x]
            for j in range(i + 1, len(letters)):
                y, f = letters[j]
                if y == x:
                    if f == -e:
                        del letters[j]
                        del letters[i]
                        changed = True
                    break
                if y not in nbrs:
                    break
            if changed:
                break
    return tuple(letters)


def normal_form(g: SimplicialGraph, w: Word) -> Word:
    """Canonical representative: identical for all words equal in the group."""
    adj = g.neighbor_map()
    remaining = list(reduce_word(g, w))
    out: list[Letter] = []
    while remaining:
        best_key = None
        best_pos = 0
        for p, (x, e) in enumerate(remaining):
            movable = True
            for q in range(p):
                if remaining[q][0] not in adj[x]:
                    movable = False
                    break
            if not movable:
                continue
            key = (g.index(x), 0 if e == 1 else 1)
            if best_key is None or key < best_key:
                best_key = key
                best_pos = p
        out.append(remaining.pop(best_pos))
    return tuple(out)


def words_equal(g: SimplicialGraph, u: Word, w: Word) -> bool:
    return normal_form(g, u) == normal_form(g, w)


def invert_word(w: Word) -> Word:
    return tuple((v, -sign) for v, sign in reversed(w))


def concat(*words: Word) -> Word:
    out: list[Letter] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def conjugate(u: Word, w: Word) -> Word:
    """u * w * u^-1 as a raw representative (not reduced)."""
    return concat(u, w, invert_word(u))


def abelianize(g: SimplicialGraph, w: Word) -> tuple[int, ...]:
    """Exponent-sum vector indexed by the canonical vertex order."""
    sums = [0] * len(g)
    for v, sign in check_word(g, w):
        sums[g.index(v)] += sign
    return tuple(sums)
