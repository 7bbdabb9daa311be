"""Brute-force reference computations.

Nothing here uses the span memo, the lattice search or the compiled kernels:
closures are naive fixed-point iterations over Python sets and facets come
from testing every subset.  Only suitable for small groups (order <= 16 for
the subset oracles).
"""
from __future__ import annotations

from itertools import combinations

from .group import FiniteGroup


def naive_closure(g: FiniteGroup, gens) -> frozenset[int]:
    t = _rows(g)
    out = {0}
    gens = list(gens)
    changed = True
    while changed:
        changed = False
        for a in list(out):
            for b in gens:
                c = t[a][b]
                if c not in out:
                    out.add(c)
                    changed = True
    return frozenset(out)


def _rows(g: FiniteGroup) -> list[list[int]]:
    rows = g._cache.get("oracle_rows")
    if rows is None:
        rows = g._cache["oracle_rows"] = g.table.tolist()
    return rows


def naive_subgroups(g: FiniteGroup) -> set[frozenset[int]]:
    """Cyclic subgroups closed under pairwise joins until nothing new appears."""
    subs = {naive_closure(g, [x]) for x in range(g.order)}
    while True:
        joins = {naive_closure(g, a | b) for a in subs for b in subs}
        if joins <= subs:
            return subs
        subs |= joins


def naive_min_generators(g: FiniteGroup, h: frozenset[int]) -> int:
    if h == {0}:
        return 0
    elems = sorted(h - {0})
    for k in range(1, len(elems) + 1):
        for combo in combinations(elems, k):
            if naive_closure(g, combo) == h:
                return k
    raise AssertionError("unreachable")


def naive_independent(g: FiniteGroup, a) -> bool:
    a = list(a)
    return all(x not in naive_closure(g, [y for y in a if y != x]) for x in a)


class StrongOracle:
    """Strong independence straight from the definition over all subgroups."""

    def __init__(self, g: FiniteGroup):
        self.g = g
        self.subs = [(h, naive_min_generators(g, h)) for h in naive_subgroups(g)]

    def __call__(self, a) -> bool:
        a = set(a)
        return all(d >= len(a) for h, d in self.subs if a <= h)


def exhaustive_facets(vertices, pred) -> set[frozenset]:
    """Inclusion-maximal accepted subsets, by testing all 2^n subsets."""
    vertices = list(vertices)
    accepted = []
    for k in range(1, len(vertices) + 1):
        for combo in combinations(vertices, k):
            if pred(combo):
                accepted.append(frozenset(combo))
    return {s for s in accepted if not any(s < t for t in accepted)}


def oracle_facets(g: FiniteGroup, kind: str) -> set[frozenset[int]]:
    """Facets (as element-index sets) of the named complex on ``g``."""
    verts = range(1, g.order)
    t = g.table.tolist()
    full = frozenset(range(g.order))
    if kind == "independence":
        pred = lambda s: naive_independent(g, s)
    elif kind == "strong":
        strong = StrongOracle(g)
        pred = lambda s: 0 not in s and strong(s)
    elif kind == "commuting":
        pred = lambda s: naive_independent(g, s) and all(
            t[x][y] == t[y][x] for x, y in combinations(s, 2)
        )
    elif kind == "non_generating":
        pred = lambda s: naive_independent(g, s) and naive_closure(g, s) != full
    else:
        raise ValueError(kind)
    return exhaustive_facets(verts, pred)


def smith_by_minors(m: list[list[int]]) -> tuple[int, ...]:
    """Smith diagonal from determinantal divisors (gcd of k-by-k minors)."""
    from math import gcd

    import sympy

    rows, cols = len(m), len(m[0]) if m else 0
    ds = [1]
    for k in range(1, min(rows, cols) + 1):
        gk = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                det = sympy.Matrix([[m[i][j] for j in ci] for i in ri]).det()
                gk = gcd(gk, int(det))
        if gk == 0:
            break
        ds.append(gk)
    return tuple(ds[i] // ds[i - 1] for i in range(1, len(ds)))
