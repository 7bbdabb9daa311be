"""Gruenberg-Kegel complexes on the primes dividing a group order.

A set of primes is a simplex when some element has order equal to their
product.  Direct powers ``G^n`` are handled through element orders alone: an
element of ``G^n`` has order the lcm of its ``n`` coordinates' orders, so a
squarefree target is reached iff its primes split into at most ``n`` faces
of the complex of ``G``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .complex import SimplicialComplex
from .errors import TooManyPrimes
from .graphs import SimpleGraph
from .group import FiniteGroup, bits
from .subgroups import prime_divisors

MAX_PRIMES = 20


@dataclass(frozen=True)
class GKComplex:
    primes: tuple[int, ...]
    complex: SimplicialComplex

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return [tuple(self.primes[i] for i in f) for f in self.complex.facets]

    def is_simplex(self) -> bool:
        return len(self.complex.facets) <= 1 and (
            not self.primes or len(self.complex.facets[0]) == len(self.primes)
        )

    def graph(self) -> SimpleGraph:
        return SimpleGraph.from_complex(self.complex)

    def to_json(self, cover_number: int | None = None) -> dict:
        out = {"primes": list(self.primes), "facets": [list(f) for f in self.facets]}
        if cover_number is not None:
            out["cover_number"] = cover_number
        return out


def _faces_from_orders(primes: Sequence[int], orders: set[int]) -> list[int]:
    """Masks over ``primes`` whose product is an element order."""
    faces = []
    for k in range(1, len(primes) + 1):
        for combo in combinations(range(len(primes)), k):
            if math.prod(primes[i] for i in combo) in orders:
                faces.append(sum(1 << i for i in combo))
    return faces


def _make(primes: Sequence[int], faces: list[int]) -> GKComplex:
    c = SimplicialComplex([str(p) for p in primes], [list(bits(m)) for m in faces], list(primes))
    return GKComplex(tuple(primes), c)


def gk_complex(g: FiniteGroup) -> GKComplex:
    primes = prime_divisors(g.order)
    if len(primes) > MAX_PRIMES:
        raise TooManyPrimes(f"{len(primes)} primes > {MAX_PRIMES}")
    return _make(primes, _faces_from_orders(primes, set(g.element_orders)))


def gk_graph(g: FiniteGroup) -> SimpleGraph:
    """Primes joined when some element has order ``p*q``, computed directly."""
    primes = prime_divisors(g.order)
    orders = set(g.element_orders)
    edges = [(i, j) for i, j in combinations(range(len(primes)), 2) if primes[i] * primes[j] in orders]
    return SimpleGraph([str(p) for p in primes], edges)


def is_simplex(c: GKComplex) -> bool:
    return c.is_simplex()


def _face_masks(c: GKComplex) -> list[int]:
    return [sum(1 << i for i in f) for f in c.complex.facets]


def cover_number(c: GKComplex) -> int:
    """Fewest faces whose union is every prime (exact branch and bound)."""
    n = len(c.primes)
    if n > MAX_PRIMES:
        raise TooManyPrimes(f"{n} primes > {MAX_PRIMES}")
    if n == 0:
        return 0
    universe = (1 << n) - 1
    facets = _face_masks(c)
    best = [len(facets)]

    def search(covered: int, used: int) -> None:
        if covered == universe:
            best[0] = min(best[0], used)
            return
        if used + 1 >= best[0]:
            return
        # lower bound: remaining primes over the largest facet
        rest = universe & ~covered
        widest = max((f & rest).bit_count() for f in facets)
        if used + -(-rest.bit_count() // widest) >= best[0]:
            return
        low = rest & -rest
        for f in sorted(facets, key=lambda f: -(f & rest).bit_count()):
            if f & low:
                search(covered | f, used + 1)

    search(0, 0)
    return best[0]


def gk_cover_number(g: FiniteGroup) -> int:
    return cover_number(gk_complex(g))


def gk_power_complex(g: FiniteGroup, n: int) -> GKComplex:
    """GK complex of the direct power ``G^n`` without building ``G^n``.

    A prime set is a simplex iff it is a union of at most ``n`` faces.
    """
    if n < 1:
        raise ValueError("n must be positive")
    base = gk_complex(g)
    facets = _face_masks(base)
    reach = {0}
    for _ in range(n):
        reach = reach | {r | f for r in reach for f in facets}
    faces = [m for m in reach if m]
    return _make(base.primes, faces)


def gk_power_from_orders(g: FiniteGroup, n: int) -> GKComplex:
    """Same complex via lcm arithmetic on the order spectrum (independent route)."""
    orders = set(g.element_orders)
    reach = {1}
    for _ in range(n):
        reach = {math.lcm(a, b) for a in reach for b in orders}
    return _make(prime_divisors(g.order), _faces_from_orders(prime_divisors(g.order), reach))
