"""Facet-based simplicial complexes.

A complex is stored by its facets (inclusion-maximal simplices) over vertex
indices ``0..V-1``; every other query is derived from them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, PredicateNotHereditary
from .group import bits, to_mask

Simplex = tuple[int, ...]

# f-vectors come from inclusion-exclusion over facet intersections; faces are
# enumerated directly only when the intersections blow up and the total is small
_ENUMERATION_BUDGET = 1 << 21
_INTERSECTION_BUDGET = 1 << 12


def _maximal(sets: Iterable[int]) -> list[int]:
    ms = sorted(set(sets), key=lambda m: -m.bit_count())
    out: list[int] = []
    for m in ms:
        if not any(o & m == m for o in out):
            out.append(m)
    return out


def _canonical(masks: Iterable[int]) -> tuple[Simplex, ...]:
    return tuple(sorted(tuple(bits(m)) for m in masks))


@dataclass(frozen=True)
class ComplexStats:
    dimension: int
    is_pure: bool
    f_vector: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector))


class SimplicialComplex:
    """Immutable simplicial complex given by an antichain of facets.

    ``labels`` name the vertices; ``keys`` optionally carry the underlying
    objects (group element indices, primes) in the same order.
    """

    def __init__(
        self,
        labels: Sequence[str],
        facets: Iterable[Iterable[int]],
        keys: Sequence[Hashable] | None = None,
        antichain: bool = False,
    ):
        self.labels: tuple[str, ...] = tuple(str(l) for l in labels)
        n = len(self.labels)
        self.keys: tuple = tuple(keys) if keys is not None else tuple(range(n))
        if len(self.keys) != n:
            raise ValueError("keys and labels differ in length")
        masks = []
        for f in facets:
            f = list(f)
            for v in f:
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"vertex index {v} not in 0..{n - 1}")
            if f:
                masks.append(to_mask(f))
        covered = 0
        for m in masks:
            covered |= m
        masks.extend(1 << v for v in range(n) if not covered >> v & 1)
        if not antichain:
            masks = _maximal(masks)
        self.facets: tuple[Simplex, ...] = _canonical(masks)
        self._masks = tuple(to_mask(f) for f in self.facets)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_facets(cls, labels, candidates, keys=None) -> "SimplicialComplex":
        return cls(labels, candidates, keys)

    @classmethod
    def from_hereditary_predicate(
        cls,
        vertices: Sequence[Hashable],
        pred: Callable[[tuple], bool],
        labels: Sequence[str] | None = None,
        check: bool = False,
    ) -> "SimplicialComplex":
        """Facets of the complex of all vertex sets accepted by ``pred``.

        ``pred`` receives a tuple of vertices in the given order and must be
        hereditary.  Vertices whose singleton is rejected are dropped.  With
        ``check=True`` every facet's codimension-one faces are re-tested.
        """
        if labels is None:
            labels = [str(v) for v in vertices]
        keep = [i for i, v in enumerate(vertices) if pred((v,))]
        verts = [vertices[i] for i in keep]
        labs = [labels[i] for i in keep]
        found = hereditary_facets(len(verts), lambda s: pred(tuple(verts[i] for i in s)))
        if check:
            for f in found:
                for sub in combinations(f, len(f) - 1):
                    if sub and not pred(tuple(verts[i] for i in sub)):
                        raise PredicateNotHereditary(
                            f"{[labs[i] for i in f]} accepted but face {[labs[i] for i in sub]} rejected"
                        )
        return cls(labs, found, verts, antichain=True)

    # -- queries --------------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def contains(self, simplex: Iterable[int]) -> bool:
        m = to_mask(simplex)
        return any(f & m == m for f in self._masks)

    __contains__ = contains

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.labels == other.labels and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.labels, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.num_vertices} vertices, {len(self.facets)} facets, dim {self.dimension})"

    def simplices_of_size(self, k: int) -> list[Simplex]:
        """All simplices with ``k`` vertices, sorted lexicographically."""
        if k <= 0:
            return [()] if k == 0 else []
        out: set[Simplex] = set()
        for f in self.facets:
            if len(f) >= k:
                out.update(combinations(f, k))
        return sorted(out)

    def all_simplices(self) -> Iterator[Simplex]:
        """Nonempty simplices ordered by (size, lexicographic)."""
        for k in range(1, self.dimension + 2):
            yield from self.simplices_of_size(k)

    def f_vector(self) -> tuple[int, ...]:
        top = self.dimension + 1
        if top <= 0:
            return ()
        coeff = self._intersection_coefficients()
        if coeff is None:
            return tuple(len(self.simplices_of_size(k)) for k in range(1, top + 1))
        return tuple(
            sum(c * math.comb(m.bit_count(), k) for m, c in coeff.items() if c)
            for k in range(1, top + 1)
        )

    def _intersection_coefficients(self) -> dict[int, int] | None:
        """Inclusion-exclusion weights of facet intersections.

        Gives up (returns None) when the intersections outgrow the budget and
        plain face enumeration is affordable instead.
        """
        can_enumerate = sum(1 << len(f) for f in self.facets) <= _ENUMERATION_BUDGET
        limit = _INTERSECTION_BUDGET if can_enumerate else None
        coeff: dict[int, int] = {}
        for m in self._masks:
            update = {m: 1}
            for inter, c in coeff.items():
                j = inter & m
                update[j] = update.get(j, 0) - c
            for key, c in update.items():
                coeff[key] = coeff.get(key, 0) + c
            if limit is not None and len(coeff) > limit:
                return None
        return coeff

    def stats(self) -> ComplexStats:
        return ComplexStats(self.dimension, self.is_pure(), self.f_vector())

    def k_skeleton(self, k: int) -> "SimplicialComplex":
        if k < 0:
            raise ValueError("k must be nonnegative")
        cand: list[Iterable[int]] = []
        for f in self.facets:
            if len(f) <= k + 1:
                cand.append(f)
            else:
                cand.extend(combinations(f, k + 1))
        return SimplicialComplex(self.labels, cand, self.keys)

    def edges(self) -> list[tuple[int, int]]:
        return self.simplices_of_size(2)

    def cone_apex(self) -> int | None:
        """A vertex lying in every facet, if any."""
        if not self._masks:
            return None
        common = self._masks[0]
        for m in self._masks[1:]:
            common &= m
        return (common & -common).bit_length() - 1 if common else None

    def to_json(self) -> dict[str, Any]:
        st = self.stats()
        return {
            "vertices": list(self.labels),
            "facets": [list(f) for f in self.facets],
            "dimension": st.dimension,
            "pure": st.is_pure,
            "f_vector": list(st.f_vector),
        }


def stats(c: SimplicialComplex) -> ComplexStats:
    return c.stats()


def k_skeleton(c: SimplicialComplex, k: int) -> SimplicialComplex:
    return c.k_skeleton(k)


def equals(c1: SimplicialComplex, c2: SimplicialComplex) -> bool:
    return c1 == c2


def hereditary_facets(n: int, pred: Callable[[Simplex], bool]) -> list[Simplex]:
    """Maximal accepted subsets of ``range(n)`` for a hereditary ``pred``.

    Canonical backtracking: a node ``R`` is extended only by candidates larger
    than the vertex just added (``P``), while ``X`` keeps the other vertices
    that individually extend ``R``.  ``R`` is a facet iff both are empty.  When
    ``R | P`` is itself accepted the whole branch collapses to that one set.
    Every vertex in ``range(n)`` is assumed to be accepted on its own.
    """
    facets: list[Simplex] = []
    if n == 0:
        return facets

    def visit(r: Simplex, p: list[int], x: list[int]) -> None:
        if not p:
            if not x:
                facets.append(r)
            return
        if len(p) > 1:
            whole = tuple(sorted(r + tuple(p)))
            if pred(whole):
                if not any(pred(tuple(sorted(whole + (v,)))) for v in x):
                    facets.append(whole)
                return
        x = list(x)
        for i, v in enumerate(p):
            r2 = tuple(sorted(r + (v,)))
            p2 = [u for u in p[i + 1:] if pred(tuple(sorted(r2 + (u,))))]
            x2 = [u for u in x if pred(tuple(sorted(r2 + (u,))))]
            visit(r2, p2, x2)
            x.append(v)

    visit((), list(range(n)), [])
    return sorted(facets)
