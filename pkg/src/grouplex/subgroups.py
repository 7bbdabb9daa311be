"""Subgroups, the subgroup lattice, generation numbers and structure flags."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import sympy

from .errors import LatticeCapExceeded
from .group import FiniteGroup, bits, to_mask

LATTICE_CAP = 512


@dataclass(frozen=True, order=True)
class Subgroup:
    """Element set of a subgroup, stored as a bitmask over the parent's indices."""

    mask: int
    parent_order: int

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return self.order

    def issubgroup(self, other: "Subgroup") -> bool:
        return self.mask & other.mask == self.mask


def _sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return mask.bit_count(), tuple(bits(mask))


def subgroup_closure(g: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    seed = list(seed)
    for x in seed:
        if not 0 <= x < g.order:
            raise IndexError(f"element index {x} out of range for order {g.order}")
    return Subgroup(g.span(to_mask(seed)), g.order)


class Lattice:
    """All subgroups of a group with their minimal generating numbers.

    Subgroups are found breadth-first: level ``k`` holds the subgroups
    generated by exactly ``k`` elements and no fewer, obtained by joining a
    level ``k-1`` subgroup with one cyclic subgroup.  Every subgroup is a join
    of cyclic subgroups, so the search reaches a fixed point containing the
    whole lattice, and the level of a subgroup is its generating number.
    """

    def __init__(self, g: FiniteGroup, within: int | None = None, stop_at: int | None = None):
        self.group = g
        top = g.full_mask if within is None else within
        # one generator per cyclic subgroup inside ``top``
        cyclic_gens: dict[int, int] = {}
        for x in bits(top):
            cyclic_gens.setdefault(g.join(1, x), x)
        reps = sorted(cyclic_gens.values())
        self.rank: dict[int, int] = {1: 0}
        frontier = [1]
        level = 0
        while frontier and (stop_at is None or stop_at not in self.rank):
            level += 1
            nxt = []
            for sub in frontier:
                for x in reps:
                    if sub >> x & 1:
                        continue
                    h = g.join(sub, x)
                    if h not in self.rank:
                        self.rank[h] = level
                        nxt.append(h)
            frontier = nxt
        self.masks: list[int] = sorted(self.rank, key=_sort_key)
        self._min_above: dict[int, int] | None = None

    def __len__(self) -> int:
        return len(self.masks)

    def subgroups(self) -> list[Subgroup]:
        return [Subgroup(m, self.group.order) for m in self.masks]

    def min_generators(self, mask: int) -> int:
        return self.rank[mask]

    def min_rank_above(self, mask: int) -> int:
        """Smallest generating number among lattice members containing ``mask``."""
        if self._min_above is None:
            # masks are sorted by size, so supersets come later
            best: dict[int, int] = {}
            ms = self.masks
            for i in range(len(ms) - 1, -1, -1):
                m = ms[i]
                r = self.rank[m]
                for j in range(i + 1, len(ms)):
                    if ms[j] & m == m and best[ms[j]] < r:
                        r = best[ms[j]]
                best[m] = r
            self._min_above = best
        hit = self._min_above.get(mask)
        if hit is not None:
            return hit
        return min(r for m, r in self.rank.items() if m & mask == mask)

    def maximal(self, masks: Iterable[int]) -> list[int]:
        """Inclusion-maximal members of a collection of subgroup masks."""
        ms = sorted(set(masks), key=_sort_key, reverse=True)
        out: list[int] = []
        for m in ms:
            if not any(o & m == m for o in out):
                out.append(m)
        return sorted(out, key=_sort_key)


def lattice(g: FiniteGroup, cap: int = LATTICE_CAP) -> Lattice:
    """The (cached) subgroup lattice of ``g``."""
    if g.order > cap:
        raise LatticeCapExceeded(
            f"subgroup lattice of {g.name} (order {g.order}) exceeds lattice cap {cap}"
        )
    lat = g._cache.get("lattice")
    if lat is None:
        lat = g._cache["lattice"] = Lattice(g)
    return lat


def all_subgroups(g: FiniteGroup, cap: int = LATTICE_CAP) -> list[Subgroup]:
    return lattice(g, cap).subgroups()


def min_generators(g: FiniteGroup, h: Subgroup | int) -> int:
    """Smallest size of a generating set of ``h``; 0 for the trivial subgroup."""
    mask = h.mask if isinstance(h, Subgroup) else h
    lat = g._cache.get("lattice")
    if lat is not None and mask in lat.rank:
        return lat.rank[mask]
    memo = g._cache.setdefault("dgen", {})
    if mask not in memo:
        memo[mask] = Lattice(g, within=mask, stop_at=mask).rank[mask]
    return memo[mask]


def order_spectrum(g: FiniteGroup) -> list[int]:
    """Sorted multiset of element orders."""
    return sorted(g.element_orders)


def order_counts(g: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(g.element_orders).items()))


# ------------------------------------------------------------ structure flags


def prime_divisors(n: int) -> list[int]:
    return sorted(sympy.primefactors(n))


def is_prime_power(n: int) -> bool:
    return n == 1 or len(sympy.primefactors(n)) == 1


@dataclass(frozen=True)
class StructureFlags:
    is_cyclic: bool
    is_abelian: bool
    is_nilpotent: bool
    is_soluble: bool
    is_eppo: bool
    prime_divisors: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "cyclic": self.is_cyclic,
            "abelian": self.is_abelian,
            "nilpotent": self.is_nilpotent,
            "soluble": self.is_soluble,
            "eppo": self.is_eppo,
            "primes": list(self.prime_divisors),
        }


def sub_is_cyclic(g: FiniteGroup, mask: int) -> bool:
    n = mask.bit_count()
    return any(g.element_orders[x] == n for x in bits(mask))


def sub_is_abelian(g: FiniteGroup, mask: int) -> bool:
    gens = g.generators_of(g.span(mask))
    t = g.table
    return all(t[a, b] == t[b, a] for i, a in enumerate(gens) for b in gens[i + 1:])


def sub_is_eppo(g: FiniteGroup, mask: int) -> bool:
    return all(is_prime_power(g.element_orders[x]) for x in bits(mask))


def commutator_subgroup(g: FiniteGroup, mask: int) -> int:
    t, inv = g.table, g.inverses
    elems = list(bits(mask))
    comms = 0
    for x in elems:
        for y in elems:
            comms |= 1 << int(t[t[inv[x], inv[y]], t[x, y]])
    return g.closure_mask(bits(comms))


def sub_is_soluble(g: FiniteGroup, mask: int) -> bool:
    """Derived series reaches the trivial subgroup."""
    while mask != 1:
        nxt = commutator_subgroup(g, mask)
        if nxt == mask:
            return False
        mask = nxt
    return True


def sub_is_nilpotent(g: FiniteGroup, mask: int, lat: Lattice) -> bool:
    """Unique Sylow p-subgroup for every prime p dividing the order."""
    n = mask.bit_count()
    for p in sympy.primefactors(n):
        pk = p ** sympy.multiplicity(p, n)
        count = sum(1 for m in lat.masks if m.bit_count() == pk and m & mask == m)
        if count != 1:
            return False
    return True


def classify(g: FiniteGroup, cap: int = LATTICE_CAP) -> StructureFlags:
    cached = g._cache.get("flags")
    if cached is not None:
        return cached
    full = g.full_mask
    abelian = bool((g.table == g.table.T).all())
    flags = StructureFlags(
        is_cyclic=sub_is_cyclic(g, full),
        is_abelian=abelian,
        is_nilpotent=abelian or sub_is_nilpotent(g, full, lattice(g, cap)),
        is_soluble=sub_is_soluble(g, full),
        is_eppo=sub_is_eppo(g, full),
        prime_divisors=tuple(prime_divisors(g.order)),
    )
    g._cache["flags"] = flags
    return flags


def subgroup_as_group(g: FiniteGroup, mask: int, name: str | None = None) -> FiniteGroup:
    """The subgroup ``mask`` as a group in its own right (identity stays index 0)."""
    elems = list(bits(mask))
    pos = {x: i for i, x in enumerate(elems)}
    t = g.table
    table = [[pos[int(t[a, b])] for b in elems] for a in elems]
    return FiniteGroup(table, [g.labels[x] for x in elems], name=name, validate=False)
