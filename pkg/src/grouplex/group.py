"""Finite groups as Cayley tables over element indices ``0..n-1``.

The identity is always index 0.  Element sets are Python ints used as
bitsets: bit ``i`` is set when element ``i`` is a member.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    DegreeMismatch,
    GroupError,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    OrderCapExceeded,
)

ORDER_CAP = 10_000
# all triples are checked up to this order; Light's generator test above it
EXHAUSTIVE_CHECK_ORDER = 200


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << x
    return mask


class FiniteGroup:
    """A validated finite group given by its multiplication table.

    ``table[x, y]`` is the index of ``x*y``.  Construction checks the group
    axioms (exhaustively up to order 200) and relabels so that the identity
    has index 0.
    """

    def __init__(
        self,
        table: Any,
        labels: Sequence[str] | None = None,
        name: str | None = None,
        validate: bool = True,
    ):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise NotClosed("Cayley table must be a nonempty square array")
        n = t.shape[0]
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = list(labels)
        if len(labels) != n:
            raise GroupError(f"expected {n} labels, got {len(labels)}")
        if validate:
            if t.min() < 0 or t.max() >= n:
                raise NotClosed("table entries must be element indices 0..n-1")
            t, labels = _move_identity_first(t, labels)
        self.order: int = n
        self.table: np.ndarray = t.astype(np.int32)
        self.table.setflags(write=False)
        self.labels: tuple[str, ...] = tuple(labels)
        self.name: str = name or f"group of order {n}"
        self._rows = kernels.prepare(self.table)
        if validate:
            _check_associative(self)
        self.inverses: tuple[int, ...] = _inverses(self.table)
        self.element_orders: tuple[int, ...] = tuple(kernels.element_orders(self._rows))
        self.full_mask: int = (1 << n) - 1
        # span memo: generator-set mask -> subgroup mask; subgroup mask -> generators
        self._span: dict[int, int] = {0: 1}
        self._gens: dict[int, tuple[int, ...]] = {1: ()}
        self._cache: dict[str, Any] = {}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return self.inverses[x]

    def power(self, x: int, k: int) -> int:
        k %= self.element_orders[x]
        y = 0
        for _ in range(k):
            y = int(self.table[y, x])
        return y

    def commute(self, x: int, y: int) -> bool:
        return self.table[x, y] == self.table[y, x]

    def closure_mask(self, gens: Iterable[int]) -> int:
        """Subgroup generated by ``gens`` as a bitmask (uncached)."""
        return kernels.closure(self._rows, list(gens))

    def span(self, mask: int) -> int:
        """Memoized subgroup generated by the element set ``mask``.

        Built by adding the largest element to the span of the rest, so every
        prefix is cached and repeated queries during facet searches are cheap.
        """
        hit = self._span.get(mask)
        if hit is not None:
            return hit
        top = 1 << (mask.bit_length() - 1)
        rest = self.span(mask ^ top)
        result = rest if rest & top else self.join(rest, top.bit_length() - 1)
        self._span[mask] = result
        return result

    def join(self, sub: int, x: int) -> int:
        """Subgroup generated by the subgroup ``sub`` together with ``x``."""
        if sub >> x & 1:
            return sub
        key = sub | (1 << x)
        hit = self._span.get(key)
        if hit is not None:
            return hit
        gens = self._gens[sub] + (x,)
        result = self.closure_mask(gens)
        self._gens.setdefault(result, gens)
        self._span[key] = result
        return result

    def generators_of(self, sub: int) -> tuple[int, ...]:
        """Some generating tuple of a subgroup already produced by :meth:`span`."""
        if sub not in self._gens:
            self.span(sub)
        return self._gens[sub]

    def format_set(self, mask_or_elems: int | Iterable[int]) -> list[str]:
        elems = bits(mask_or_elems) if isinstance(mask_or_elems, int) else mask_or_elems
        return [self.labels[x] for x in elems]


def _move_identity_first(t: np.ndarray, labels: list[str]) -> tuple[np.ndarray, list[str]]:
    n = t.shape[0]
    ar = np.arange(n)
    ids = [e for e in range(n) if (t[e] == ar).all() and (t[:, e] == ar).all()]
    if not ids:
        raise NoIdentity("no two-sided identity element")
    e = ids[0]
    if e == 0:
        return t, labels
    perm = ar.copy()
    perm[0], perm[e] = e, 0  # new index i holds old element perm[i]
    inv = np.argsort(perm)
    new = inv[t[np.ix_(perm, perm)]]
    labels = [labels[i] for i in perm]
    return new, labels


def _check_associative(g: FiniteGroup) -> None:
    n = g.order
    bad = kernels.first_nonassociative(g._rows) if n <= EXHAUSTIVE_CHECK_ORDER else _light_test(g)
    if bad is not None:
        raise NotAssociative("(%d*%d)*%d != %d*(%d*%d)" % (bad + bad))


def _light_test(g: FiniteGroup) -> tuple[int, int, int] | None:
    """Light's associativity test: check ``(xb)y = x(by)`` for generators ``b`` only.

    The elements ``b`` passing the check contain the identity and are closed
    under multiplication, so it suffices that right multiplication by the
    chosen ``b`` reaches every element from the identity.
    """
    n, t = g.order, g.table
    gens, reached = [], 1
    while reached != (1 << n) - 1:
        gens.append((~reached & (reached + 1)).bit_length() - 1)  # lowest unreached
        reached = kernels.closure(g._rows, gens)
    chunk = max(1, (1 << 22) // n)
    for b in gens:
        tb = t[b]
        for lo in range(0, n, chunk):
            xs = np.arange(lo, min(n, lo + chunk))
            diff = np.argwhere(t[t[xs, b]] != t[xs][:, tb])
            if len(diff):
                x, y = diff[0]
                return int(xs[x]), b, int(y)
    return None


def _inverses(t: np.ndarray) -> tuple[int, ...]:
    n = t.shape[0]
    out = []
    for x in range(n):
        ys = np.nonzero(t[x] == 0)[0]
        if len(ys) != 1 or t[ys[0], x] != 0:
            raise NoInverse(f"element {x} has no two-sided inverse")
        out.append(int(ys[0]))
    return tuple(out)


# ---------------------------------------------------------------- permutations


def perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """``p`` then ``q`` (left-to-right action)."""
    return tuple(q[i] for i in p)


def cycle_string(p: Sequence[int]) -> str:
    """Cycle notation on points 1..n; the identity is ``()``."""
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) or "()"


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Inverse of :func:`cycle_string`, e.g. ``"(1,2)(3,4)"``."""
    img = list(range(degree))
    for chunk in text.replace(" ", "").split(")"):
        chunk = chunk.lstrip("(")
        if not chunk:
            continue
        pts = [int(s) - 1 for s in chunk.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def perm_group(
    degree: int,
    generators: Sequence[Sequence[int]],
    name: str | None = None,
    order_cap: int = ORDER_CAP,
) -> FiniteGroup:
    """Closure of permutation generators given as 0-based image tuples."""
    gens = []
    for g in generators:
        g = tuple(int(v) for v in g)
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise DegreeMismatch(f"{g!r} is not a permutation of degree {degree}")
        gens.append(g)
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = perm_compose(p, g)
                if q not in index:
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
                    if len(elems) > order_cap:
                        raise OrderCapExceeded(
                            f"permutation group exceeds order cap {order_cap}"
                        )
        frontier = nxt
    # canonical element order: identity first, then lexicographic image tuples
    elems = [ident] + sorted(elems[1:])
    index = {p: i for i, p in enumerate(elems)}
    arr = np.array(elems, dtype=np.int64)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        composed = arr[:, arr[i]]  # row j: elems[i] then elems[j]
        table[i, :] = [index[tuple(r)] for r in composed.tolist()]
    return FiniteGroup(table, [cycle_string(p) for p in elems], name=name)


# ------------------------------------------------------------ named families


def cyclic(n: int) -> FiniteGroup:
    ar = np.arange(n)
    labels = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, labels[:n], name=f"C{n}")


def abelian(factors: Sequence[int]) -> FiniteGroup:
    g = cyclic(factors[0])
    for f in factors[1:]:
        g = direct_product(g, cyclic(f))
    tuples = _abelian_tuples(factors)
    return FiniteGroup(
        g.table, labels=["(" + ",".join(map(str, t)) + ")" for t in tuples],
        name="x".join(f"C{f}" for f in factors), validate=False,
    )


def _abelian_tuples(factors: Sequence[int]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for f in factors:
        out = [t + (k,) for t in out for k in range(f)]
    return out


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n: elements r^k s^f."""
    elems = [(k, f) for f in (0, 1) for k in range(n)]
    index = {e: i for i, e in enumerate(elems)}
    m = len(elems)
    table = np.empty((m, m), dtype=np.int64)
    for i, (k1, f1) in enumerate(elems):
        for j, (k2, f2) in enumerate(elems):
            table[i, j] = index[((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)]
    labels = []
    for k, f in elems:
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        labels.append((r + ("s" if f else "")) or "e")
    return FiniteGroup(table, labels, name=f"D{n}")


def symmetric(n: int, order_cap: int = ORDER_CAP) -> FiniteGroup:
    if n <= 1:
        return perm_group(max(n, 1), [], name=f"S{n}", order_cap=order_cap)
    gens = [tuple(list(range(1, n)) + [0]), (1, 0) + tuple(range(2, n))]
    return perm_group(n, gens, name=f"S{n}", order_cap=order_cap)


def alternating(n: int, order_cap: int = ORDER_CAP) -> FiniteGroup:
    if n < 3:
        return perm_group(max(n, 1), [], name=f"A{n}", order_cap=order_cap)
    # 3-cycles (1,2,k) generate A_n
    gens = []
    for k in range(2, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(tuple(img))
    return perm_group(n, gens, name=f"A{n}", order_cap=order_cap)


def wreath_cyclic(m: int, n: int, order_cap: int = ORDER_CAP) -> FiniteGroup:
    """C_m wr C_n on m*n points: n blocks of size m, cycled by the top group.

    Generators: an m-cycle inside the first block and the block n-cycle.
    """
    deg = m * n
    base = list(range(deg))
    for j in range(m):
        base[j] = (j + 1) % m
    top = [((i // m + 1) % n) * m + i % m for i in range(deg)]
    return perm_group(deg, [tuple(base), tuple(top)], name=f"C{m}wrC{n}", order_cap=order_cap)


def direct_product(g: FiniteGroup, h: FiniteGroup, order_cap: int = ORDER_CAP) -> FiniteGroup:
    """Componentwise product; element (i, j) has index ``i*|h| + j``."""
    n1, n2 = g.order, h.order
    if n1 * n2 > order_cap:
        raise OrderCapExceeded(f"|G x H| = {n1 * n2} exceeds order cap {order_cap}")
    t1 = g.table.astype(np.int64)
    t2 = h.table.astype(np.int64)
    table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    return FiniteGroup(table, labels, name=f"{g.name}x{h.name}", validate=False)


# ---------------------------------------------------------------- group specs


@dataclass(frozen=True)
class GroupSpec:
    """Declarative description of a group, mirroring the JSON ``family`` records."""

    family: str
    params: dict = field(default_factory=dict, compare=False, hash=False)

    FAMILIES = (
        "cyclic", "dihedral", "symmetric", "alternating", "abelian",
        "perm", "table", "product", "wreath_cyclic",
    )

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        if not isinstance(data, dict) or "family" not in data:
            raise GroupError("group spec must be an object with a 'family' key")
        fam = data["family"]
        if fam not in cls.FAMILIES:
            raise GroupError(f"unknown group family {fam!r}")
        params = {k: v for k, v in data.items() if k != "family"}
        spec = cls(fam, params)
        spec._check()
        return spec

    def to_json(self) -> dict:
        return {"family": self.family, **self.params}

    def _positive(self, key: str) -> int:
        v = self.params.get(key)
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise GroupError(f"{self.family}: '{key}' must be a positive integer")
        return v

    def _check(self) -> None:
        fam = self.family
        if fam in ("cyclic", "dihedral", "symmetric", "alternating"):
            self._positive("n")
        elif fam == "abelian":
            fs = self.params.get("factors")
            if not fs or not all(isinstance(f, int) and f >= 1 for f in fs):
                raise GroupError("abelian: 'factors' must be a nonempty list of positive integers")
        elif fam == "wreath_cyclic":
            self._positive("m")
            self._positive("n")
        elif fam == "perm":
            self._positive("degree")
            if not isinstance(self.params.get("generators"), list):
                raise GroupError("perm: 'generators' must be a list of image lists")
        elif fam == "table":
            if not isinstance(self.params.get("table"), list):
                raise GroupError("table: 'table' must be a list of rows")
        elif fam == "product":
            for side in ("left", "right"):
                GroupSpec.from_json(self.params.get(side))


def build_group(spec: GroupSpec | dict, order_cap: int = ORDER_CAP, name: str | None = None) -> FiniteGroup:
    """Construct and validate the group described by ``spec``."""
    if isinstance(spec, dict):
        spec = GroupSpec.from_json(spec)
    p = spec.params
    fam = spec.family
    if fam == "cyclic":
        _cap(p["n"], order_cap)
        g = cyclic(p["n"])
    elif fam == "dihedral":
        _cap(2 * p["n"], order_cap)
        g = dihedral(p["n"])
    elif fam == "symmetric":
        _cap(math.factorial(p["n"]), order_cap)
        g = symmetric(p["n"], order_cap)
    elif fam == "alternating":
        _cap(max(1, math.factorial(p["n"]) // 2), order_cap)
        g = alternating(p["n"], order_cap)
    elif fam == "abelian":
        _cap(math.prod(p["factors"]), order_cap)
        g = abelian(p["factors"])
    elif fam == "wreath_cyclic":
        _cap(p["m"] ** p["n"] * p["n"], order_cap)
        g = wreath_cyclic(p["m"], p["n"], order_cap)
    elif fam == "perm":
        deg = p["degree"]
        gens = []
        for img in p["generators"]:
            if len(img) != deg:
                raise DegreeMismatch(f"generator {img} does not have degree {deg}")
            gens.append(tuple(int(v) - 1 for v in img))
        g = perm_group(deg, gens, order_cap=order_cap)
    elif fam == "table":
        rows = p["table"]
        _cap(len(rows), order_cap)
        if any(len(r) != len(rows) for r in rows):
            raise NotClosed("table must be square")
        g = FiniteGroup(rows, labels=p.get("labels"))
    elif fam == "product":
        left = build_group(p["left"], order_cap)
        right = build_group(p["right"], order_cap)
        g = direct_product(left, right, order_cap)
    else:  # pragma: no cover - rejected by GroupSpec
        raise GroupError(fam)
    if name is not None:
        g.name = name
    return g


def _cap(order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapExceeded(f"group order {order} exceeds order cap {cap}")
