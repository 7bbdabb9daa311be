"""Simplicial complexes defined on a finite group, and verdicts about them."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Sequence

from .complex import SimplicialComplex
from .errors import ArityUnsupported
from .group import FiniteGroup, bits, symmetric, to_mask
from .subgroups import (
    lattice,
    min_generators,
    sub_is_abelian,
    sub_is_cyclic,
    sub_is_nilpotent,
    sub_is_soluble,
    classify,
)

CLASS_TAGS = ("cyclic", "abelian", "nilpotent", "soluble")
FILTERS = ("commuting", "non_generating")


# ----------------------------------------------------------------- predicates


def independent_mask(g: FiniteGroup, mask: int) -> bool:
    for b in bits(mask):
        if g.span(mask ^ (1 << b)) >> b & 1:
            return False
    return True


def strongly_independent_mask(g: FiniteGroup, mask: int) -> bool:
    if not mask:
        return True
    return lattice(g).min_rank_above(g.span(mask)) >= mask.bit_count()


def is_independent(g: FiniteGroup, a: Iterable[int]) -> bool:
    """No element of ``a`` lies in the subgroup generated by the others.

    A set containing the identity is dependent, since the identity lies in
    the subgroup generated by the empty set.
    """
    return independent_mask(g, to_mask(a))


def is_strongly_independent(g: FiniteGroup, a: Iterable[int]) -> bool:
    """Every subgroup containing ``a`` needs at least ``|a|`` generators."""
    return strongly_independent_mask(g, to_mask(a))


def _complex_on(g: FiniteGroup, vertices: Sequence[int], pred: Callable[[int], bool]) -> SimplicialComplex:
    return SimplicialComplex.from_hereditary_predicate(
        list(vertices),
        lambda s: pred(to_mask(s)),
        labels=[g.labels[v] for v in vertices],
    )


def _nonidentity(g: FiniteGroup) -> range:
    return range(1, g.order)


def independence_complex(g: FiniteGroup) -> SimplicialComplex:
    return _complex_on(g, _nonidentity(g), lambda m: independent_mask(g, m))


def strong_independence_complex(g: FiniteGroup) -> SimplicialComplex:
    lattice(g)  # fail fast on the cap
    return _complex_on(g, _nonidentity(g), lambda m: strongly_independent_mask(g, m))


def filtered_independence_complex(g: FiniteGroup, filter: str) -> SimplicialComplex:
    """Independent sets that also commute pairwise, or that do not generate ``g``."""
    if filter == "commuting":
        t = g.table

        def pred(m: int) -> bool:
            els = list(bits(m))
            for i, a in enumerate(els):
                for b in els[i + 1:]:
                    if t[a, b] != t[b, a]:
                        return False
            return independent_mask(g, m)

    elif filter == "non_generating":
        full = g.full_mask

        def pred(m: int) -> bool:
            return g.span(m) != full and independent_mask(g, m)

    else:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    return _complex_on(g, _nonidentity(g), pred)


def _subgroup_complex(g: FiniteGroup, facet_masks: list[int]) -> SimplicialComplex:
    covered = 0
    for m in facet_masks:
        covered |= m
    verts = list(bits(covered))
    pos = {v: i for i, v in enumerate(verts)}
    facets = [[pos[x] for x in bits(m)] for m in facet_masks]
    return SimplicialComplex([g.labels[v] for v in verts], facets, verts)


def in_class(g: FiniteGroup, mask: int, tag: str) -> bool:
    if tag == "cyclic":
        return sub_is_cyclic(g, mask)
    if tag == "abelian":
        return sub_is_abelian(g, mask)
    if tag == "nilpotent":
        return sub_is_abelian(g, mask) or sub_is_nilpotent(g, mask, lattice(g))
    if tag == "soluble":
        return sub_is_soluble(g, mask)
    raise ValueError(f"unknown class {tag!r}; expected one of {CLASS_TAGS}")


def class_complex(g: FiniteGroup, tag: str) -> SimplicialComplex:
    """Sets generating a subgroup in the class; facets are the maximal class subgroups."""
    lat = lattice(g)
    members = [m for m in lat.masks if in_class(g, m, tag)]
    return _subgroup_complex(g, lat.maximal(members))


def non_generating_complex(g: FiniteGroup) -> SimplicialComplex:
    """Complements of generating sets; facets are the maximal proper subgroups."""
    lat = lattice(g)
    proper = [m for m in lat.masks if m != g.full_mask]
    return _subgroup_complex(g, lat.maximal(proper))


# ---------------------------------------------------------------- word complexes


@dataclass(frozen=True)
class WordSpec:
    """A word in ``arity`` variables: letters are (variable 1..k, exponent +-1)."""

    arity: int
    word: tuple[tuple[int, int], ...]
    name: str = "word"

    def __post_init__(self):
        if self.arity < 1 or not self.word:
            raise ValueError("word must be nonempty with positive arity")
        for var, exp in self.word:
            if not 1 <= var <= self.arity or exp not in (1, -1):
                raise ValueError(f"bad letter ({var}, {exp}) for arity {self.arity}")

    def evaluate(self, g: FiniteGroup, xs: Sequence[int]) -> int:
        t, inv = g.table, g.inverses
        y = 0
        for var, exp in self.word:
            x = xs[var - 1]
            y = int(t[y, x if exp == 1 else inv[x]])
        return y


BUILTIN_WORDS = {
    # x^-1 y^-1 x y
    "commutator": WordSpec(2, ((1, -1), (2, -1), (1, 1), (2, 1)), "commutator"),
    "triple_product": WordSpec(3, ((1, 1), (2, 1), (3, 1)), "triple_product"),
    # [[x,y],z] = [x,y]^-1 z^-1 [x,y] z with [x,y]^-1 = y^-1 x^-1 y x
    "double_commutator": WordSpec(
        3,
        ((2, -1), (1, -1), (2, 1), (1, 1), (3, -1), (1, -1), (2, -1), (1, 1), (2, 1), (3, 1)),
        "double_commutator",
    ),
}

MAX_WORD_ARITY = 3


def word_simplices(g: FiniteGroup, w: WordSpec) -> set[int]:
    """Masks of the ``k``-sets of distinct elements on which some ordering satisfies ``w``."""
    k = w.arity
    out = set()
    for combo in combinations(range(g.order), k):
        if any(w.evaluate(g, p) == 0 for p in permutations(combo)):
            out.add(to_mask(combo))
    return out


def word_complex(g: FiniteGroup, w: WordSpec | str) -> SimplicialComplex:
    """Complex generated by a word: exact at size k, extended up and down.

    A set of more than ``k`` elements is a simplex iff all its ``k``-subsets
    are; a smaller set is a simplex iff it extends by distinct elements to a
    ``k``-simplex.
    """
    if isinstance(w, str):
        w = BUILTIN_WORDS[w]
    k = w.arity
    if k > MAX_WORD_ARITY:
        raise ArityUnsupported(f"word arity {k} > {MAX_WORD_ARITY}")
    level = word_simplices(g, w)
    shadow: set[int] = set()
    for m in level:
        els = list(bits(m))
        for r in range(1, k):
            shadow.update(to_mask(c) for c in combinations(els, r))

    def pred(s: tuple[int, ...]) -> bool:
        if len(s) < k:
            return to_mask(s) in shadow
        return all(to_mask(c) in level for c in combinations(s, k))

    return SimplicialComplex.from_hereditary_predicate(
        list(range(g.order)), pred, labels=list(g.labels)
    )


# ------------------------------------------------------------------- verdicts


@dataclass(frozen=True)
class GenerationReport:
    is_pure: bool
    every_facet_generates: bool
    max_facets_generate: bool
    max_facet_size: int
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "pure": self.is_pure,
            "every_facet_generates": self.every_facet_generates,
            "max_facets_generate": self.max_facets_generate,
            "max_facet_size": self.max_facet_size,
            "witnesses": self.witnesses,
        }


def facet_masks(c: SimplicialComplex) -> list[int]:
    """Facets as element bitmasks, using the complex's element keys."""
    return [to_mask(c.keys[v] for v in f) for f in c.facets]


def generation_report(g: FiniteGroup, c: SimplicialComplex, max_witnesses: int = 3) -> GenerationReport:
    full = g.full_mask
    size = max((len(f) for f in c.facets), default=0)
    bad_any, bad_max = [], []
    for f, m in zip(c.facets, facet_masks(c)):
        if g.span(m) != full:
            labels = [c.labels[v] for v in f]
            bad_any.append(labels)
            if len(f) == size:
                bad_max.append(labels)
    witnesses = {}
    if bad_any:
        witnesses["every_facet_generates"] = bad_any[:max_witnesses]
    if bad_max:
        witnesses["max_facets_generate"] = bad_max[:max_witnesses]
    return GenerationReport(
        is_pure=c.is_pure(),
        every_facet_generates=not bad_any,
        max_facets_generate=not bad_max,
        max_facet_size=size,
        witnesses=witnesses,
    )


def independent_sets_by_size(g: FiniteGroup) -> Iterable[list[int]]:
    """Yield, for k = 1, 2, ..., the independent k-sets in lexicographic order."""
    level = [1 << x for x in range(1, g.order)]
    while level:
        yield level
        nxt = []
        for m in level:
            for x in range(m.bit_length(), g.order):
                m2 = m | (1 << x)
                if independent_mask(g, m2):
                    nxt.append(m2)
        level = nxt


@dataclass(frozen=True)
class CoincidenceVerdict:
    coincide: bool
    witness: tuple[int, ...] | None
    eppo: bool
    witness_labels: tuple[str, ...] | None = None

    def to_json(self) -> dict:
        return {
            "coincide": self.coincide,
            "witness": list(self.witness_labels) if self.witness_labels else [],
            "eppo": self.eppo,
        }


def coincidence_check(g: FiniteGroup) -> CoincidenceVerdict:
    """Do independence and strong independence agree on ``g``?

    Strongly independent sets are independent, so the complexes are equal iff
    every independent set is strongly independent.  Independent sets are
    scanned by size and then lexicographically; the first failure is returned.
    """
    lattice(g)
    eppo = classify(g).is_eppo
    for level in independent_sets_by_size(g):
        for m in level:
            if not strongly_independent_mask(g, m):
                w = tuple(bits(m))
                return CoincidenceVerdict(False, w, eppo, tuple(g.labels[x] for x in w))
    return CoincidenceVerdict(True, None, eppo)


@dataclass(frozen=True)
class WhistonResult:
    n: int
    max_size: int
    maximum_sets_generate: bool
    count_maximum: int

    @property
    def holds(self) -> bool:
        return self.max_size <= max(self.n - 1, 0) and self.maximum_sets_generate and (
            self.n < 2 or self.max_size == self.n - 1
        )


def whiston_check(n: int) -> WhistonResult:
    """Largest independent set in S_n, and whether every one of size n-1 generates."""
    g = symmetric(n)
    c = independence_complex(g)
    size = max((len(f) for f in c.facets), default=0)
    target = n - 1
    tops = [m for f, m in zip(c.facets, facet_masks(c)) if len(f) == target]
    return WhistonResult(
        n=n,
        max_size=size,
        maximum_sets_generate=all(g.span(m) == g.full_mask for m in tops),
        count_maximum=len(tops),
    )


def max_independent_size(g: FiniteGroup) -> int:
    return max((len(f) for f in independence_complex(g).facets), default=0)


def d(g: FiniteGroup) -> int:
    """Minimal number of generators of the whole group."""
    return min_generators(g, g.full_mask)
