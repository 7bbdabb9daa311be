"""Verification suites over the group catalog.

Each check yields one :class:`VerifyOutcome` per (check, group) pair.  A check
that raises is recorded as a failure rather than aborting the suite.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .catalog import CatalogEntry, build_entry, default_catalog
from .complex import SimplicialComplex
from .graphs import SimpleGraph, group_graph
from .group import FiniteGroup, parse_cycles, to_mask
from .group_complexes import (
    class_complex,
    coincidence_check,
    filtered_independence_complex,
    generation_report,
    independence_complex,
    independent_mask,
    non_generating_complex,
    strong_independence_complex,
    strongly_independent_mask,
    whiston_check,
    word_complex,
)
from .gk import gk_complex, gk_cover_number, gk_graph, gk_power_complex, gk_power_from_orders
from .homology import boundary_matrices, homology, smith_normal_form
from .oracles import oracle_facets
from .subgroups import classify, lattice, min_generators, subgroup_as_group

SUITES = ("core", "gk", "homology", "all")

# limits on which catalog groups each family of checks runs over
STRONG_MAX_ORDER = 64
ORACLE_MAX_ORDER = 16
WORD_MAX_ORDER = 32
HOMOLOGY_MAX_ORDER = 64
HOMOLOGY_MAX_SIMPLICES = 20_000

# named witnesses, in cycle notation on the natural permutation domain
NAMED_WITNESSES = {
    "S4": (4, ["(1,2)", "(2,3)", "(3,4)"]),
    "A5": (5, ["(1,2,3)", "(1,2,4)", "(1,2,5)"]),
    "C2wrC4": (8, ["(1,2)", "(3,4)", "(5,6)", "(7,8)"]),
    "C3wrC3": (9, ["(1,2,3)", "(4,5,6)", "(7,8,9)"]),
}

RP2_FACETS = [
    [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
    [1, 2, 4], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 4, 5],
]


@dataclass(frozen=True)
class VerifyOutcome:
    check: str
    group: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "group": self.group,
            "verdict": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


def _run(check: str, group: str, fn: Callable[[], tuple[bool, dict]]) -> VerifyOutcome:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # failures are outcomes
        ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    return VerifyOutcome(check, group, bool(ok), detail, time.perf_counter() - t0)


def element_set(g: FiniteGroup, cycles: Iterable[str], degree: int) -> list[int]:
    """Element indices of permutations written in cycle notation."""
    index = {lab: i for i, lab in enumerate(g.labels)}
    from .group import cycle_string

    return [index[cycle_string(parse_cycles(c, degree))] for c in cycles]


def _elements(c: SimplicialComplex) -> set[frozenset[int]]:
    return {frozenset(c.keys[v] for v in f) for f in c.facets}


# ------------------------------------------------------------- individual checks


def check_skeleton_power(g: FiniteGroup) -> tuple[bool, dict]:
    skel = SimpleGraph.from_complex(independence_complex(g))
    target = group_graph(g, "power").delete_vertex(0).complement()
    return skel == target, {"edges": skel.num_edges, "expected_edges": target.num_edges}


def check_skeleton_enhanced(g: FiniteGroup) -> tuple[bool, dict]:
    skel = SimpleGraph.from_complex(strong_independence_complex(g))
    target = group_graph(g, "enhanced_power").delete_vertex(0).complement()
    return skel == target, {"edges": skel.num_edges, "expected_edges": target.num_edges}


def check_eppo_equivalence(g: FiniteGroup) -> tuple[bool, dict]:
    power = group_graph(g, "power")
    enhanced = group_graph(g, "enhanced_power")
    commuting = group_graph(g, "commuting")
    eppo = all(len(set(_prime_factors(o))) <= 1 for o in g.element_orders)
    same = power == enhanced
    chain = power.issubgraph(enhanced) and enhanced.issubgraph(commuting)
    return same == eppo and chain, {"power_equals_enhanced": same, "eppo": eppo, "inclusion_chain": chain}


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def check_coincidence_eppo(g: FiniteGroup) -> tuple[bool, dict]:
    v = coincidence_check(g)
    detail = v.to_json()
    if v.coincide:
        return classify(g).is_eppo, detail
    m = to_mask(v.witness)
    valid = independent_mask(g, m) and not strongly_independent_mask(g, m)
    detail["witness_valid"] = valid
    return valid, detail


def check_coincidence_expected(g: FiniteGroup) -> tuple[bool, dict]:
    v = coincidence_check(g)
    return v.coincide, v.to_json()


def check_counterexample(g: FiniteGroup, name: str) -> tuple[bool, dict]:
    v = coincidence_check(g)
    m = to_mask(v.witness or ())
    detail = v.to_json()
    ok = not v.coincide and independent_mask(g, m) and not strongly_independent_mask(g, m)
    detail["min_generators"] = dg = min_generators(g, g.full_mask)
    if name in NAMED_WITNESSES:
        degree, cycles = NAMED_WITNESSES[name]
        named = to_mask(element_set(g, cycles, degree))
        named_ok = independent_mask(g, named) and not strongly_independent_mask(g, named)
        detail["named_witness"] = cycles
        detail["named_witness_size"] = len(cycles)
        detail["named_witness_valid"] = named_ok
        # the named set is independent yet larger than the generating number
        ok = ok and named_ok and len(cycles) > dg
    return ok, detail


def check_abelian_p(g: FiniteGroup) -> tuple[bool, dict]:
    indep = independence_complex(g)
    strong = strong_independence_complex(g)
    p = _prime_factors(g.order)[0]
    # number of invariant factors = log_p of the number of solutions of x^p = 1
    omega = sum(1 for o in g.element_orders if p % o == 0)
    rank = len(_prime_factors(omega))
    size = max((len(f) for f in indep.facets), default=0)
    ok = classify(g).is_abelian and indep == strong and size == rank
    return ok, {"equal": indep == strong, "max_independent": size, "invariant_factors": rank}


def check_oracle(g: FiniteGroup) -> tuple[bool, dict]:
    builders = {
        "independence": independence_complex,
        "strong": strong_independence_complex,
        "commuting": lambda h: filtered_independence_complex(h, "commuting"),
        "non_generating": lambda h: filtered_independence_complex(h, "non_generating"),
    }
    detail = {}
    for kind, build in builders.items():
        detail[kind] = _elements(build(g)) == oracle_facets(g, kind)
    return all(detail.values()), detail


def check_strong_in_plain(g: FiniteGroup) -> tuple[bool, dict]:
    strong = strong_independence_complex(g)
    ok = all(independent_mask(g, to_mask(f)) for f in _elements(strong))
    return ok, {"strong_facets": len(strong.facets)}


def check_class_and_word(g: FiniteGroup) -> tuple[bool, dict]:
    cyc = SimpleGraph.from_complex(class_complex(g, "cyclic"))
    abel = SimpleGraph.from_complex(class_complex(g, "abelian"))
    word = SimpleGraph.from_complex(word_complex(g, "commutator"))
    enhanced = group_graph(g, "enhanced_power")
    commuting = group_graph(g, "commuting")
    # edge sets: the word complex has no vertices at all on the trivial group
    detail = {
        "cyclic_class_is_enhanced": cyc.edge_labels() == enhanced.edge_labels(),
        "abelian_class_is_commuting": abel.edge_labels() == commuting.edge_labels(),
        "commutator_word_is_commuting": word.edge_labels() == commuting.edge_labels(),
    }
    return all(detail.values()), detail


def check_generation(g: FiniteGroup, c: SimplicialComplex, want: dict) -> tuple[bool, dict]:
    rep = generation_report(g, c)
    got = rep.to_json()
    return all(got[k] == v for k, v in want.items()), got


def check_subgroup_closed(g: FiniteGroup) -> tuple[bool, dict]:
    bad = []
    lat = lattice(g)
    for m in lat.masks:
        h = subgroup_as_group(g, m)
        if not coincidence_check(h).coincide:
            bad.append(g.format_set(m))
    return not bad, {"subgroups": len(lat), "failing": bad[:3]}


# ---------------------------------------------------------------------- suites


def _groups(catalog, include_slow: bool) -> Iterator[tuple[CatalogEntry, FiniteGroup | None, VerifyOutcome | None]]:
    for e in catalog:
        if e.reference or (e.slow and not include_slow):
            continue
        try:
            yield e, build_entry(e), None
        except Exception as exc:
            yield e, None, VerifyOutcome("build", e.name, False, {"error": f"{type(exc).__name__}: {exc}"})


def core_suite(catalog=None, include_slow: bool = False) -> Iterator[VerifyOutcome]:
    catalog = default_catalog() if catalog is None else catalog
    for e, g, built in _groups(catalog, include_slow):
        if g is None:
            yield built
            continue
        name = e.name
        whiston_only = name == "S5"
        if not whiston_only:
            if not e.slow:
                yield _run("skeleton_power", name, lambda: check_skeleton_power(g))
            yield _run("eppo_equivalence", name, lambda: check_eppo_equivalence(g))
            if "eppo_expected" in e.tags:
                yield _run("eppo_expected", name, lambda: (classify(g).is_eppo, {}))
        if e.slow and "counterexample" not in e.tags:
            continue
        if g.order <= STRONG_MAX_ORDER and not e.slow:
            yield _run("skeleton_enhanced", name, lambda: check_skeleton_enhanced(g))
            yield _run("strong_in_plain", name, lambda: check_strong_in_plain(g))
            yield _run("coincidence_implies_eppo", name, lambda: check_coincidence_eppo(g))
        if "coincidence_expected" in e.tags:
            yield _run("coincidence_expected", name, lambda: check_coincidence_expected(g))
        if "counterexample" in e.tags:
            yield _run("counterexample", name, lambda: check_counterexample(g, name))
        if "abelian_p" in e.tags:
            yield _run("abelian_p_theorem", name, lambda: check_abelian_p(g))
        if g.order <= ORACLE_MAX_ORDER:
            yield _run("oracle_equivalence", name, lambda: check_oracle(g))
        if g.order <= WORD_MAX_ORDER and not e.slow:
            yield _run("class_word_skeletons", name, lambda: check_class_and_word(g))
        if name in ("A4", "F21"):
            yield _run("coincidence_subgroup_closed", name, lambda: check_subgroup_closed(g))
    yield from _named_core(catalog, include_slow)


def _entry_group(catalog, name: str) -> FiniteGroup:
    for e in catalog:
        if e.name == name:
            return build_entry(e)
    raise KeyError(f"{name} not in catalog")


def _named_core(catalog, include_slow: bool) -> Iterator[VerifyOutcome]:
    for n in (2, 3, 4) + ((5,) if include_slow else ()):
        def whiston(n=n):
            r = whiston_check(n)
            return r.holds, {"max_size": r.max_size, "maximum_sets_generate": r.maximum_sets_generate,
                             "count_maximum": r.count_maximum}
        yield _run("whiston", f"S{n}", whiston)

    def cpq(name: str, sizes: dict[int, int]):
        def run():
            c = independence_complex(_entry_group(catalog, name))
            got = {}
            for f in c.facets:
                got[len(f)] = got.get(len(f), 0) + 1
            return got == sizes and not c.is_pure(), {"facet_sizes": got}
        return run

    # generators are singleton facets; an element of order p with one of order q form an edge
    yield _run("cpq_nonpure", "C6", cpq("C6", {1: 2, 2: 2}))
    yield _run("cpq_nonpure", "C15", cpq("C15", {1: 8, 2: 8}))
    for e in catalog:
        if e.reference or e.slow or e.spec is None or e.spec.family != "cyclic":
            continue
        if len(set(_prime_factors(e.spec.params["n"]))) == 1:
            yield _run("prime_power_cyclic_dim0", e.name,
                       lambda e=e: (independence_complex(build_entry(e)).dimension == 0, {}))

    gen_cases = [
        ("C2^3", {"pure": True, "every_facet_generates": True}),
        ("S4", {"max_facet_size": 3, "max_facets_generate": True}),
        ("C6", {"pure": False, "every_facet_generates": True}),
    ]
    for name, want in gen_cases:
        def run(name=name, want=want):
            g = _entry_group(catalog, name)
            return check_generation(g, independence_complex(g), want)
        yield _run("generation_report", name, run)

    def c2wr():
        g = _entry_group(catalog, "C2wrC4")
        gr = group_graph(_entry_group(catalog, "C2^3"), "generating")
        return min_generators(g, g.full_mask) == 2 and gr.num_edges == 0, {
            "d(C2wrC4)": min_generators(g, g.full_mask), "generating_graph_edges_C2^3": gr.num_edges}
    yield _run("two_generated", "C2wrC4", c2wr)


def gk_suite(catalog=None, include_slow: bool = False) -> Iterator[VerifyOutcome]:
    catalog = default_catalog() if catalog is None else catalog
    for e, g, built in _groups(catalog, include_slow):
        if g is None:
            yield built
            continue
        name = e.name

        def run(g=g):
            c = gk_complex(g)
            d = gk_cover_number(g)
            detail = {"primes": list(c.primes), "facets": [list(f) for f in c.facets], "cover_number": d}
            orders = set(g.element_orders)
            closed = all(
                _prod(sub) in orders
                for f in c.facets for k in range(1, len(f) + 1) for sub in combinations(f, k)
            )
            skeleton = c.graph() == gk_graph(g)
            criterion = {}
            for n in range(1, 5):
                pc = gk_power_complex(g, n)
                same = pc.complex == gk_power_from_orders(g, n).complex
                criterion[n] = pc.is_simplex() == (n >= d) and same
            first = gk_power_complex(g, 1).complex == c.complex
            nil = (not _nilpotent(g)) or c.is_simplex()
            detail.update(downward_closed=closed, skeleton_is_gk_graph=skeleton,
                          power_criterion=criterion, power_one=first, nilpotent_simplex=nil)
            return closed and skeleton and all(criterion.values()) and first and nil, detail

        yield _run("gk_complex", name, run)
    for name, want in (("C6", 1), ("S4", 2), ("A5", 3)):
        yield _run("gk_cover_number", name,
                   lambda name=name, want=want: (gk_cover_number(_entry_group(catalog, name)) == want,
                                                 {"expected": want,
                                                  "got": gk_cover_number(_entry_group(catalog, name))}))


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def _nilpotent(g: FiniteGroup) -> bool:
    return classify(g).is_nilpotent


def _homology_complexes(g: FiniteGroup) -> dict[str, SimplicialComplex]:
    out = {
        "independence": independence_complex(g),
        "strong": strong_independence_complex(g),
        "indep:commuting": filtered_independence_complex(g, "commuting"),
        "indep:nongen": filtered_independence_complex(g, "non_generating"),
        "nongen": non_generating_complex(g),
    }
    for tag in ("cyclic", "abelian", "nilpotent", "soluble"):
        out[f"class:{tag}"] = class_complex(g, tag)
    return out


def check_complex_homology(c: SimplicialComplex) -> tuple[bool, dict]:
    f = c.f_vector()
    chi = sum((-1) ** i * v for i, v in enumerate(f))
    detail: dict = {"f_vector": list(f), "euler": chi}
    if sum(f) <= HOMOLOGY_MAX_SIMPLICES:
        mats = boundary_matrices(c, reduced=False)
        dd = all((mats[k] @ mats[k + 1]).is_zero() for k in range(1, len(mats) - 1))
        groups = homology(c, reduced=False, use_cone=False)
        detail["route"] = "smith"
        detail["boundary_squared_zero"] = dd
    else:
        dd = True
        groups = homology(c, reduced=False)
        detail["route"] = "cone" if c.cone_apex() is not None else "smith"
    betti = [h.betti for h in groups]
    detail["betti"] = betti
    alt = sum((-1) ** h.dim * h.betti for h in groups)
    return dd and alt == chi, detail


def homology_suite(catalog=None, include_slow: bool = False) -> Iterator[VerifyOutcome]:
    catalog = default_catalog() if catalog is None else catalog
    for e, g, built in _groups(catalog, include_slow):
        if g is None:
            yield built
            continue
        if g.order > HOMOLOGY_MAX_ORDER or e.slow:
            continue
        for kind, c in _homology_complexes(g).items():
            yield _run("euler_and_boundary", f"{e.name}/{kind}", lambda c=c: check_complex_homology(c))

    def betti_of(c, want, reduced=True):
        def run():
            got = [h.betti for h in homology(c, reduced)]
            return got == list(want), {"betti": got, "expected": list(want)}
        return run

    v4 = independence_complex(_entry_group(catalog, "V4"))
    c6 = independence_complex(_entry_group(catalog, "C6"))
    yield _run("reduced_betti", "V4/independence", betti_of(v4, (0, 1)))
    yield _run("reduced_betti", "C6/independence", betti_of(c6, (2, 0)))

    def rp2():
        c = SimplicialComplex("abcdef", RP2_FACETS)
        hs = homology(c, reduced=True)
        got = {h.dim: (h.betti, list(h.torsion)) for h in hs}
        ok = got == {0: (0, []), 1: (0, [2]), 2: (0, [])}
        return ok, {"groups": [h.to_json() for h in hs]}
    yield _run("rp2_torsion", "RP2", rp2)

    for size in range(1, 7):
        def full(size=size):
            c = SimplicialComplex([str(i) for i in range(size)], [list(range(size))])
            hs = homology(c, reduced=True, use_cone=False)
            return all(h.betti == 0 and not h.torsion for h in hs), {"betti": [h.betti for h in hs]}
        yield _run("full_simplex_trivial", f"simplex{size}", full)

    yield _run("snf_example", "[[2,4],[6,8]]",
               lambda: (smith_normal_form([[2, 4], [6, 8]]) == ((2, 4), 2), {}))


def run_suite(name: str, catalog=None, include_slow: bool = False) -> list[VerifyOutcome]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
    catalog = default_catalog() if catalog is None else catalog
    suites = {"core": core_suite, "gk": gk_suite, "homology": homology_suite}
    names = ["core", "gk", "homology"] if name == "all" else [name]
    out: list[VerifyOutcome] = []
    for s in names:
        out.extend(suites[s](catalog, include_slow))
    return out
