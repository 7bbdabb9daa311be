import pytest

from grouplex.catalog import build_entry, default_catalog
from grouplex.complex import SimplicialComplex
from grouplex.errors import TooManyPrimes
from grouplex.gk import (
    GKComplex,
    cover_number,
    gk_complex,
    gk_cover_number,
    gk_graph,
    gk_power_complex,
    gk_power_from_orders,
    is_simplex,
)
from grouplex.subgroups import classify

FAST = [e for e in default_catalog() if not e.slow and not e.reference]


def test_gk_examples(grp):
    assert gk_complex(grp("C6")).facets == [(2, 3)]
    a5 = gk_complex(grp("A5"))
    assert a5.facets == [(2,), (3,), (5,)]
    assert is_simplex(gk_complex(grp("C12")))
    assert is_simplex(gk_complex(grp("C2")))
    assert is_simplex(gk_complex(grp("C6"))) and not is_simplex(a5)


def test_cover_numbers(grp):
    assert gk_cover_number(grp("C6")) == 1
    assert gk_cover_number(grp("S4")) == 2
    assert gk_cover_number(grp("A5")) == 3
    assert gk_cover_number(grp("C1")) == 0


def test_power_complex_examples(grp):
    assert is_simplex(gk_power_complex(grp("S4"), 2))
    assert gk_power_complex(grp("S4"), 2).facets == [(2, 3)]
    assert not is_simplex(gk_power_complex(grp("A5"), 2))
    assert is_simplex(gk_power_complex(grp("A5"), 3))
    with pytest.raises(ValueError):
        gk_power_complex(grp("A5"), 0)


def test_too_many_primes():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73]
    c = GKComplex(tuple(primes), SimplicialComplex([str(p) for p in primes], [[i] for i in range(21)], primes))
    with pytest.raises(TooManyPrimes):
        cover_number(c)


def test_cover_number_prefers_fewest():
    # greedy on the widest face takes 3; the optimum is 2
    c = GKComplex((2, 3, 5, 7, 11, 13), SimplicialComplex(list("abcdef"), [[1, 2, 3, 4], [0, 1, 2], [3, 4, 5]]))
    assert cover_number(c) == 2


@pytest.mark.parametrize("entry", FAST, ids=lambda e: e.name)
def test_gk_invariants_on_catalog(entry):
    g = build_entry(entry)
    c = gk_complex(g)
    if classify(g).is_nilpotent:
        assert is_simplex(c)
    assert c.graph() == gk_graph(g)
    d = cover_number(c)
    for n in range(1, 5):
        pc = gk_power_complex(g, n)
        assert pc.complex == gk_power_from_orders(g, n).complex
        assert is_simplex(pc) == (n >= d)
