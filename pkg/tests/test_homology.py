
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from grouplex.complex import SimplicialComplex
from grouplex.group_complexes import independence_complex
from grouplex.homology import (
    betti_numbers,
    boundary_matrices,
    boundary_matrix,
    euler_characteristic,
    homology,
    homology_json,
    smith_normal_form,
)
from grouplex.oracles import smith_by_minors
from grouplex.verify import RP2_FACETS


def cx(n, facets):
    return SimplicialComplex([str(i) for i in range(n)], facets)


def test_edge_boundary():
    m = boundary_matrix([(0,), (1,)], [(0, 1)])
    assert m.to_dense() == [[-1], [1]]


def test_triangle_boundary():
    c = cx(3, [[0, 1, 2]])
    d2 = boundary_matrices(c)[2]
    assert d2.to_dense() == [[1], [-1], [1]]  # rows (0,1), (0,2), (1,2)


def test_snf_examples():
    assert smith_normal_form([[2, 4], [6, 8]]) == ((2, 4), 2)
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == ((1, 1, 1), 3)
    assert smith_normal_form([[0, 0], [0, 0]]) == ((), 0)
    assert smith_by_minors([[2, 4], [6, 8]]) == (2, 4)


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_snf_against_oracles(m):
    diag, rank = smith_normal_form(m)
    assert rank == sympy.Matrix(m).rank()
    assert diag == smith_by_minors(m)
    ref = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
    assert diag == tuple(abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i] != 0)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))


@settings(max_examples=40, deadline=None)
@given(small_matrices, st.randoms(use_true_random=False))
def test_snf_permutation_invariant(m, rnd):
    rows = m[:]
    rnd.shuffle(rows)
    cols = list(range(len(m[0])))
    rnd.shuffle(cols)
    shuffled = [[r[j] for j in cols] for r in rows]
    assert smith_normal_form(shuffled) == smith_normal_form(m)


def test_reduced_homology_examples(grp):
    assert betti_numbers(homology(cx(3, [[0, 1], [1, 2], [0, 2]]))) == (0, 1)
    assert betti_numbers(homology(independence_complex(grp("V4")))) == (0, 1)
    assert betti_numbers(homology(independence_complex(grp("C6")))) == (2, 0)
    assert betti_numbers(homology(independence_complex(grp("C6")), reduced=False)) == (3, 0)


def test_rp2_torsion():
    h = homology(cx(6, RP2_FACETS))
    assert betti_numbers(h) == (0, 0, 0)
    assert [x.torsion for x in h] == [(), (2,), ()]


@pytest.mark.parametrize("n", range(1, 7))
def test_full_simplex_acyclic(n):
    c = cx(n, [list(range(n))])
    for use_cone in (True, False):
        assert all(x.betti == 0 and not x.torsion for x in homology(c, use_cone=use_cone))


def test_empty_complex_convention():
    e = cx(0, [])
    assert homology(e) == homology(e, reduced=True)
    assert [(x.dim, x.betti) for x in homology(e)] == [(-1, 1)]
    assert homology(e, reduced=False) == []
    assert "note" in homology_json(e)


facet_lists = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4), max_size=7))
)


@settings(max_examples=80, deadline=None)
@given(facet_lists)
def test_boundary_squares_to_zero_and_euler(data):
    n, fams = data
    c = cx(n, fams)
    for reduced in (False, True):
        mats = boundary_matrices(c, reduced)
        for a, b in zip(mats, mats[1:]):
            assert (a @ b).is_zero()
    h = homology(c, reduced=False, use_cone=False)
    assert sum((-1) ** x.dim * x.betti for x in h) == euler_characteristic(c)
    # the cone shortcut agrees with the matrices
    assert homology(c, use_cone=True) == homology(c, use_cone=False)


@settings(max_examples=30, deadline=None)
@given(facet_lists, st.randoms(use_true_random=False))
def test_homology_invariant_under_relabelling(data, rnd):
    n, fams = data
    perm = list(range(n))
    rnd.shuffle(perm)
    a = homology(cx(n, fams), use_cone=False)
    b = homology(cx(n, [[perm[v] for v in f] for f in fams]), use_cone=False)
    assert a == b
