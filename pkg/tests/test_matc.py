import random

import pytest
from hypothesis import given, settings, strategies as st

from bimat import randgen as rg
from bimat.base import Base, I, MorphismTypeError, O, Prod, Sum
from bimat.instances import BoolCat, NatDiscrete, VecSkel, dim_of
from bimat.matc import (
    Cell1, Cell2, MatC, boxplus1, codiagonal, diagonal, empty, hcomp1, hcomp1_all, id1,
    sigma_boxplus, zero1,
)

V = VecSkel()
M = MatC(V)
seeds = st.integers(0, 10**6)


def dims(A):
    return [[dim_of(a) for a in r] for r in A.entries]


def natmul(X, Y, n):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y))) for j in range(n)] for i in range(len(X))]


# ---------------------------------------------------------------- 1-cells


def test_hcomp1_shape_and_entries():
    A = Cell1([[Base(1), Base(2)]])
    B = Cell1([[Base(3)], [Base(4)]])
    C = hcomp1(A, B)
    assert C.shape == (1, 1)
    assert C[0, 0] == Sum(Prod(Base(1), Base(3)), Prod(Base(2), Base(4)))
    with pytest.raises(MorphismTypeError):
        hcomp1(A, A)


@given(seeds)
def test_hcomp1_decategorifies_to_matrix_product(seed):
    rng = random.Random(seed)
    l, m, n = (rng.randint(0, 3) for _ in range(3))
    A, B = rg.random_cell1(V, rng, l, m), rg.random_cell1(V, rng, m, n)
    assert dims(hcomp1(A, B)) == natmul(dims(A), dims(B), n)


def test_empty_and_identity_cells():
    assert empty(0, 3).shape == (0, 3)
    assert empty(2, 0).shape == (2, 0)
    with pytest.raises(ValueError):
        empty(1, 1)
    # composing through 0 gives the zero 1-cell
    Z = hcomp1(empty(2, 0), empty(0, 3))
    assert Z == zero1(2, 3)
    assert dims(id1(3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_sigma_and_diagonals():
    s = sigma_boxplus(1, 2)
    assert s.shape == (3, 3)
    assert dims(s) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert dims(hcomp1(sigma_boxplus(2, 1), s)) == dims(id1(3))
    assert diagonal(3).shape == (3, 1) and codiagonal(3).shape == (1, 3)
    assert dims(hcomp1(codiagonal(2), diagonal(2))) == [[2]]


def test_boxplus1_block_diagonal():
    A = Cell1([[Base(2)]])
    B = Cell1([[Base(3), Base(1)]])
    assert boxplus1(A, B) == Cell1([[Base(2), O, O], [O, Base(3), Base(1)]])


# ---------------------------------------------------------------- 2-cells


def test_cell2_type_checks():
    A = Cell1([[Base(2)]])
    f = V.identity(Base(2))
    Cell2(A, A, [[f]])
    with pytest.raises(MorphismTypeError):
        Cell2(A, Cell1([[Base(3)]]), [[f]])
    with pytest.raises(MorphismTypeError):
        Cell2(A, A, [[f, f]])


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_vcomp_category_laws(seed):
    rng = random.Random(seed)
    A = rg.random_cell1(V, rng, rng.randint(0, 3), rng.randint(0, 3))
    f = rg.random_cell2(V, rng, A)
    g = rg.random_cell2(V, rng, f.cod)
    h = rg.random_cell2(V, rng, g.cod)
    assert M.vcomp(M.vcomp(f, g), h) == M.vcomp(f, M.vcomp(g, h))
    assert M.vcomp(M.id2(A), f) == f == M.vcomp(f, M.id2(f.cod))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_hcomp2_identities_and_whiskers(seed):
    rng = random.Random(seed)
    l, m, n = (rng.randint(0, 3) for _ in range(3))
    A, B = rg.random_cell1(V, rng, l, m), rg.random_cell1(V, rng, m, n)
    assert M.hcomp2(M.id2(A), M.id2(B)) == M.id2(hcomp1(A, B))
    f = rg.random_cell2(V, rng, A)
    g = rg.random_cell2(V, rng, B)
    # f * g = (f * 1)(1 * g)
    assert M.hcomp2(f, g) == M.vcomp(M.whisker_r(f, B), M.whisker_l(f.cod, g))


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_associator_natural(seed):
    rng = random.Random(seed)
    s = [rng.randint(0, 2) for _ in range(4)]
    cells = [rg.random_cell1(V, rng, s[i], s[i + 1], 2) for i in range(3)]
    f, g, h = (rg.random_cell2(V, rng, c, max_dim=2) for c in cells)
    lhs = M.vcomp(M.associator(*cells), M.hcomp2(f, M.hcomp2(g, h)))
    rhs = M.vcomp(M.hcomp2(M.hcomp2(f, g), h), M.associator(f.cod, g.cod, h.cod))
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_sigma_naturalizer_and_syllepsis(seed):
    rng = random.Random(seed)
    A = rg.random_cell1(V, rng, rng.randint(0, 2), rng.randint(0, 2))
    B = rg.random_cell1(V, rng, rng.randint(0, 2), rng.randint(0, 2))
    n = M.sigma_naturalizer(A, B)
    assert M.inverse_pair(n, M.sigma_naturalizer(A, B, inverse=True))
    m1, m2 = A.rows, B.rows
    s = M.syllepsis(m1, m2)
    assert s.cod == id1(m1 + m2)
    assert M.inverse_pair(s, M.syllepsis(m1, m2, inverse=True))


def test_associator_with_coincident_entries():
    # all entries equal: the template plan still matches summands by position
    A = Cell1([[Base(1), Base(1)]])
    B = Cell1([[Base(1), Base(1)], [Base(1), Base(1)]])
    C = Cell1([[Base(1)], [Base(1)]])
    a = M.associator(A, B, C)
    P = a.mors[0][0].payload
    assert P.is_permutation()
    # (AB)C lists the (j, k) summands k-major, A(BC) j-major: the middle two swap
    assert P.to_rows() != [[int(i == j) for j in range(4)] for i in range(4)]
    assert P.to_rows() == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def test_boxplus2_and_dagger():
    A = Cell1([[Base(2)]])
    f = M.from_base(V.morphism(Base(2), Base(1), [[1, 2]]))
    g = M.from_base(V.morphism(Base(1), Base(1), [[3]]))
    fg = M.boxplus2(f, g)
    assert fg.shape == (2, 2)
    assert fg.mors[0][1].dom == O
    d = M.dagger2(f)
    assert d.mors[0][0].payload.to_rows() == [[1], [2]]
    assert M.dagger2(d) == f


def test_microcosm():
    s, f = M.microcosm_oplus(Base(2), Base(3))
    assert s == Sum(Base(2), Base(3))
    P = f.mors[0][0].payload
    assert (P.rows, P.cols) == (5, 5) and P.is_permutation()
    assert M.inverse_pair(f, M.microcosm_oplus(Base(2), Base(3), inverse=True)[1])
    t, g = M.microcosm_otimes(Base(2), Base(3))
    assert t == Prod(Base(2), Base(3)) and M.is_identity2(g)


@pytest.mark.parametrize("cat", [BoolCat(), NatDiscrete()])
def test_thin_instances_coherence(cat):
    N = MatC(cat)
    rng = random.Random(3)
    for _ in range(20):
        A = rg.random_cell1(cat, rng, 2, 2)
        B = rg.random_cell1(cat, rng, 2, 1)
        C = rg.random_cell1(cat, rng, 1, 2)
        a = N.associator(A, B, C)
        assert a.dom == hcomp1(hcomp1(A, B), C) and a.cod == hcomp1(A, hcomp1(B, C))
        assert N.inverse_pair(a, N.associator(A, B, C, inverse=True))


def test_hcomp1_all_left_nested():
    A, B, C = id1(1), Cell1([[Base(2)]]), id1(1)
    assert hcomp1_all([A, B, C]) == hcomp1(hcomp1(A, B), C)
