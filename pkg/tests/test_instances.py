from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bimat.base import Base, Dual, I, MorphismTypeError, O, Prod, Sum
from bimat.instances import (
    BoolCat, Matrix, NatDiscrete, VecSkel, block_diag, bool_hom, bool_value, dim_of, get_instance,
    kron, nat_value, structural_perm,
)
from bimat.scalars import GaussRational

V = VecSkel()
small = st.integers(-3, 3)


def mats(r=None, c=None):
    rs = st.just(r) if r is not None else st.integers(0, 3)
    cs = st.just(c) if c is not None else st.integers(0, 3)
    return st.tuples(rs, cs).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
        .map(lambda rows, rc=rc: Matrix.from_rows(rows, shape=rc)))


# naive oracles on plain nested lists


def o_mul(A, B, n):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(n)] for i in range(len(A))]


def o_kron(A, B, shapeA, shapeB):
    (ra, ca), (rb, cb) = shapeA, shapeB
    return [[A[i // rb][j // cb] * B[i % rb][j % cb] for j in range(ca * cb)] for i in range(ra * rb)]


def o_block(A, B, shapeA, shapeB):
    (ra, ca), (rb, cb) = shapeA, shapeB
    out = [[0] * (ca + cb) for _ in range(ra + rb)]
    for i in range(ra):
        for j in range(ca):
            out[i][j] = A[i][j]
    for i in range(rb):
        for j in range(cb):
            out[ra + i][ca + j] = B[i][j]
    return out


@given(st.integers(0, 3).flatmap(lambda k: st.tuples(mats(c=k), mats(r=k))))
def test_matmul_oracle(pair):
    A, B = pair
    assert (A @ B).to_rows() == o_mul(A.to_rows(), B.to_rows(), B.cols)


@given(mats(), mats())
def test_kron_and_block_oracle(A, B):
    sa, sb = (A.rows, A.cols), (B.rows, B.cols)
    assert kron(A, B).to_rows() == o_kron(A.to_rows(), B.to_rows(), sa, sb)
    assert block_diag(A, B).to_rows() == o_block(A.to_rows(), B.to_rows(), sa, sb)
    assert A.conj_transpose().conj_transpose() == A
    assert A.transpose().to_rows() == [list(c) for c in zip(*A.to_rows())] or A.rows == 0 or A.cols == 0


@settings(max_examples=50)
@given(st.integers(0, 2).flatmap(lambda k: st.tuples(mats(c=k), mats(r=k))),
       st.integers(0, 2).flatmap(lambda k: st.tuples(mats(c=k), mats(r=k))))
def test_kron_interchange(p, q):
    (A, B), (C, D) = p, q
    assert kron(A @ B, C @ D) == kron(A, C) @ kron(B, D)


def test_permutation_fast_path_agrees():
    P = Matrix.from_perm((2, 0, 1))
    dense = Matrix.from_rows(P.to_rows())
    assert P == dense and P.is_permutation()
    A = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert (P @ A) == (dense @ A)
    assert (A @ P) == (A @ dense)
    assert P.conj_transpose() @ P == Matrix.identity(3)


def test_complex_entries():
    i = GaussRational(0, 1)
    A = Matrix.from_rows([[1, i], [0, 2]])
    assert A.conj_transpose().to_rows() == [[1, 0], [-i, 2]]
    assert (A + A).to_rows() == [[2, 2 * i], [0, 4]]
    assert A.scale(Fraction(1, 2)).to_rows()[1][1] == 1


@pytest.mark.parametrize("name,k", [("assoc+", 3), ("sym+", 2), ("assoc*", 3), ("sym*", 2),
                                    ("distl", 3), ("distr", 3), ("lunit+", 1), ("runit*", 1)])
def test_structural_perms_are_bijections(name, k):
    for dims in [(1,) * k, (2, 3, 1)[:k], (0, 2, 2)[:k]]:
        p = structural_perm(name, dims, False)
        q = structural_perm(name, dims, True)
        assert sorted(p) == list(range(len(p)))
        assert [p[j] for j in q] == list(range(len(q)))


def test_dim_of():
    assert dim_of(O) == 0 and dim_of(I) == 1
    a = Prod(Sum(Base(2), I), Dual(Base(3)))
    assert dim_of(a) == 9


def test_vecskel_morphism_checks():
    with pytest.raises(MorphismTypeError):
        V.morphism(Base(2), Base(3), [[1, 0], [0, 1]])
    f = V.morphism(Base(0), Base(2), [[], []])
    assert (f.payload.rows, f.payload.cols) == (2, 0)
    g = V.parse_mor(Base(2), Base(1), V.format_mor(V.morphism(Base(2), Base(1), [["1/2", "0+1 i"]])))
    assert g.payload.to_rows() == [[Fraction(1, 2), GaussRational(0, 1)]]
    z = V.morphism(Base(1), Base(2), [[GaussRational(1, -1)], [0]])
    assert V.parse_mor(z.dom, z.cod, V.format_mor(z)) == z


def test_scalar_and_zero():
    s = V.scalar(Fraction(1, 2))
    assert s.dom == I and s.cod == I and s.payload.to_rows() == [[Fraction(1, 2)]]
    assert V.zero(Base(2), Base(1)).payload.to_rows() == [[0, 0]]
    assert V.diag(Base(1)).payload.to_rows() == [[1], [1]]
    assert V.codiag(Base(1)).payload.to_rows() == [[1, 1]]


def test_boolcat():
    B = BoolCat()
    t, f = Base(True), Base(False)
    assert B.compose(B.morphism(f, t), B.morphism(t, t)) == B.morphism(f, t)
    with pytest.raises(MorphismTypeError):
        B.morphism(t, f)
    assert bool_value(Sum(f, Prod(t, t))) is True
    assert bool_value(Prod(t, O)) is False
    assert bool_hom(True, False) is None
    assert B.obj("#true (+) #0") == Sum(t, f)
    assert B.fmt(Sum(t, f)) == "#true (+) #false"
    assert B.caps.mult_symmetry and not B.caps.biproducts


def test_natdiscrete():
    N = NatDiscrete()
    a = Prod(Base(2), Sum(Base(1), I))
    assert nat_value(a) == 4
    assert N.morphism(a, Base(4)).payload is None
    with pytest.raises(MorphismTypeError):
        N.morphism(Base(1), Base(2))
    assert N.structural("distl", [Base(1), Base(2), Base(3)]).cod == Sum(Prod(Base(1), Base(2)), Prod(Base(1), Base(3)))


def test_registry():
    assert isinstance(get_instance("vecskel"), VecSkel)
    assert isinstance(get_instance("bool"), BoolCat)
    assert isinstance(get_instance("natdiscrete"), NatDiscrete)
    with pytest.raises(ValueError):
        get_instance("sets")
