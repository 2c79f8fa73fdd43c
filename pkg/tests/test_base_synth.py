import random

import pytest
from hypothesis import given, settings, strategies as st

from bimat.base import (
    Base, CapabilityError, Dual, I, MorphismTypeError, NotStructurallyIsomorphic, O, ObjSyntaxError,
    STRUCTURAL, Prod, Sum, Var, dual, format_obj, leaves, parse_obj, substitute,
)
from bimat.instances import BoolCat, Matrix, NatDiscrete, VecSkel, dim_of
from bimat.synth import count_steps, normal_form, synth_iso, synth_plan

V = VecSkel()


def objs(max_leaves=5, dims=(0, 1, 2)):
    leaf = st.one_of(st.just(O), st.just(I), st.sampled_from([Base(d) for d in dims]))
    return st.recursive(leaf, lambda c: st.builds(Sum, c, c) | st.builds(Prod, c, c), max_leaves=max_leaves)


def shuffle(a, rng):
    """A random expression structurally isomorphic to ``a`` (no product reordering)."""
    if isinstance(a, Sum):
        l, r = shuffle(a.left, rng), shuffle(a.right, rng)
        k = rng.random()
        if k < 0.3:
            out = Sum(r, l)
        elif k < 0.5 and isinstance(l, Sum):
            out = Sum(l.left, Sum(l.right, r))
        else:
            out = Sum(l, r)
    elif isinstance(a, Prod):
        l, r = shuffle(a.left, rng), shuffle(a.right, rng)
        if isinstance(r, Sum) and rng.random() < 0.5:
            out = Sum(Prod(l, r.left), Prod(l, r.right))
        else:
            out = Prod(l, r)
    else:
        out = a
    k = rng.random()
    if k < 0.1:
        return Sum(O, out)
    if k < 0.2:
        return Prod(out, I)
    return out


def mat(f):
    return f.payload.to_rows()


# ---------------------------------------------------------------- text syntax


@given(objs(dims=(0, 1, 2, 7)))
def test_text_round_trip(a):
    assert parse_obj(format_obj(a), V.parse_handle) == a


def test_text_precedence():
    a = V.obj("#1 (+) #2 (x) #3")
    assert a == Sum(Base(1), Prod(Base(2), Base(3)))
    assert V.obj("#1 (+) #2 (+) #3") == Sum(Sum(Base(1), Base(2)), Base(3))
    assert V.obj("dual(#2) (x) I") == Prod(Dual(Base(2)), I)
    with pytest.raises(ObjSyntaxError):
        V.obj("#1 (+)")
    with pytest.raises(ObjSyntaxError):
        V.obj("#1 $ #2")


def test_dual_and_helpers():
    assert dual(I) == I and dual(O) == O
    assert dual(Base(2)) == Dual(Base(2))
    a = Prod(Var("x"), Sum(Var("y"), Var("x")))
    assert substitute(a, {"x": Base(3), "y": I}) == Prod(Base(3), Sum(I, Base(3)))
    assert list(leaves(a)) == [Var("x"), Var("y"), Var("x")]


# ---------------------------------------------------------------- structural components


def test_distl_example():
    # basis (0,b),(0,c),(1,b),(1,c) -> order (0,b),(1,b),(0,c),(1,c): swap the middle two
    f = V.structural("distl", [Base(2), Base(1), Base(1)])
    assert f.dom == Prod(Base(2), Sum(Base(1), Base(1)))
    assert f.cod == Sum(Prod(Base(2), Base(1)), Prod(Base(2), Base(1)))
    assert mat(f) == [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]


def test_sym_example():
    f = V.structural("sym+", [Base(1), Base(2)])
    # e0 (the A vector) moves to the end; the two B vectors move up
    assert mat(f) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert synth_iso(V, Sum(Base(1), Base(2)), Sum(Base(2), Base(1))) == f


def test_nullitor_and_identity_examples():
    f = V.structural("nulll", [Base(3)])
    assert f.payload.rows == 0 and f.payload.cols == 0 and f.cod == O
    M = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    g = V.morphism(Base(3), Base(2), M)
    assert V.compose(V.identity(Base(3)), g) == g
    assert V.dual_counit(Base(2)).payload.to_rows() == [[1, 0, 0, 1]]
    assert V.dual_unit(Base(2)).payload.to_rows() == [[1], [0], [0], [1]]


def test_sym_times_is_kron_swap():
    # oracle: sym* (a, b) maps e_i (x) e_j to e_j (x) e_i
    a, b = 2, 3
    f = V.structural("sym*", [Base(a), Base(b)])
    rows = mat(f)
    for i in range(a):
        for j in range(b):
            src, dst = i * b + j, j * a + i
            assert rows[dst][src] == 1


STRUCT_ARITY = {"assoc+": 3, "lunit+": 1, "runit+": 1, "sym+": 2, "assoc*": 3, "lunit*": 1,
                "runit*": 1, "sym*": 2, "distl": 3, "distr": 3, "nulll": 1, "nullr": 1}


def _rand_mor(rng, d_in, d_out):
    return Matrix.from_rows([[rng.randint(-3, 3) for _ in range(d_in)] for _ in range(d_out)],
                            shape=(d_out, d_in))


@pytest.mark.parametrize("name", sorted(STRUCT_ARITY))
def test_structural_naturality(name):
    """s ; F(f) == G(f) ; s for random matrices f, an oracle independent of the basis bookkeeping."""
    rng = random.Random(name)
    k = STRUCT_ARITY[name]
    for _ in range(10):
        dims_in = [rng.randint(0, 3) for _ in range(k)]
        dims_out = [rng.randint(0, 3) for _ in range(k)]
        fs = [V.morphism(Base(a), Base(b), _rand_mor(rng, a, b)) for a, b in zip(dims_in, dims_out)]
        # F(f), G(f): the dom/cod templates replayed on morphisms
        dom_t = STRUCTURAL[name][2](*[Var("X%d" % i) for i in range(k)])
        cod_t = STRUCTURAL[name][3](*[Var("X%d" % i) for i in range(k)])
        Ff, Gf = _on_mors(dom_t, fs), _on_mors(cod_t, fs)
        s_in = V.structural(name, [Base(a) for a in dims_in])
        s_out = V.structural(name, [Base(b) for b in dims_out])
        assert V.compose(s_in, Gf) == V.compose(Ff, s_out)
        assert V.compose(s_in, V.structural(name, [Base(a) for a in dims_in], inverse=True)) == V.identity(s_in.dom)


def _on_mors(t, fs):
    if t == O:
        return V.identity(O)
    if t == I:
        return V.identity(I)
    if isinstance(t, Var):
        return fs[int(t.name[1:])]
    if isinstance(t, Sum):
        return V.oplus(_on_mors(t.left, fs), _on_mors(t.right, fs))
    return V.otimes(_on_mors(t.left, fs), _on_mors(t.right, fs))


def test_arity_and_capability_errors():
    with pytest.raises(MorphismTypeError):
        V.structural("distl", [Base(1), Base(2)])
    B = BoolCat()
    assert B.structural("sym*", [Base(True), Base(False)]).cod == Prod(Base(False), Base(True))
    with pytest.raises(CapabilityError):
        B.zero(Base(True), Base(False))
    with pytest.raises(CapabilityError):
        B.dagger(B.identity(Base(True)))
    with pytest.raises(MorphismTypeError):
        V.compose(V.identity(Base(2)), V.identity(Base(3)))


# ---------------------------------------------------------------- synthesis


def test_strip_units_and_zero_summands():
    src = Sum(Prod(I, I), Prod(I, O))
    f = synth_iso(V, src, I)
    assert f.dom == src and f.cod == I
    assert mat(f) == [[1]]


def test_synth_recovers_distl():
    A, B, C = Base(2), Base(1), Base(3)
    src, dst = Prod(A, Sum(B, C)), Sum(Prod(A, B), Prod(A, C))
    assert synth_iso(V, src, dst) == V.structural("distl", [A, B, C])


def test_not_structurally_isomorphic():
    with pytest.raises(NotStructurallyIsomorphic):
        synth_iso(V, Base(2), Base(3))
    with pytest.raises(NotStructurallyIsomorphic):
        synth_iso(V, Prod(Base(2), Base(3)), Prod(Base(3), Base(2)))
    with pytest.raises(NotStructurallyIsomorphic):
        synth_iso(BoolCat(), Prod(Base(True), I), I)


def test_normal_form_shape():
    a = Prod(Sum(Base(1), Base(2)), Sum(I, Prod(O, Base(3))))
    assert normal_form(a) == Sum(Base(1), Base(2))
    assert normal_form(Sum(O, O)) == O
    assert normal_form(Prod(I, I)) == I


@settings(max_examples=60, deadline=None)
@given(objs(), st.randoms(use_true_random=False))
def test_round_trip_and_determinism(a, rnd):
    b = shuffle(a, rnd)
    f, g = synth_iso(V, a, b), synth_iso(V, b, a)
    assert V.compose(f, g) == V.identity(a)
    assert V.compose(g, f) == V.identity(b)
    assert synth_iso(V, a, b) == f
    # unitary: inverse is the conjugate transpose
    assert V.dagger(f) == g
    assert f.payload.is_permutation()
    assert dim_of(a) == dim_of(b)


@settings(max_examples=40, deadline=None)
@given(objs(dims=(0, 1, 2)), st.randoms(use_true_random=False))
def test_nat_discrete_is_strict(a, rnd):
    N = NatDiscrete()
    b = shuffle(a, rnd)
    f = synth_iso(N, a, b)
    assert f.dom == a and f.cod == b and f.payload is None


@settings(max_examples=40, deadline=None)
@given(objs())
def test_self_iso_of_normal_form_is_identity(a):
    n = normal_form(a)
    assert synth_iso(V, n, n) == V.identity(n)
    assert count_steps(synth_plan(n, n)) >= 0


def test_templates_pick_the_right_permutation():
    # substituted leaves coincide; the template plan still swaps the blocks
    X, Y = Var("X"), Var("Y")
    f = synth_iso(V, Sum(X, Y), Sum(Y, X), {"X": Base(1), "Y": Base(1)})
    assert mat(f) == [[0, 1], [1, 0]]
    g = synth_iso(V, Sum(Base(1), Base(1)), Sum(Base(1), Base(1)))
    assert mat(g) == [[1, 0], [0, 1]]
