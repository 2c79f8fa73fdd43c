"""
Structure coming from biproducts and duals in the base.

With biproducts, ``c = [I I]`` and ``d = [I; I]`` are ambidextrous
adjoints: the caps/cups made from the fold ``(1 1) : I (+) I -> I``
exhibit ``c -| d`` and the zero caps/cups (from ``0_{I,O}``, ``0_{O,I}``)
exhibit ``d -| c``.  Together they make ``c d`` a Frobenius algebra in
Hom(1,1).  With duals every 1-cell has a right adjoint, its dual
transpose.

Adjunction conventions: ``L -| R`` with ``L : a x b`` and ``R : b x a``
has ``unit : 1_b => R L`` and ``counit : L R => 1_a`` and the snakes

    L => L 1 => L (R L) => (L R) L => 1 L => L
    R => 1 R => (R L) R => R (L R) => R 1 => R
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from bimat.base import (
    I, O, BaseMor, Bimonoidal, MorphismTypeError, ObjExpr, Dual, Prod, Sum, Var, _Unit, _Zero,
    add_mor, copy_to, dual, fold_from, oplus_all,
)
from bimat.matc import (
    Cell1, Cell2, MatC, codiagonal, diagonal, hcomp1, id1, boxplus1,
)
from bimat.synth import synth_iso

__all__ = [
    "diagonal", "codiagonal", "cap", "cup", "zero_cap", "zero_cup", "frobenius_suite",
    "pull_string", "pull_string_diag", "add_2cells", "layer_trace", "dual_transpose",
    "Adjunction", "adjunction", "snake_left", "snake_right", "check_snakes",
    "obj_trace", "dual_data",
]


def _units_to_I(cat, k):
    # I (x) I (+) ... (+) I (x) I  ->  I (+) ... (+) I
    src = oplus_all([Prod(I, I)] * k)
    return synth_iso(cat, src, oplus_all([I] * k))


def cap(M: MatC, k: int = 2) -> Cell2:
    """c_k d_k => 1_1 : the fold (1 ... 1)."""
    cat = M.cat
    cat.require("biproducts")
    dom = hcomp1(codiagonal(k), diagonal(k))
    f = cat.compose(_units_to_I(cat, k), fold_from(cat, I, k))
    return Cell2(dom, id1(1), [[f]])


def cup(M: MatC, k: int = 2) -> Cell2:
    """1_1 => c_k d_k : the copy (1 ... 1)^T."""
    cat = M.cat
    cat.require("biproducts")
    cod = hcomp1(codiagonal(k), diagonal(k))
    f = cat.compose(copy_to(cat, I, k), synth_iso(cat, oplus_all([I] * k), cod.entries[0][0]))
    return Cell2(id1(1), cod, [[f]])


def zero_cap(M: MatC, k: int = 2) -> Cell2:
    """d_k c_k => 1_k : unitors on the diagonal, 0_{I,O} off it."""
    cat = M.cat
    cat.require("biproducts")
    II = Prod(I, I)
    mors = [[cat.structural("lunit*", [I]) if i == j else cat.zero(II, O)
             for j in range(k)] for i in range(k)]
    return Cell2(hcomp1(diagonal(k), codiagonal(k)), id1(k), mors)


def zero_cup(M: MatC, k: int = 2) -> Cell2:
    """1_k => d_k c_k"""
    cat = M.cat
    cat.require("biproducts")
    II = Prod(I, I)
    mors = [[cat.structural("lunit*", [I], inverse=True) if i == j else cat.zero(O, II)
             for j in range(k)] for i in range(k)]
    return Cell2(id1(k), hcomp1(diagonal(k), codiagonal(k)), mors)


# ----------------------------------------------------------------
# adjunctions and snakes


@dataclass
class Adjunction:
    left: Cell1
    right: Cell1
    counit: Cell2
    unit: Cell2


def snake_left(M: MatC, adj: Adjunction) -> Cell2:
    L, R = adj.left, adj.right
    return M.vcomp_all([
        M.right_unitor(L, inverse=True),
        M.whisker_l(L, adj.unit),
        M.associator(L, R, L, inverse=True),
        M.whisker_r(adj.counit, L),
        M.left_unitor(L),
    ])


def snake_right(M: MatC, adj: Adjunction) -> Cell2:
    L, R = adj.left, adj.right
    return M.vcomp_all([
        M.left_unitor(R, inverse=True),
        M.whisker_r(adj.unit, R),
        M.associator(R, L, R),
        M.whisker_l(R, adj.counit),
        M.right_unitor(R),
    ])


def check_snakes(M: MatC, adj: Adjunction):
    """(left snake is the identity, right snake is the identity)"""
    return M.is_identity2(snake_left(M, adj)), M.is_identity2(snake_right(M, adj))


def dual_transpose(M: MatC, A: Cell1) -> Cell1:
    M.cat.require("duals")
    return Cell1([[dual(A.entries[i][j]) for i in range(A.rows)] for j in range(A.cols)],
                 A.cols, A.rows)


def adjunction(M: MatC, A: Cell1) -> Adjunction:
    """A -| dual_transpose(A), with the epsilon/eta matrices folded through biproducts."""
    cat = M.cat
    cat.require("duals", "biproducts")
    R = dual_transpose(M, A)
    m, n = A.shape
    LR, RL = hcomp1(A, R), hcomp1(R, A)
    counit = []
    for i in range(m):
        row = []
        for k in range(m):
            src = LR.entries[i][k]
            if i == k:
                f = cat.oplus_all([cat.dual_counit(A.entries[i][j]) for j in range(n)])
                row.append(cat.compose(f, fold_from(cat, I, n)))
            else:
                row.append(cat.zero(src, O))
        counit.append(row)
    unit = []
    for j in range(n):
        row = []
        for l in range(n):
            tgt = RL.entries[j][l]
            if j == l:
                f = cat.oplus_all([cat.dual_unit(A.entries[i][j]) for i in range(m)])
                row.append(cat.compose(copy_to(cat, I, m), f))
            else:
                row.append(cat.zero(O, tgt))
        unit.append(row)
    return Adjunction(A, R, Cell2(LR, id1(m), counit), Cell2(id1(n), RL, unit))


# ----------------------------------------------------------------
# pulling, addition, layer trace


def pull_string(M: MatC, a: ObjExpr, k: int, inverse: bool = False) -> Cell2:
    """[a] c_k => c_k ([a] [+] ... [+] [a])"""
    ta = Cell1([[Var("a")]])
    return M.synth2(hcomp1(ta, codiagonal(k)), hcomp1(codiagonal(k), boxplus_fold(ta, k)),
                    {"a": a}, inverse)


def pull_string_diag(M: MatC, a: ObjExpr, k: int, inverse: bool = False) -> Cell2:
    """d_k [a] => ([a] [+] ... [+] [a]) d_k"""
    ta = Cell1([[Var("a")]])
    return M.synth2(hcomp1(diagonal(k), ta), hcomp1(boxplus_fold(ta, k), diagonal(k)),
                    {"a": a}, inverse)


def boxplus_fold(A: Cell1, k: int) -> Cell1:
    out = Cell1([], 0, 0)
    for _ in range(k):
        out = boxplus1(out, A)
    return out


def boxplus2_fold(M: MatC, fs) -> Cell2:
    out = M.id2(Cell1([], 0, 0))
    for f in fs:
        out = M.boxplus2(out, f)
    return out


def add_2cells(cat: Bimonoidal, f: BaseMor, g: BaseMor) -> BaseMor:
    """f + g through the biproduct (diagonal, f (+) g, fold)."""
    cat.require("biproducts")
    return add_mor(cat, f, g)


def layer_trace(M: MatC, f: Cell2) -> Cell2:
    """
    Tr(f) for f : 1_k => 1_k, as the 1x1 scalar 2-cell

        [I] => c (1_k d) ~ c ((1_k) d) => c (1_k d) => c d => [I]

    i.e. cup, the unitor, f pulled in, the unitor back, cap.
    """
    cat = M.cat
    cat.require("biproducts")
    k = f.shape[0]
    if f.dom != id1(k) or f.cod != id1(k):
        raise MorphismTypeError("layer_trace wants a 2-cell 1_k => 1_k")
    c, d = codiagonal(k), diagonal(k)
    inner = M.whisker_l(c, M.whisker_r(f, d))
    # c d => c (1 d)
    to_inner = M.whisker_l(c, M.left_unitor(d, inverse=True))
    return M.vcomp_all([
        cup(M, k), to_inner, inner, M.whisker_l(c, M.left_unitor(d)), cap(M, k),
    ])


# ----------------------------------------------------------------
# Frobenius algebra on c d


@dataclass
class FrobeniusReport:
    instance: str
    checks: Dict[str, bool] = field(default_factory=dict)
    special_value: object = None

    @property
    def ok(self) -> bool:
        return all(v for k, v in self.checks.items() if k != "special")


def frobenius_structure(M: MatC):
    """(F, mult, unit, comult, counit) on F = c d in Hom(1,1)."""
    c, d = codiagonal(2), diagonal(2)
    F = hcomp1(c, d)
    FF = hcomp1(F, F)
    # F F => ((c d) c) d => (c (d c)) d => (c 1) d => c d
    mult = M.vcomp_all([
        M.associator(F, c, d, inverse=True),
        M.whisker_r(M.associator(c, d, c), d),
        M.whisker_r(M.whisker_l(c, zero_cap(M)), d),
        M.whisker_r(M.right_unitor(c), d),
    ])
    comult = M.vcomp_all([
        M.whisker_r(M.right_unitor(c, inverse=True), d),
        M.whisker_r(M.whisker_l(c, zero_cup(M)), d),
        M.whisker_r(M.associator(c, d, c, inverse=True), d),
        M.associator(F, c, d),
    ])
    assert mult.dom == FF and comult.cod == FF
    return F, mult, cup(M), comult, cap(M)


def frobenius_suite(M: MatC) -> FrobeniusReport:
    cat = M.cat
    cat.require("biproducts")
    rep = FrobeniusReport(cat.name)
    c, d = codiagonal(2), diagonal(2)
    chk = rep.checks

    # ambidexterity: d -| c via (cup, zero cap), c -| d via (zero cup, cap)
    a1 = Adjunction(d, c, zero_cap(M), cup(M))
    a2 = Adjunction(c, d, cap(M), zero_cup(M))
    chk["zigzag d-|c left"], chk["zigzag d-|c right"] = check_snakes(M, a1)
    chk["zigzag c-|d left"], chk["zigzag c-|d right"] = check_snakes(M, a2)

    F, mu, eta, delta, eps = frobenius_structure(M)
    idF = M.id2(F)
    one = id1(1)
    a = lambda *x: M.associator(*x)
    ai = lambda *x: M.associator(*x, inverse=True)

    chk["associativity"] = (
        M.vcomp_all([M.whisker_r(mu, F), mu])
        == M.vcomp_all([a(F, F, F), M.whisker_l(F, mu), mu]))
    chk["coassociativity"] = (
        M.vcomp_all([delta, M.whisker_l(F, delta)])
        == M.vcomp_all([delta, M.whisker_r(delta, F), a(F, F, F)]))
    chk["left unit"] = M.is_identity2(M.vcomp_all([
        M.left_unitor(F, inverse=True), M.hcomp2(eta, idF), mu]))
    chk["right unit"] = M.is_identity2(M.vcomp_all([
        M.right_unitor(F, inverse=True), M.hcomp2(idF, eta), mu]))
    chk["left counit"] = M.is_identity2(M.vcomp_all([
        delta, M.hcomp2(eps, idF), M.left_unitor(F)]))
    chk["right counit"] = M.is_identity2(M.vcomp_all([
        delta, M.hcomp2(idF, eps), M.right_unitor(F)]))
    mid = M.vcomp(mu, delta)
    chk["frobenius left"] = M.vcomp_all([
        M.whisker_r(delta, F), a(F, F, F), M.whisker_l(F, mu)]) == mid
    chk["frobenius right"] = M.vcomp_all([
        M.whisker_l(F, delta), ai(F, F, F), M.whisker_r(mu, F)]) == mid

    if cat.caps.mult_symmetry:
        swap = M.from_base(cat.structural("sym*", [F.entries[0][0], F.entries[0][0]]))
        chk["commutative"] = M.vcomp(swap, mu) == mu
        chk["cocommutative"] = M.vcomp(delta, swap) == delta
        chk["symmetric"] = M.vcomp_all([swap, mu, eps]) == M.vcomp(mu, eps)

    special = M.vcomp(delta, mu)
    rep.special_value = special
    chk["special"] = M.is_identity2(special)
    return rep


# ----------------------------------------------------------------
# duals of compound objects and the object trace


def dual_data(cat: Bimonoidal, a: ObjExpr):
    """
    (a*, eta : I -> a* (x) a, eps : a (x) a* -> I).

    Leaves use the instance's duals.  For a sum the dual is the sum of
    duals, with eta/eps assembled from biproduct injections/projections
    and distributors; for a product it is the reversed product of duals.
    """
    cat.require("duals")
    if isinstance(a, Sum):
        return _sum_dual(cat, a)
    if isinstance(a, Prod):
        return _prod_dual(cat, a)
    return dual(a), cat.dual_unit(a), cat.dual_counit(a)


def _sum_dual(cat, s):
    cat.require("biproducts")
    a, b = s.left, s.right
    Da, eta_a, eps_a = dual_data(cat, a)
    Db, eta_b, eps_b = dual_data(cat, b)
    D = Sum(Da, Db)
    st = cat.structural
    # eta: I -> I(+)I -> Da a (+) Db b -> (Da a (+) Da b) (+) (Db a (+) Db b) -> D (a (+) b)
    inj_a = cat.compose(st("runit+", [Prod(Da, a)], inverse=True),
                        cat.oplus(cat.identity(Prod(Da, a)), cat.zero(O, Prod(Da, b))))
    inj_b = cat.compose(st("lunit+", [Prod(Db, b)], inverse=True),
                        cat.oplus(cat.zero(O, Prod(Db, a)), cat.identity(Prod(Db, b))))
    eta = cat.compose_all([
        cat.diag(I),
        cat.oplus(eta_a, eta_b),
        cat.oplus(inj_a, inj_b),
        cat.oplus(st("distl", [Da, a, b], inverse=True), st("distl", [Db, a, b], inverse=True)),
        st("distr", [Da, Db, s], inverse=True),
    ])
    pr_a = cat.compose(cat.oplus(cat.identity(Prod(a, Da)), cat.zero(Prod(a, Db), O)),
                       st("runit+", [Prod(a, Da)]))
    pr_b = cat.compose(cat.oplus(cat.zero(Prod(b, Da), O), cat.identity(Prod(b, Db))),
                       st("lunit+", [Prod(b, Db)]))
    eps = cat.compose_all([
        st("distr", [a, b, D]),
        cat.oplus(st("distl", [a, Da, Db]), st("distl", [b, Da, Db])),
        cat.oplus(pr_a, pr_b),
        cat.oplus(eps_a, eps_b),
        cat.codiag(I),
    ])
    return D, eta, eps


def _prod_dual(cat, p):
    a, b = p.left, p.right
    Da, eta_a, eps_a = dual_data(cat, a)
    Db, eta_b, eps_b = dual_data(cat, b)
    D = Prod(Db, Da)
    x, y, u, v = Var("a"), Var("b"), Var("Da"), Var("Db")
    sub = {"a": a, "b": b, "Da": Da, "Db": Db}
    # eta: I -> Db b -> Db (I b) -> Db ((Da a) b) -> (Db Da) (a b)
    eta = cat.compose_all([
        eta_b,
        cat.otimes(cat.identity(Db), cat.structural("lunit*", [b], inverse=True)),
        cat.otimes(cat.identity(Db), cat.otimes(eta_a, cat.identity(b))),
        synth_iso(cat, Prod(v, Prod(Prod(u, x), y)), Prod(Prod(v, u), Prod(x, y)), sub),
    ])
    # eps: (a b) (Db Da) -> a ((b Db) Da) -> a (I Da) -> a Da -> I
    eps = cat.compose_all([
        synth_iso(cat, Prod(Prod(x, y), Prod(v, u)), Prod(x, Prod(Prod(y, v), u)), sub),
        cat.otimes(cat.identity(a), cat.otimes(eps_b, cat.identity(Da))),
        cat.otimes(cat.identity(a), cat.structural("lunit*", [Da])),
        eps_a,
    ])
    return D, eta, eps


def obj_trace(cat: Bimonoidal, a: ObjExpr) -> BaseMor:
    """Tr(a) = eps o sym* o eta : I -> a* (x) a -> a (x) a* -> I"""
    cat.require("duals", "mult_symmetry")
    D, eta, eps = dual_data(cat, a)
    return cat.compose_all([eta, cat.structural("sym*", [D, a]), eps])


def check_dual_snakes(cat: Bimonoidal, a: ObjExpr):
    """The base-level zig-zags for dual_data(a): (a-snake ok, a*-snake ok)."""
    D, eta, eps = dual_data(cat, a)
    st = cat.structural
    z1 = cat.compose_all([
        st("runit*", [a], inverse=True),
        cat.otimes(cat.identity(a), eta),
        st("assoc*", [a, D, a], inverse=True),
        cat.otimes(eps, cat.identity(a)),
        st("lunit*", [a]),
    ])
    z2 = cat.compose_all([
        st("lunit*", [D], inverse=True),
        cat.otimes(eta, cat.identity(D)),
        st("assoc*", [D, a, D]),
        cat.otimes(cat.identity(D), eps),
        st("runit*", [D]),
    ])
    return z1 == cat.identity(a), z2 == cat.identity(D)
