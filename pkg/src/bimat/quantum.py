"""
Dagger structure and 2-categorical quantum mechanics in Mat(C).

Everything lives in Hom(1,1).  With ``c = c_n = [I ... I]`` and
``d = d_n`` its transpose, ``c d`` is n classical surfaces merged into
one, and a system string ``[a]`` is pulled onto the n surfaces by

    d [a]  =>  P d,      P = [a] [+] ... [+] [a]

Measurement ``mu : [a (x) a*] => c d`` has i-th branch
``s . eps_a o (U_i (x) 1)`` where ``s`` is the normalizing scalar.
Control ``gamma`` pulls the system onto the surfaces and applies
``U_i^dag`` on surface i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from bimat.base import (
    I, O, BaseMor, Bimonoidal, CapabilityError, MorphismTypeError, ObjExpr, Base, Prod, Sum, Var,
    copy_to, dual,
)
from bimat.matc import (
    Cell1, Cell2, MatC, boxplus1, codiagonal, diagonal, hcomp1, id1, sigma_boxplus,
)
from bimat.scalars import GaussRational, I_UNIT, inv_sqrt
from bimat.structures import boxplus2_fold, boxplus_fold, cup, pull_string, pull_string_diag
from bimat.synth import synth_iso


def is_unitary2(M: MatC, f: Cell2) -> bool:
    M.cat.require("dagger")
    fd = M.dagger2(f)
    return M.is_identity2(M.vcomp(f, fd)) and M.is_identity2(M.vcomp(fd, f))


def scale2(M: MatC, s: BaseMor, f: Cell2) -> Cell2:
    """Entrywise s . f_ij."""
    cat = M.cat
    return Cell2(f.dom, f.cod, [[cat.scale(s, g) for g in r] for r in f.mors])


@dataclass(frozen=True)
class MeasurementShape:
    """
    The boundary of a measurement-like 2-cell on ``system`` with ``arity`` outcomes.

    qubit_measurement       [system] => c d
    qubit_preparation       c d => [system]
    projective_measurement  [system] => c (P d)
    """

    kind: str
    system: ObjExpr
    arity: int

    KINDS = ("qubit_measurement", "qubit_preparation", "projective_measurement")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError("unknown measurement kind %r" % (self.kind,))

    def boundary(self):
        n = self.arity
        sys = Cell1([[self.system]])
        classical = hcomp1(codiagonal(n), diagonal(n))
        if self.kind == "qubit_measurement":
            return sys, classical
        if self.kind == "qubit_preparation":
            return classical, sys
        return sys, hcomp1(codiagonal(n), hcomp1(boxplus_fold(sys, n), diagonal(n)))

    def fits(self, f: Cell2) -> bool:
        dom, cod = self.boundary()
        return f.dom == dom and f.cod == cod


@dataclass
class ErrorBasis:
    system: ObjExpr
    unitaries: List[BaseMor]

    @property
    def n(self) -> int:
        return len(self.unitaries)


def pauli_matrices():
    """1, X, Y, Z as nested lists of Gaussian rationals."""
    i = I_UNIT
    return {
        "1": [[1, 0], [0, 1]],
        "X": [[0, 1], [1, 0]],
        "Y": [[0, -i], [i, 0]],
        "Z": [[1, 0], [0, -1]],
    }


def pauli_basis(cat) -> ErrorBasis:
    q = Base(2)
    P = pauli_matrices()
    return ErrorBasis(q, [cat.morphism(q, q, P[k]) for k in ("1", "X", "Y", "Z")])


def basis_from_matrices(cat, dim: int, mats) -> ErrorBasis:
    a = Base(dim)
    return ErrorBasis(a, [cat.morphism(a, a, m) for m in mats])


def default_scalar(n: int):
    """1/sqrt(n); raises ValueError when it is not rational."""
    return inv_sqrt(n)


def _scalar_mor(cat, value):
    try:
        return cat.scalar(value)
    except CapabilityError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValueError("scalar %r is not expressible in %s: %s" % (value, cat.name, exc)) from None


def controlled(M: MatC, us: Sequence[BaseMor], n: Optional[int] = None,
               system: Optional[ObjExpr] = None) -> Cell2:
    """c (d [a]) => c (P d) => c (P d) => c (d [a]): pull, U_i on surface i, pull back."""
    if n is None:
        n = len(us)
    if len(us) != n:
        raise ValueError("controlled: %d unitaries for %d surfaces" % (len(us), n))
    if system is None:
        if not us:
            raise ValueError("controlled: need the system when n = 0")
        system = us[0].dom
    for u in us:
        if u.dom != system or u.cod != system:
            raise MorphismTypeError("controlled: %s is not an endomorphism of %s" % (u, system))
    c = codiagonal(n)
    d = diagonal(n)
    pull = M.whisker_l(c, pull_string_diag(M, system, n))
    act = M.whisker_l(c, M.whisker_r(boxplus2_fold(M, [M.from_base(u) for u in us]), d))
    back = M.whisker_l(c, pull_string_diag(M, system, n, inverse=True))
    return M.vcomp_all([pull, act, back])


def error_basis_mu(M: MatC, basis: ErrorBasis, scalar=None) -> Cell2:
    """mu : [a (x) a*] => c_n d_n with branches s . eps o (U_i (x) 1)."""
    cat = M.cat
    cat.require("dagger", "duals", "biproducts", "mult_symmetry")
    a, n = basis.system, basis.n
    if scalar is None:
        scalar = default_scalar(n)
    s = _scalar_mor(cat, scalar)
    ad = dual(a)
    branches = []
    for u in basis.unitaries:
        e = cat.compose(cat.otimes(u, cat.identity(ad)), cat.dual_counit(a))
        branches.append(cat.compose(cat.scale(s, e), cat.structural("lunit*", [I], inverse=True)))
    entry = cat.compose(copy_to(cat, Prod(a, ad), n), cat.oplus_all(branches))
    cod = hcomp1(codiagonal(n), diagonal(n))
    return Cell2(Cell1([[Prod(a, ad)]]), cod, [[entry]])


def _snake_with(cat, a, u):
    """a -> a I -> a (a* a) -> (a a*) a -> (U (x) 1) (x) 1 -> eps (x) 1 -> I a -> a"""
    ad = dual(a)
    st = cat.structural
    return cat.compose_all([
        st("runit*", [a], inverse=True),
        cat.otimes(cat.identity(a), cat.dual_unit(a)),
        st("assoc*", [a, ad, a], inverse=True),
        cat.otimes(cat.compose(cat.otimes(u, cat.identity(ad)), cat.dual_counit(a)), cat.identity(a)),
        st("lunit*", [a]),
    ])


@dataclass
class TeleportReport:
    n: int
    scalar: object
    checks: Dict[str, bool] = field(default_factory=dict)
    cells: Dict[str, Cell2] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def teleportation_report(M: MatC, basis: ErrorBasis, scalar=None) -> TeleportReport:
    """
    Evaluate both sides of the teleportation equation.

    lhs   [a] => [a] 1 => [a]([a*][a]) => ([a][a*])[a] =mu=> (c d)[a]
              => c (d [a]) => c (P d) =gamma=> c (P d)
    rhs   s . ([a] => [a] 1 => [a](c d) => ([a] c) d => (c P) d => c (P d))

    and replay the derivation: each branch's mu followed by U_i^dag is a
    snake with U_i slid onto the counit, which straightens to U_i, which
    cancels against U_i^dag.
    """
    cat = M.cat
    a, n = basis.system, basis.n
    if scalar is None:
        scalar = default_scalar(n)
    s = _scalar_mor(cat, scalar)
    rep = TeleportReport(n, scalar)
    A = Cell1([[a]])
    Ad = Cell1([[dual(a)]])
    c, d = codiagonal(n), diagonal(n)
    P = boxplus_fold(A, n)

    mu = error_basis_mu(M, basis, scalar)
    rep.cells["mu"] = mu
    rep.checks["mu unitary"] = is_unitary2(M, mu)

    eta2 = M.from_base(cat.dual_unit(a))
    daggers = [cat.dagger(u) for u in basis.unitaries]
    gamma_tail = M.whisker_l(c, M.whisker_r(boxplus2_fold(M, [M.from_base(u) for u in daggers]), d))
    lhs = M.vcomp_all([
        M.right_unitor(A, inverse=True),
        M.whisker_l(A, eta2),
        M.associator(A, Ad, A, inverse=True),
        M.whisker_r(mu, A),
        M.associator(c, d, A),
        M.whisker_l(c, pull_string_diag(M, a, n)),
        gamma_tail,
    ])
    R = M.vcomp_all([
        M.right_unitor(A, inverse=True),
        M.whisker_l(A, cup(M, n)),
        M.associator(A, c, d, inverse=True),
        M.whisker_r(pull_string(M, a, n), d),
        M.associator(c, P, d),
    ])
    rhs = scale2(M, s, R)
    rep.cells["lhs"] = lhs
    rep.cells["rhs"] = rhs
    rep.checks["one-shot"] = lhs == rhs

    def on_surfaces(ms):
        return M.vcomp(R, M.whisker_l(c, M.whisker_r(boxplus2_fold(M, [M.from_base(f) for f in ms]), d)))

    # each branch as a bent wire through U_i
    step2 = on_surfaces([cat.compose(cat.scale(s, _snake_with(cat, a, u)), ud)
                         for u, ud in zip(basis.unitaries, daggers)])
    # the wire straightened: U_i slides off the counit
    step3 = on_surfaces([cat.compose(cat.scale(s, u), ud) for u, ud in zip(basis.unitaries, daggers)])
    # U_i^dag U_i = 1
    step4 = on_surfaces([cat.scale(s, cat.identity(a)) for _ in basis.unitaries])
    rep.checks["chain 1=2"] = lhs == step2
    rep.checks["chain 2=3"] = step2 == step3
    rep.checks["chain 3=4"] = step3 == step4
    rep.checks["chain 4=rhs"] = step4 == rhs
    return rep


def teleportation_check(M: MatC, basis: ErrorBasis, scalar=None) -> bool:
    return teleportation_report(M, basis, scalar).ok


def pauli_x(M: MatC, a: ObjExpr = I, b: ObjExpr = I) -> Cell2:
    """
    [a (+) b] => (c X) d => c (X d) => [b (+) a]   with   X = sigma ([a] [+] [b]).

    The outer two steps only strip units and zeros; the swap of the two
    summands comes out of the horizontal associator in the middle.
    """
    ta, tb = Var("a"), Var("b")
    c, d = codiagonal(2), diagonal(2)

    def X(p, q):
        return hcomp1(sigma_boxplus(1, 1), boxplus1(Cell1([[p]]), Cell1([[q]])))

    sub = {"a": a, "b": b}
    left = M.synth2(Cell1([[Sum(ta, tb)]]), hcomp1(hcomp1(c, X(ta, tb)), d), sub)
    assoc = M.associator(c, X(a, b), d)
    right = M.synth2(hcomp1(c, hcomp1(X(ta, tb), d)), Cell1([[Sum(tb, ta)]]), sub)
    return M.vcomp_all([left, assoc, right])
