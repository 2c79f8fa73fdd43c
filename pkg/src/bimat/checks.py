"""
Verification suites.  Each returns a :class:`Report`; a seed fixes every
random choice so the same seed gives the same report, byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List

from bimat.base import Base, I, Sum, CapabilityError
from bimat.instances import BoolCat, VecSkel, bool_value, dim_of
from bimat.matc import Cell1, MatC, hcomp1, id1
from bimat import pathcalc as pc
from bimat import randgen as rg
from bimat.structures import (
    adjunction, add_2cells, check_snakes, frobenius_suite, layer_trace, obj_trace,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: List[Check] = field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), "" if ok else detail))
        return ok

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def text(self) -> str:
        lines = [self.title]
        for c in self.checks:
            line = "  %s  %s" % ("PASS" if c.ok else "FAIL", c.name)
            if c.detail:
                line += ": " + c.detail
            lines.append(line)
        n_ok = sum(c.ok for c in self.checks)
        lines.append("%s (%d/%d checks passed)" % ("PASS" if self.ok else "FAIL", n_ok, len(self.checks)))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"title": self.title, "ok": self.ok,
                "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks]}


class _Tally:
    """Collapse many trials into one check, remembering the first failure."""

    def __init__(self, name):
        self.name = name
        self.n = 0
        self.first_fail = None

    def __call__(self, ok, detail=""):
        self.n += 1
        if not ok and self.first_fail is None:
            self.first_fail = "trial %d: %s" % (self.n - 1, detail)

    def into(self, rep: Report):
        rep.add("%s (%d trials)" % (self.name, self.n), self.first_fail is None, self.first_fail or "")


def _shape(rng, max_shape, k, lo=0):
    return [rng.randint(lo, max_shape) for _ in range(k)]


# ----------------------------------------------------------------
# bicategory laws


def interchange_trial(M, rng, max_shape=3, max_dim=3):
    cat = M.cat
    l, m, n = _shape(rng, max_shape, 3)
    A = rg.random_cell1(cat, rng, l, m, max_dim)
    B = rg.random_cell1(cat, rng, m, n, max_dim)
    f = rg.random_cell2(cat, rng, A, max_dim=max_dim)
    f2 = rg.random_cell2(cat, rng, f.cod, max_dim=max_dim)
    g = rg.random_cell2(cat, rng, B, max_dim=max_dim)
    g2 = rg.random_cell2(cat, rng, g.cod, max_dim=max_dim)
    lhs = M.vcomp(M.hcomp2(f, g), M.hcomp2(f2, g2))
    rhs = M.hcomp2(M.vcomp(f, f2), M.vcomp(g, g2))
    return lhs == rhs, "shapes %dx%d, %dx%d" % (l, m, m, n)


def unitor_trial(M, rng, max_shape=3, max_dim=3):
    """Unitors: both zig-zags with their inverses, naturality, and lambda_1 = rho_1."""
    cat = M.cat
    m, n = _shape(rng, max_shape, 2)
    A = rg.random_cell1(cat, rng, m, n, max_dim)
    f = rg.random_cell2(cat, rng, A, max_dim=max_dim)
    lam, lam_i = M.left_unitor(A), M.left_unitor(A, inverse=True)
    rho, rho_i = M.right_unitor(A), M.right_unitor(A, inverse=True)
    ok = M.inverse_pair(lam, lam_i) and M.inverse_pair(rho, rho_i)
    ok = ok and M.vcomp(M.whisker_l(id1(m), f), M.left_unitor(f.cod)) == M.vcomp(lam, f)
    ok = ok and M.vcomp(M.whisker_r(f, id1(n)), M.right_unitor(f.cod)) == M.vcomp(rho, f)
    ok = ok and M.left_unitor(id1(m)) == M.right_unitor(id1(m))
    return ok, "shape %dx%d" % (m, n)


def pentagon_trial(M, rng, max_shape=3, max_dim=3):
    cat = M.cat
    s = _shape(rng, max_shape, 5)
    A, B, C, D = (rg.random_cell1(cat, rng, s[i], s[i + 1], max_dim) for i in range(4))
    r1 = M.vcomp(M.associator(hcomp1(A, B), C, D), M.associator(A, B, hcomp1(C, D)))
    r2 = M.vcomp_all([
        M.whisker_r(M.associator(A, B, C), D),
        M.associator(A, hcomp1(B, C), D),
        M.whisker_l(A, M.associator(B, C, D)),
    ])
    return r1 == r2, "shapes %s" % (s,)


def triangle_trial(M, rng, max_shape=3, max_dim=3):
    cat = M.cat
    l, m, n = _shape(rng, max_shape, 3)
    A = rg.random_cell1(cat, rng, l, m, max_dim)
    B = rg.random_cell1(cat, rng, m, n, max_dim)
    lhs = M.vcomp(M.associator(A, id1(m), B), M.whisker_l(A, M.left_unitor(B)))
    rhs = M.whisker_r(M.right_unitor(A), B)
    return lhs == rhs, "shapes %dx%d, %dx%d" % (l, m, m, n)


def coherence_suite(cat, seed: int = 0, trials: int = 200, max_shape: int = 3, max_dim: int = 3) -> Report:
    M = MatC(cat)
    rep = Report("coherence on %s (seed %d)" % (cat.name, seed))
    for name, fn in [("interchange", interchange_trial), ("unitors", unitor_trial),
                     ("pentagon", pentagon_trial), ("triangle", triangle_trial)]:
        rng = random.Random("%s/%d" % (name, seed))
        tally = _Tally(name)
        for _ in range(trials):
            tally(*fn(M, rng, max_shape, max_dim))
        tally.into(rep)
    return rep


def relations_trial(rng, max_n=5):
    """Mat(BoolCat) composition against the boolean matrix product."""
    cat = BoolCat()
    l, m, n = (rng.randint(0, max_n) for _ in range(3))
    R = [[rng.random() < 0.5 for _ in range(m)] for _ in range(l)]
    S = [[rng.random() < 0.5 for _ in range(n)] for _ in range(m)]
    A = Cell1([[Base(x) for x in r] for r in R], l, m)
    B = Cell1([[Base(x) for x in r] for r in S], m, n)
    got = [[bool_value(x) for x in r] for r in hcomp1(A, B).entries]
    want = [[any(R[i][j] and S[j][k] for j in range(m)) for k in range(n)] for i in range(l)]
    return got == want, "%dx%d . %dx%d" % (l, m, m, n)


# ----------------------------------------------------------------
# synthesized 2-cells and the dagger


def structural_cells(M, rng, max_shape=3, max_dim=3):
    cat = M.cat
    l, m, n = _shape(rng, max_shape, 3)
    A = rg.random_cell1(cat, rng, l, m, max_dim)
    B = rg.random_cell1(cat, rng, m, n, max_dim)
    C = rg.random_cell1(cat, rng, n, rng.randint(0, max_shape), max_dim)
    return [
        ("left unitor", M.left_unitor(A), M.left_unitor(A, inverse=True)),
        ("right unitor", M.right_unitor(A), M.right_unitor(A, inverse=True)),
        ("associator", M.associator(A, B, C), M.associator(A, B, C, inverse=True)),
        ("naturalizer", M.sigma_naturalizer(A, B), M.sigma_naturalizer(A, B, inverse=True)),
        ("syllepsis", M.syllepsis(l, m), M.syllepsis(l, m, inverse=True)),
    ]


def dagger_suite(cat, seed: int = 0, trials: int = 100, max_shape: int = 3, max_dim: int = 3) -> Report:
    cat.require("dagger")
    M = MatC(cat)
    rep = Report("dagger laws on %s (seed %d)" % (cat.name, seed))
    rng = random.Random("dagger/%d" % seed)
    inv, contra = _Tally("involutive"), _Tally("contravariant")
    for _ in range(trials):
        m, n = _shape(rng, max_shape, 2)
        A = rg.random_cell1(cat, rng, m, n, max_dim)
        f = rg.random_cell2(cat, rng, A, max_dim=max_dim)
        g = rg.random_cell2(cat, rng, f.cod, max_dim=max_dim)
        inv(M.dagger2(M.dagger2(f)) == f, "shape %dx%d" % (m, n))
        contra(M.dagger2(M.vcomp(f, g)) == M.vcomp(M.dagger2(g), M.dagger2(f)), "shape %dx%d" % (m, n))
    inv.into(rep)
    contra.into(rep)
    rng = random.Random("unitary/%d" % seed)
    tallies = {}
    for _ in range(trials):
        for name, f, finv in structural_cells(M, rng, max_shape, max_dim):
            t = tallies.setdefault(name, _Tally(name + " unitary"))
            t(M.inverse_pair(f, finv) and M.dagger2(f) == finv, "shape %s" % (f.shape,))
    for t in tallies.values():
        t.into(rep)
    return rep


# ----------------------------------------------------------------
# path calculus


def axioms_suite(rig=pc.NAT, seed: int = 0, trials: int = 100) -> Report:
    rep = Report("axiom soundness over %s (seed %d)" % (rig.name, seed))
    rng = random.Random("axioms/%d" % seed)
    for ax in pc.axiom_list():
        tally = _Tally(ax.name)
        for _ in range(trials):
            if rig is pc.BOOL:
                a = {n: rng.random() < 0.5 for n in ax.scalars}
            else:
                a = {n: rng.randint(0, 20) for n in ax.scalars}
            lhs, rhs = pc.eval_rig(ax.lhs, rig, a), pc.eval_rig(ax.rhs, rig, a)
            tally(lhs == rhs, "%s: %s != %s" % (a, lhs, rhs))
        tally.into(rep)
    return rep


def coning_suite(cat, seed: int = 0, trials: int = 5, max_dim: int = 3) -> Report:
    M = MatC(cat)
    rep = Report("coning isos on %s (seed %d)" % (cat.name, seed))
    rng = random.Random("coning/%d" % seed)
    for ax in pc.axiom_list():
        tally = _Tally(ax.name)
        for _ in range(trials):
            asg = {n: rg.random_leaf(cat, rng, max_dim) for n in ax.scalars}
            f = pc.coning_iso(M, ax, asg)
            finv = pc.coning_iso(M, ax, asg, inverse=True)
            ok = M.inverse_pair(f, finv)
            if cat.caps.dagger:
                ok = ok and M.dagger2(f) == finv
            tally(ok, "%s" % asg)
        tally.into(rep)
    return rep


def decategorification_trial(rng, depth=6, max_dim=3):
    names = ("r", "s", "t")
    t = rg.random_term(rng, depth, names)
    dims = {n: rng.randint(0, max_dim) for n in names}
    lifted = pc.lift(t, {n: Base(d) for n, d in dims.items()})
    got = [[dim_of(a) for a in r] for r in lifted.entries]
    want = pc.eval_rig(t, pc.NAT, dims)
    ok = lifted.shape == t.arity and pc.depth(t) <= depth and got == want
    return ok, "%s with %s" % (t, dims)


# ----------------------------------------------------------------
# biproducts, duals, traces


def snake_suite(cat, seed: int = 0, trials: int = 50, max_shape: int = 3, max_dim: int = 3) -> Report:
    M = MatC(cat)
    rep = Report("snake equations on %s (seed %d)" % (cat.name, seed))
    rng = random.Random("snake/%d" % seed)
    left, right = _Tally("left snake"), _Tally("right snake")
    for _ in range(trials):
        m, n = _shape(rng, max_shape, 2)
        A = rg.random_cell1(cat, rng, m, n, max_dim)
        a, b = check_snakes(M, adjunction(M, A))
        left(a, repr(A))
        right(b, repr(A))
    left.into(rep)
    right.into(rep)
    return rep


def trace_suite(cat, seed: int = 0, trials: int = 50, max_d: int = 6) -> Report:
    rep = Report("object traces on %s (seed %d)" % (cat.name, seed))
    for d in range(max_d + 1):
        t = obj_trace(cat, Base(d))
        rep.add("Tr(%d) = %d" % (d, d), t == cat.scalar(d), "got %r" % (t.payload,))
    rng = random.Random("trace/%d" % seed)
    tally = _Tally("Tr(a (+) b) = Tr(a) + Tr(b)")
    for _ in range(trials):
        a, b = Base(rng.randint(0, max_d)), Base(rng.randint(0, max_d))
        lhs = obj_trace(cat, Sum(a, b))
        rhs = add_2cells(cat, obj_trace(cat, a), obj_trace(cat, b))
        tally(lhs == rhs, "a=%s b=%s" % (a, b))
    tally.into(rep)
    return rep


def frobenius_report(cat) -> Report:
    M = MatC(cat)
    fr = frobenius_suite(M)
    rep = Report("Frobenius algebra on [I I][I;I] in %s" % cat.name)
    for name, ok in fr.checks.items():
        if name == "special":
            continue
        rep.add(name, ok)
    sp = fr.special_value.mors[0][0]
    rep.add("special (mult o comult = id, recorded)", fr.checks["special"], "got %r" % (sp.payload,))
    for k in (1, 2, 3):
        lt = layer_trace(M, M.id2(id1(k)))
        rep.add("layer trace of 1_%d = %d" % (k, k), lt.mors[0][0] == cat.scalar(k),
                "got %r" % (lt.mors[0][0].payload,))
    return rep


def microcosm_suite(cat, seed: int = 0, trials: int = 20, max_dim: int = 3) -> Report:
    M = MatC(cat)
    rep = Report("microcosm on %s (seed %d)" % (cat.name, seed))
    rng = random.Random("microcosm/%d" % seed)
    inv, dims = _Tally("(add) iso invertible"), _Tally("dim(a (+) b) = dim a + dim b")
    for _ in range(trials):
        a, b = rg.random_leaf(cat, rng, max_dim), rg.random_leaf(cat, rng, max_dim)
        s, f = M.microcosm_oplus(a, b)
        inv(M.inverse_pair(f, M.microcosm_oplus(a, b, inverse=True)[1]), "%s, %s" % (a, b))
        if isinstance(cat, VecSkel):
            dims(dim_of(s) == dim_of(a) + dim_of(b), "%s, %s" % (a, b))
    inv.into(rep)
    if dims.n:
        dims.into(rep)
    return rep
