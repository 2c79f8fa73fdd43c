"""
Synthesis of canonical structural isomorphisms between object expressions.

Every expression is rewritten to a sum-of-products normal form:
``(x)`` is distributed over ``(+)`` (summands come out in
left-factor-major order), sums and products are flattened into
left-nested combs, ``O`` summands and ``I`` factors are dropped and any
product containing ``O`` collapses to ``O``.  Each rewrite step is
recorded as a :class:`Plan` built only from structural components,
identities, ``(+)`` and ``(x)``.

``synth_iso(src, dst)`` normalizes both sides, matches summands
(stable, first-to-first) and bridges the two orders with additive
symmetries.  Leaves other than ``O``/``I`` are opaque atoms.  When the
atoms are distinct template :class:`~bimat.base.Var` s the matching is
unique, which is how the bicategory's associators pick the right
permutation even when the substituted objects coincide.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Optional, Tuple

from bimat.base import (
    I, O, Base, Bimonoidal, BaseMor, Dual, NotStructurallyIsomorphic, ObjExpr,
    Prod, Sum, Var, _Unit, _Zero, oplus_all, otimes_all, structural_type, substitute,
)

Summand = Tuple[ObjExpr, ...]
NF = Tuple[Summand, ...]


# ----------------------------------------------------------------
# plans


class Plan:
    __slots__ = ()

    def inverse(self) -> "Plan":
        raise NotImplementedError


class Ident(Plan):
    __slots__ = ("obj",)

    def __init__(self, obj):
        self.obj = obj

    @property
    def dom(self):
        return self.obj

    cod = dom

    def inverse(self):
        return self

    def __repr__(self):
        return "Ident(%s)" % self.obj


class Struct(Plan):
    __slots__ = ("name", "args", "inv", "dom", "cod")

    def __init__(self, name, args, inv=False):
        self.name = name
        self.args = tuple(args)
        self.inv = inv
        _, _, dom, cod = structural_type(name, self.args)
        self.dom, self.cod = (cod, dom) if inv else (dom, cod)

    def inverse(self):
        return Struct(self.name, self.args, not self.inv)

    def __repr__(self):
        return "Struct(%s%s, %s)" % (self.name, "^-1" if self.inv else "",
                                     ", ".join(map(str, self.args)))


class Seq(Plan):
    __slots__ = ("steps",)

    def __init__(self, steps):
        self.steps = tuple(steps)

    @property
    def dom(self):
        return self.steps[0].dom

    @property
    def cod(self):
        return self.steps[-1].cod

    def inverse(self):
        return Seq([s.inverse() for s in reversed(self.steps)])

    def __repr__(self):
        return "Seq(%s)" % ", ".join(map(repr, self.steps))


class OPlus(Plan):
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left, self.right = left, right

    @property
    def dom(self):
        return Sum(self.left.dom, self.right.dom)

    @property
    def cod(self):
        return Sum(self.left.cod, self.right.cod)

    def inverse(self):
        return OPlus(self.left.inverse(), self.right.inverse())


class OTimes(OPlus):
    __slots__ = ()

    @property
    def dom(self):
        return Prod(self.left.dom, self.right.dom)

    @property
    def cod(self):
        return Prod(self.left.cod, self.right.cod)

    def inverse(self):
        return OTimes(self.left.inverse(), self.right.inverse())


def seq(*steps: Plan) -> Plan:
    flat = []
    for s in steps:
        if isinstance(s, Seq):
            flat.extend(s.steps)
        elif not isinstance(s, Ident):
            flat.append(s)
    if not flat:
        return Ident(steps[0].dom)
    if len(flat) == 1:
        return flat[0]
    return Seq(flat)


def oplus(p: Plan, q: Plan) -> Plan:
    if isinstance(p, Ident) and isinstance(q, Ident):
        return Ident(Sum(p.obj, q.obj))
    return OPlus(p, q)


def otimes(p: Plan, q: Plan) -> Plan:
    if isinstance(p, Ident) and isinstance(q, Ident):
        return Ident(Prod(p.obj, q.obj))
    return OTimes(p, q)


def is_identity_plan(p: Plan) -> bool:
    return isinstance(p, Ident)


def count_steps(p: Plan) -> int:
    if isinstance(p, Ident):
        return 0
    if isinstance(p, Struct):
        return 1
    if isinstance(p, Seq):
        return sum(count_steps(s) for s in p.steps)
    return count_steps(p.left) + count_steps(p.right)


def evaluate(plan: Plan, cat: Bimonoidal, subst: Optional[Mapping[str, ObjExpr]] = None) -> BaseMor:
    """Realize a plan as a morphism of ``cat`` after substituting template variables."""
    memo = {}

    def sub(a):
        return substitute(a, subst, memo) if subst else a

    def ev(p):
        if isinstance(p, Ident):
            return cat.identity(sub(p.obj))
        if isinstance(p, Struct):
            return cat.structural(p.name, [sub(a) for a in p.args], inverse=p.inv)
        if isinstance(p, Seq):
            f = ev(p.steps[0])
            for s in p.steps[1:]:
                f = cat.compose(f, ev(s))
            return f
        if isinstance(p, OTimes):
            return cat.otimes(ev(p.left), ev(p.right))
        if isinstance(p, OPlus):
            return cat.oplus(ev(p.left), ev(p.right))
        raise TypeError(p)

    return ev(plan)


# ----------------------------------------------------------------
# normal forms


def nf_expr(nf: NF) -> ObjExpr:
    return oplus_all([otimes_all(list(s)) for s in nf])


def _s(summand: Summand) -> ObjExpr:
    return otimes_all(list(summand))


def _sum_merge(L: NF, R: NF) -> Plan:
    # nf_expr(L) (+) nf_expr(R)  ->  nf_expr(L + R)
    if not L:
        return Struct("lunit+", [nf_expr(R)])
    if not R:
        return Struct("runit+", [nf_expr(L)])
    if len(R) == 1:
        return Ident(Sum(nf_expr(L), nf_expr(R)))
    R0, r = R[:-1], R[-1]
    return seq(
        Struct("assoc+", [nf_expr(L), nf_expr(R0), _s(r)], inv=True),
        oplus(_sum_merge(L, R0), Ident(_s(r))),
    )


def _prod_merge(p: Summand, q: Summand) -> Plan:
    # _s(p) (x) _s(q)  ->  _s(p + q)
    if not p:
        return Struct("lunit*", [_s(q)])
    if not q:
        return Struct("runit*", [_s(p)])
    if len(q) == 1:
        return Ident(Prod(_s(p), _s(q)))
    q0, x = q[:-1], q[-1]
    return seq(
        Struct("assoc*", [_s(p), _s(q0), x], inv=True),
        otimes(_prod_merge(p, q0), Ident(x)),
    )


def _distribute(L: NF, R: NF) -> Plan:
    # nf_expr(L) (x) nf_expr(R)  ->  nf_expr([p+q for p in L for q in R])
    if not L:
        return Struct("nulll", [nf_expr(R)])
    if not R:
        return Struct("nullr", [nf_expr(L)])
    if len(L) >= 2:
        L0, l = L[:-1], L[-1:]
        return seq(
            Struct("distr", [nf_expr(L0), _s(l[0]), nf_expr(R)]),
            oplus(_distribute(L0, R), _distribute(l, R)),
            _sum_merge(_mul(L0, R), _mul(l, R)),
        )
    if len(R) >= 2:
        R0, r = R[:-1], R[-1]
        return seq(
            Struct("distl", [_s(L[0]), nf_expr(R0), _s(r)]),
            oplus(_distribute(L, R0), _prod_merge(L[0], r)),
            _sum_merge(_mul(L, R0), ((L[0] + r),)),
        )
    return _prod_merge(L[0], R[0])


def _mul(L: NF, R: NF) -> NF:
    return tuple(p + q for p in L for q in R)


@lru_cache(maxsize=65536)
def normalize(a: ObjExpr) -> Tuple[NF, Plan]:
    """Return the normal form of ``a`` and a plan ``a -> nf_expr(nf)``."""
    if isinstance(a, _Zero):
        return (), Ident(O)
    if isinstance(a, _Unit):
        return ((),), Ident(I)
    if isinstance(a, (Base, Var, Dual)):
        return ((a,),), Ident(a)
    if isinstance(a, Sum):
        L, pl = normalize(a.left)
        R, pr = normalize(a.right)
        return L + R, seq(oplus(pl, pr), _sum_merge(L, R))
    if isinstance(a, Prod):
        L, pl = normalize(a.left)
        R, pr = normalize(a.right)
        return _mul(L, R), seq(otimes(pl, pr), _distribute(L, R))
    raise TypeError(a)


def normal_form(a: ObjExpr) -> ObjExpr:
    return nf_expr(normalize(a)[0])


def _adjacent_swap(cur: list, i: int) -> Plan:
    """Swap summands i and i+1 of the left-nested sum ``nf_expr(cur)``."""
    a, b = _s(cur[i]), _s(cur[i + 1])
    if i == 0:
        core = Struct("sym+", [a, b])
    else:
        P = nf_expr(tuple(cur[:i]))
        core = seq(
            Struct("assoc+", [P, a, b]),
            oplus(Ident(P), Struct("sym+", [a, b])),
            Struct("assoc+", [P, b, a], inv=True),
        )
    for j in range(i + 2, len(cur)):
        core = oplus(core, Ident(_s(cur[j])))
    return core


def _permutation_plan(S: NF, order) -> Plan:
    """Plan nf_expr(S) -> nf_expr([S[k] for k in order]) from adjacent symmetries."""
    cur = list(range(len(S)))
    steps = [Ident(nf_expr(S))]
    for t, k in enumerate(order):
        pos = cur.index(k)
        while pos > t:
            steps.append(_adjacent_swap([S[c] for c in cur], pos - 1))
            cur[pos - 1], cur[pos] = cur[pos], cur[pos - 1]
            pos -= 1
    return seq(*steps)


def match_summands(S: NF, T: NF):
    """Stable first-to-first matching; returns the order of S realizing T."""
    used = [False] * len(S)
    order = []
    for t in T:
        for k, s in enumerate(S):
            if not used[k] and s == t:
                used[k] = True
                order.append(k)
                break
        else:
            return None
    if not all(used):
        return None
    return order


@lru_cache(maxsize=65536)
def synth_plan(src: ObjExpr, dst: ObjExpr) -> Plan:
    S, ps = normalize(src)
    T, pt = normalize(dst)
    order = match_summands(S, T)
    if order is None:
        raise NotStructurallyIsomorphic("%s is not structurally isomorphic to %s" % (src, dst))
    return seq(ps, _permutation_plan(S, order), pt.inverse())


def synth_iso(cat: Bimonoidal, src: ObjExpr, dst: ObjExpr,
              subst: Optional[Mapping[str, ObjExpr]] = None) -> BaseMor:
    """
    The canonical structural isomorphism ``src -> dst``.

    ``src``/``dst`` may be templates over :class:`Var` leaves, in which
    case the plan is built on the templates and then realized at the
    objects given by ``subst``.
    """
    return evaluate(synth_plan(src, dst), cat, subst)
