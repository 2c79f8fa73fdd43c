"""
Path calculus: diagrams of wires over a rig.

A term with ``m`` outputs and ``n`` inputs denotes an ``m x n`` matrix.
Diagrams are read right to left, so ``s . t`` is "t, then s" and
evaluates to the matrix product ``S T``.  ``s | t`` stacks ``s`` in
front of ``t`` (direct sum, ``s`` first).

Grammar::

    term   := par ("." par)*
    par    := atom ("|" atom)*
    atom   := "id(" nat ")" | "mul" | "unit" | "comul" | "counit" | "swap"
            | "scalar(" sexpr ")" | "(" term ")"
    sexpr  := sterm ("+" sterm)*
    sterm  := sfact ("*" sfact)*
    sfact  := name | nat | "(" sexpr ")"

``|`` binds tighter than ``.``; both associate to the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence

from bimat.base import I, O, ObjExpr, Prod, Sum, Var, oplus_all
from bimat.matc import (
    Cell1, Cell2, MatC, boxplus1, codiagonal, diagonal, empty, hcomp1, id1, sigma_boxplus,
)


class PathSyntaxError(ValueError):
    def __init__(self, msg, pos):
        super().__init__("%s at position %d" % (msg, pos))
        self.pos = pos


class ArityError(ValueError):
    pass


class UnassignedScalar(KeyError):
    pass


# ----------------------------------------------------------------
# scalar expressions


@dataclass(frozen=True)
class SName:
    name: str


@dataclass(frozen=True)
class SNum:
    value: int


@dataclass(frozen=True)
class SAdd:
    left: object
    right: object


@dataclass(frozen=True)
class SMul:
    left: object
    right: object


def format_sexpr(e, prec: int = 0) -> str:
    if isinstance(e, SName):
        return e.name
    if isinstance(e, SNum):
        return str(e.value)
    if isinstance(e, SAdd):
        s = "%s+%s" % (format_sexpr(e.left, 0), format_sexpr(e.right, 1))
        return "(%s)" % s if prec > 0 else s
    if isinstance(e, SMul):
        s = "%s*%s" % (format_sexpr(e.left, 1), format_sexpr(e.right, 2))
        return "(%s)" % s if prec > 1 else s
    raise TypeError(e)


def sexpr_names(e) -> List[str]:
    if isinstance(e, SName):
        return [e.name]
    if isinstance(e, (SAdd, SMul)):
        out = sexpr_names(e.left)
        return out + [n for n in sexpr_names(e.right) if n not in out]
    return []


# ----------------------------------------------------------------
# terms


class PathTerm:
    """Base class; every term knows ``outputs`` and ``inputs``."""

    outputs: int
    inputs: int

    def __str__(self):
        return format_term(self)

    def __repr__(self):
        return "PathTerm(%r)" % format_term(self)

    @property
    def arity(self):
        return (self.outputs, self.inputs)


_GEN_ARITY = {"mul": (1, 2), "unit": (1, 0), "comul": (2, 1), "counit": (0, 1), "swap": (2, 2)}


@dataclass(frozen=True, repr=False)
class Gen(PathTerm):
    kind: str

    @property
    def outputs(self):
        return _GEN_ARITY[self.kind][0]

    @property
    def inputs(self):
        return _GEN_ARITY[self.kind][1]


@dataclass(frozen=True, repr=False)
class Id(PathTerm):
    k: int

    @property
    def outputs(self):
        return self.k

    inputs = outputs


@dataclass(frozen=True, repr=False)
class Scalar(PathTerm):
    expr: object
    outputs = 1
    inputs = 1


@dataclass(frozen=True, repr=False)
class Seq(PathTerm):
    """left . right : right first."""
    left: PathTerm
    right: PathTerm

    def __post_init__(self):
        if self.left.inputs != self.right.outputs:
            raise ArityError("cannot compose %s (%d inputs) after %s (%d outputs)"
                             % (format_term(self.left), self.left.inputs,
                                format_term(self.right), self.right.outputs))

    @property
    def outputs(self):
        return self.left.outputs

    @property
    def inputs(self):
        return self.right.inputs


@dataclass(frozen=True, repr=False)
class Par(PathTerm):
    top: PathTerm
    bottom: PathTerm

    @property
    def outputs(self):
        return self.top.outputs + self.bottom.outputs

    @property
    def inputs(self):
        return self.top.inputs + self.bottom.inputs


MUL, UNIT, COMUL, COUNIT, SWAP = (Gen(k) for k in ("mul", "unit", "comul", "counit", "swap"))


def scalar(e) -> Scalar:
    if isinstance(e, str):
        e = SName(e)
    elif isinstance(e, int):
        e = SNum(e)
    return Scalar(e)


def seq(*ts: PathTerm) -> PathTerm:
    """seq(a, b, c) = a . b . c  (c first)."""
    out = ts[0]
    for t in ts[1:]:
        out = Seq(out, t)
    return out


def par(*ts: PathTerm) -> PathTerm:
    out = ts[0]
    for t in ts[1:]:
        out = Par(out, t)
    return out


def format_term(t: PathTerm) -> str:
    if isinstance(t, Gen):
        return t.kind
    if isinstance(t, Id):
        return "id(%d)" % t.k
    if isinstance(t, Scalar):
        return "scalar(%s)" % format_sexpr(t.expr)
    if isinstance(t, Seq):
        # "|" binds tighter, but the parentheses read better
        left = format_term(t.left)
        right = format_term(t.right)
        if isinstance(t.left, Par):
            left = "(%s)" % left
        if isinstance(t.right, (Seq, Par)):
            right = "(%s)" % right
        return "%s . %s" % (left, right)
    if isinstance(t, Par):
        top = format_term(t.top)
        bottom = format_term(t.bottom)
        if isinstance(t.top, Seq):
            top = "(%s)" % top
        if isinstance(t.bottom, (Seq, Par)):
            bottom = "(%s)" % bottom
        return "%s | %s" % (top, bottom)
    raise TypeError(t)


def term_scalars(t: PathTerm) -> List[str]:
    out: List[str] = []

    def walk(u):
        if isinstance(u, Scalar):
            for n in sexpr_names(u.expr):
                if n not in out:
                    out.append(n)
        elif isinstance(u, Seq):
            walk(u.left)
            walk(u.right)
        elif isinstance(u, Par):
            walk(u.top)
            walk(u.bottom)

    walk(t)
    return out


def depth(t: PathTerm) -> int:
    if isinstance(t, Seq):
        return 1 + max(depth(t.left), depth(t.right))
    if isinstance(t, Par):
        return 1 + max(depth(t.top), depth(t.bottom))
    return 0


# ----------------------------------------------------------------
# parser


_TOKEN = re.compile(
    r"\s*(?:(?P<id>id\s*\()|(?P<scalar>scalar\s*\()|(?P<gen>mul|unit|comul|counit|swap)(?![A-Za-z0-9_])"
    r"|(?P<nat>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[.|()+*]))"
)


def _tokenize(text: str):
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise PathSyntaxError("unexpected character %r" % text[pos], pos)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "op":
            kind = val
        toks.append((kind, val, m.start(m.lastgroup)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse(text: str) -> PathTerm:
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i][0]

    def take(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            raise PathSyntaxError("expected %r, found %r" % (kind, tok[1] or "end"), tok[2])
        i += 1
        return tok

    def p_term():
        e = p_par()
        while peek() == ".":
            at = toks[i][2]
            take(".")
            r = p_par()
            try:
                e = Seq(e, r)
            except ArityError as exc:
                raise ArityError("%s (at position %d)" % (exc, at)) from None
        return e

    def p_par():
        e = p_atom()
        while peek() == "|":
            take("|")
            e = Par(e, p_atom())
        return e

    def p_atom():
        nonlocal i
        kind, val, at = toks[i]
        if kind == "gen":
            i += 1
            return Gen(val)
        if kind == "id":
            i += 1
            k = int(take("nat")[1])
            take(")")
            return Id(k)
        if kind == "scalar":
            i += 1
            e = p_sexpr()
            take(")")
            return Scalar(e)
        if kind == "(":
            i += 1
            e = p_term()
            take(")")
            return e
        raise PathSyntaxError("unexpected %r" % (val or "end"), at)

    def p_sexpr():
        e = p_sterm()
        while peek() == "+":
            take("+")
            e = SAdd(e, p_sterm())
        return e

    def p_sterm():
        e = p_sfact()
        while peek() == "*":
            take("*")
            e = SMul(e, p_sfact())
        return e

    def p_sfact():
        nonlocal i
        kind, val, at = toks[i]
        if kind == "name":
            i += 1
            return SName(val)
        if kind == "gen":
            # generator words are fine as scalar names
            i += 1
            return SName(val)
        if kind == "nat":
            i += 1
            return SNum(int(val))
        if kind == "(":
            i += 1
            e = p_sexpr()
            take(")")
            return e
        raise PathSyntaxError("expected a scalar, found %r" % (val or "end"), at)

    t = p_term()
    take("end")
    return t


# ----------------------------------------------------------------
# rig semantics


@dataclass(frozen=True)
class Rig:
    name: str
    zero: object
    one: object
    add: Callable
    mul: Callable
    parse: Callable = int

    def from_int(self, n: int):
        out = self.zero
        for _ in range(n):
            out = self.add(out, self.one)
        return out


NAT = Rig("nat", 0, 1, lambda a, b: a + b, lambda a, b: a * b, int)


def _parse_bool(s):
    s = str(s).strip().lower()
    if s in ("1", "true", "t"):
        return True
    if s in ("0", "false", "f"):
        return False
    raise ValueError("not a boolean: %r" % s)


BOOL = Rig("bool", False, True, lambda a, b: a or b, lambda a, b: a and b, _parse_bool)

RIGS = {"nat": NAT, "bool": BOOL}


def eval_sexpr(e, rig: Rig, assignment: Mapping):
    if isinstance(e, SName):
        if e.name not in assignment:
            raise UnassignedScalar(e.name)
        return assignment[e.name]
    if isinstance(e, SNum):
        if str(e.value) in assignment:
            return assignment[str(e.value)]
        return rig.from_int(e.value)
    if isinstance(e, SAdd):
        return rig.add(eval_sexpr(e.left, rig, assignment), eval_sexpr(e.right, rig, assignment))
    if isinstance(e, SMul):
        return rig.mul(eval_sexpr(e.left, rig, assignment), eval_sexpr(e.right, rig, assignment))
    raise TypeError(e)


def rig_matmul(rig: Rig, A, B, m: int, k: int, n: int):
    out = []
    for i in range(m):
        row = []
        for j in range(n):
            acc = rig.zero
            for l in range(k):
                acc = rig.add(acc, rig.mul(A[i][l], B[l][j]))
            row.append(acc)
        out.append(row)
    return out


def rig_dsum(rig: Rig, A, B, shapeA, shapeB):
    (ma, na), (mb, nb) = shapeA, shapeB
    out = [list(r) + [rig.zero] * nb for r in A]
    out += [[rig.zero] * na + list(r) for r in B]
    return out


def eval_rig(t: PathTerm, rig: Rig = NAT, assignment: Optional[Mapping] = None):
    """The outputs x inputs matrix of ``t`` as nested lists."""
    assignment = assignment or {}
    z, o = rig.zero, rig.one

    def ev(u):
        if isinstance(u, Id):
            return [[o if i == j else z for j in range(u.k)] for i in range(u.k)]
        if isinstance(u, Gen):
            return {
                "mul": [[o, o]],
                "comul": [[o], [o]],
                "unit": [[]],
                "counit": [],
                "swap": [[z, o], [o, z]],
            }[u.kind]
        if isinstance(u, Scalar):
            return [[eval_sexpr(u.expr, rig, assignment)]]
        if isinstance(u, Seq):
            return rig_matmul(rig, ev(u.left), ev(u.right),
                              u.left.outputs, u.left.inputs, u.right.inputs)
        if isinstance(u, Par):
            return rig_dsum(rig, ev(u.top), ev(u.bottom), u.top.arity, u.bottom.arity)
        raise TypeError(u)

    return ev(t)


# ----------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class Axiom:
    name: str
    lhs: PathTerm
    rhs: PathTerm
    scalars: tuple = ()

    def __post_init__(self):
        if self.lhs.arity != self.rhs.arity:
            raise ArityError("axiom %s: %s vs %s" % (self.name, self.lhs.arity, self.rhs.arity))


def braid(k: int) -> PathTerm:
    """
    The permutation moving the first ``k`` wires below one more wire:
    k+1 inputs, wire k comes out on top.  Built from adjacent swaps.
    """
    if k == 0:
        return Id(1)
    out = Id(k + 1)
    for j in range(k):
        # swap wires k-1-j and k-j
        above, below = k - 1 - j, j
        layer = SWAP
        if above:
            layer = Par(Id(above), layer)
        if below:
            layer = Par(layer, Id(below))
        out = Seq(layer, out)
    return out


def braid_out(k: int) -> PathTerm:
    """Inverse of braid(k): the top wire moves below the next k."""
    if k == 0:
        return Id(1)
    out = Id(k + 1)
    for j in range(k):
        above, below = j, k - 1 - j
        layer = SWAP
        if above:
            layer = Par(Id(above), layer)
        if below:
            layer = Par(layer, Id(below))
        out = Seq(layer, out)
    return out


def axiom_list() -> List[Axiom]:
    r, s = scalar("r"), scalar("s")
    id1_, id0 = Id(1), Id(0)
    ax = [
        Axiom("l-unit", seq(MUL, par(UNIT, id1_)), id1_),
        Axiom("r-unit", seq(MUL, par(id1_, UNIT)), id1_),
        Axiom("assoc", seq(MUL, par(MUL, id1_)), seq(MUL, par(id1_, MUL))),
        Axiom("comm", seq(MUL, SWAP), MUL),
        Axiom("l-counit", seq(par(COUNIT, id1_), COMUL), id1_),
        Axiom("r-counit", seq(par(id1_, COUNIT), COMUL), id1_),
        Axiom("coassoc", seq(par(COMUL, id1_), COMUL), seq(par(id1_, COMUL), COMUL)),
        Axiom("cocomm", seq(SWAP, COMUL), COMUL),
        Axiom("bimonoid", seq(COMUL, MUL),
              seq(par(MUL, MUL), par(id1_, SWAP, id1_), par(COMUL, COMUL))),
        Axiom("comul-unit", seq(COMUL, UNIT), par(UNIT, UNIT)),
        Axiom("counit-mul", seq(COUNIT, MUL), par(COUNIT, COUNIT)),
        Axiom("counit-unit", seq(COUNIT, UNIT), id0),
        Axiom("unit-hom", seq(r, UNIT), UNIT, ("r",)),
        Axiom("mul-hom", seq(r, MUL), seq(MUL, par(r, r)), ("r",)),
        Axiom("counit-hom", seq(COUNIT, r), COUNIT, ("r",)),
        Axiom("comul-hom", seq(COMUL, r), seq(par(r, r), COMUL), ("r",)),
        Axiom("add", seq(MUL, par(r, s), COMUL), Scalar(SAdd(SName("r"), SName("s"))), ("r", "s")),
        Axiom("zero", Scalar(SNum(0)), seq(UNIT, COUNIT)),
        Axiom("mul", seq(r, s), Scalar(SMul(SName("r"), SName("s"))), ("r", "s")),
        Axiom("one", Scalar(SNum(1)), id1_),
    ]
    return ax + swap_axioms()


NAMED_AXIOMS = (
    "l-unit", "r-unit", "assoc", "comm", "l-counit", "r-counit", "coassoc", "cocomm",
    "bimonoid", "comul-unit", "counit-mul", "counit-unit", "unit-hom", "mul-hom",
    "counit-hom", "comul-hom", "add", "zero", "mul", "one",
)


def swap_axioms() -> List[Axiom]:
    """
    Isotopy for swaps: involutivity and naturality of the crossing
    against every generator g : k -> l,

        braid(l) . (g | id(1))  =  (id(1) | g) . braid(k)
    """
    r = scalar("r")
    out = [Axiom("swap-inv", seq(SWAP, SWAP), Id(2))]
    for name, g, sc in [("mul", MUL, ()), ("unit", UNIT, ()), ("comul", COMUL, ()),
                        ("counit", COUNIT, ()), ("swap", SWAP, ()), ("scalar", r, ("r",))]:
        l, k = g.outputs, g.inputs
        out.append(Axiom("swap-nat-" + name,
                         seq(braid(l), par(g, Id(1))),
                         seq(par(Id(1), g), braid(k)), sc))
    return out


def get_axiom(name: str) -> Axiom:
    for ax in axiom_list():
        if ax.name == name:
            return ax
    raise KeyError("no axiom named %r" % (name,))


# ----------------------------------------------------------------
# lift into Mat(C)


def lift_sexpr(e, obj_assignment: Mapping[str, ObjExpr]) -> ObjExpr:
    if isinstance(e, SName):
        if e.name not in obj_assignment:
            raise UnassignedScalar(e.name)
        return obj_assignment[e.name]
    if isinstance(e, SNum):
        if str(e.value) in obj_assignment:
            return obj_assignment[str(e.value)]
        return oplus_all([I] * e.value)
    if isinstance(e, SAdd):
        return Sum(lift_sexpr(e.left, obj_assignment), lift_sexpr(e.right, obj_assignment))
    if isinstance(e, SMul):
        return Prod(lift_sexpr(e.left, obj_assignment), lift_sexpr(e.right, obj_assignment))
    raise TypeError(e)


def lift(t: PathTerm, obj_assignment: Optional[Mapping[str, ObjExpr]] = None) -> Cell1:
    """
    mul -> [I I], comul -> [I; I], unit -> [ ]_{1,0}, counit -> [ ]_{0,1},
    swap -> sigma(1,1), scalar(r) -> [r], seq -> matrix product, par -> block sum.
    """
    obj_assignment = obj_assignment or {}

    def lf(u):
        if isinstance(u, Id):
            return id1(u.k)
        if isinstance(u, Gen):
            if u.kind == "mul":
                return codiagonal(2)
            if u.kind == "comul":
                return diagonal(2)
            if u.kind == "unit":
                return empty(1, 0)
            if u.kind == "counit":
                return empty(0, 1)
            return sigma_boxplus(1, 1)
        if isinstance(u, Scalar):
            return Cell1([[lift_sexpr(u.expr, obj_assignment)]])
        if isinstance(u, Seq):
            return hcomp1(lf(u.left), lf(u.right))
        if isinstance(u, Par):
            return boxplus1(lf(u.top), lf(u.bottom))
        raise TypeError(u)

    return lf(t)


def coning_iso(M: MatC, ax: Axiom, obj_assignment: Optional[Mapping[str, ObjExpr]] = None,
               inverse: bool = False) -> Cell2:
    """The entrywise iso lift(lhs) => lift(rhs), built on scalar-name templates."""
    names = set(term_scalars(ax.lhs)) | set(term_scalars(ax.rhs))
    tpl = {n: Var(n) for n in names}
    obj_assignment = dict(obj_assignment or {})
    missing = names - set(obj_assignment)
    if missing:
        raise UnassignedScalar(", ".join(sorted(missing)))
    return M.synth2(lift(ax.lhs, tpl), lift(ax.rhs, tpl),
                    {n: obj_assignment[n] for n in names}, inverse)
