"""
Objects, morphisms and the bimonoidal-category contract.

An object of the base category is an :class:`ObjExpr`: a formal
``(+)``/``(x)`` tree over base-object leaves, the zero object ``O`` and
the unit ``I``.  Nothing is simplified on construction; every
simplification is an explicit structural isomorphism (see
:mod:`bimat.synth`).

Instances subclass :class:`Bimonoidal` and supply payload-level
operations (the ``_p_*`` hooks).  The base class does all the typing:
domains and codomains are checked structurally on every composition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Optional, Sequence


class CapabilityError(Exception):
    pass


class MorphismTypeError(TypeError):
    pass


class NotStructurallyIsomorphic(ValueError):
    pass


# ----------------------------------------------------------------
# object expressions


class ObjExpr:
    __slots__ = ("_hash",)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "ObjExpr(%r)" % format_obj(self)

    def __str__(self):
        return format_obj(self)


class _Zero(ObjExpr):
    __slots__ = ()

    def __init__(self):
        self._hash = hash("O")

    __hash__ = ObjExpr.__hash__

    def __eq__(self, other):
        return other is self or isinstance(other, _Zero)

    def __reduce__(self):
        return (_Zero, ())


class _Unit(ObjExpr):
    __slots__ = ()

    def __init__(self):
        self._hash = hash("I")

    __hash__ = ObjExpr.__hash__

    def __eq__(self, other):
        return other is self or isinstance(other, _Unit)

    def __reduce__(self):
        return (_Unit, ())


O = _Zero()
I = _Unit()


class Base(ObjExpr):
    """A base-object leaf; ``handle`` is instance data (a dimension, a bool...)."""

    __slots__ = ("handle",)

    def __init__(self, handle):
        self.handle = handle
        self._hash = hash(("Base", type(handle).__name__, handle))

    __hash__ = ObjExpr.__hash__

    def __eq__(self, other):
        if other is self:
            return True
        # bool is an int subclass: keep Base(True) and Base(1) apart
        return (isinstance(other, Base) and type(other.handle) is type(self.handle)
                and other.handle == self.handle)


class Var(ObjExpr):
    """A template variable.  Only used while synthesizing coherence isos."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name
        self._hash = hash(("Var", name))

    __hash__ = ObjExpr.__hash__

    def __eq__(self, other):
        return other is self or (isinstance(other, Var) and other.name == self.name)


class Dual(ObjExpr):
    __slots__ = ("arg",)

    def __init__(self, arg: ObjExpr):
        self.arg = arg
        self._hash = hash(("Dual", arg._hash))

    __hash__ = ObjExpr.__hash__

    def __eq__(self, other):
        if other is self:
            return True
        return (isinstance(other, Dual) and other._hash == self._hash
                and other.arg == self.arg)


class _Binary(ObjExpr):
    __slots__ = ("left", "right")
    tag = "?"

    def __init__(self, left: ObjExpr, right: ObjExpr):
        assert isinstance(left, ObjExpr) and isinstance(right, ObjExpr), (left, right)
        self.left = left
        self.right = right
        self._hash = hash((self.tag, left._hash, right._hash))

    __hash__ = ObjExpr.__hash__

    def __eq__(self, other):
        if other is self:
            return True
        return (type(other) is type(self) and other._hash == self._hash
                and other.left == self.left and other.right == self.right)


class Sum(_Binary):
    __slots__ = ()
    tag = "+"


class Prod(_Binary):
    __slots__ = ()
    tag = "x"


def dual(a: ObjExpr) -> ObjExpr:
    """Dual object.  ``I* = I`` and ``O* = O`` on the nose."""
    if a == I or a == O:
        return a
    return Dual(a)


def oplus_all(items: Sequence[ObjExpr]) -> ObjExpr:
    """Left-nested sum; empty sum is O, a singleton is itself."""
    if not items:
        return O
    e = items[0]
    for x in items[1:]:
        e = Sum(e, x)
    return e


def otimes_all(items: Sequence[ObjExpr]) -> ObjExpr:
    if not items:
        return I
    e = items[0]
    for x in items[1:]:
        e = Prod(e, x)
    return e


def substitute(a: ObjExpr, subst, memo=None) -> ObjExpr:
    if not subst:
        return a
    if memo is None:
        memo = {}
    key = id(a)
    if key in memo:
        return memo[key][1]
    if isinstance(a, Var):
        out = subst.get(a.name, a)
    elif isinstance(a, Dual):
        out = dual(substitute(a.arg, subst, memo))
    elif isinstance(a, _Binary):
        left = substitute(a.left, subst, memo)
        right = substitute(a.right, subst, memo)
        out = a if (left is a.left and right is a.right) else type(a)(left, right)
    else:
        out = a
    memo[key] = (a, out)  # keep `a` alive so id() stays unique
    return out


def leaves(a: ObjExpr):
    if isinstance(a, _Binary):
        yield from leaves(a.left)
        yield from leaves(a.right)
    else:
        yield a


# text syntax:  O  I  #name  ?var  a (+) b  a (x) b  dual(a)


def format_obj(a: ObjExpr, fmt_handle: Callable[[Any], str] = None) -> str:
    fmt_handle = fmt_handle or _default_handle_fmt
    if isinstance(a, _Zero):
        return "O"
    if isinstance(a, _Unit):
        return "I"
    if isinstance(a, Base):
        return "#" + fmt_handle(a.handle)
    if isinstance(a, Var):
        return "?" + a.name
    if isinstance(a, Dual):
        return "dual(%s)" % format_obj(a.arg, fmt_handle)
    if isinstance(a, Sum):
        left = format_obj(a.left, fmt_handle)
        right = format_obj(a.right, fmt_handle)
        if isinstance(a.right, Sum):
            right = "(%s)" % right
        return "%s (+) %s" % (left, right)
    if isinstance(a, Prod):
        left = format_obj(a.left, fmt_handle)
        right = format_obj(a.right, fmt_handle)
        if isinstance(a.left, Sum):
            left = "(%s)" % left
        if isinstance(a.right, (Sum, Prod)):
            right = "(%s)" % right
        return "%s (x) %s" % (left, right)
    raise TypeError(a)


def _default_handle_fmt(h) -> str:
    if isinstance(h, bool):
        return "true" if h else "false"
    return str(h)


class ObjSyntaxError(ValueError):
    def __init__(self, msg, pos):
        super().__init__("%s at position %d" % (msg, pos))
        self.pos = pos


_OBJ_TOKEN = re.compile(
    r"\s*(?:(?P<plus>\(\+\))|(?P<times>\(x\))|(?P<dual>dual\s*\()|(?P<lp>\()|(?P<rp>\))"
    r"|(?P<base>#[A-Za-z0-9_.\-]+)|(?P<var>\?[A-Za-z0-9_.]+)|(?P<kw>[OI])(?![A-Za-z0-9_]))"
)


def parse_obj(text: str, parse_handle: Callable[[str], Any] = None) -> ObjExpr:
    parse_handle = parse_handle or (lambda s: s)
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _OBJ_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ObjSyntaxError("unexpected character %r" % text[pos:pos + 1], pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def peek():
        return tokens[i][0]

    def take(kind):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            raise ObjSyntaxError("expected %s, found %r" % (kind, tok[1] or "end"), tok[2])
        i += 1
        return tok

    def p_sum():
        e = p_prod()
        while peek() == "plus":
            take("plus")
            e = Sum(e, p_prod())
        return e

    def p_prod():
        e = p_atom()
        while peek() == "times":
            take("times")
            e = Prod(e, p_atom())
        return e

    def p_atom():
        nonlocal i
        kind, val, at = tokens[i]
        if kind == "kw":
            i += 1
            return O if val == "O" else I
        if kind == "base":
            i += 1
            try:
                return Base(parse_handle(val[1:]))
            except ValueError as exc:
                raise ObjSyntaxError(str(exc), at) from None
        if kind == "var":
            i += 1
            return Var(val[1:])
        if kind == "dual":
            i += 1
            e = p_sum()
            take("rp")
            return dual(e)
        if kind == "lp":
            i += 1
            e = p_sum()
            take("rp")
            return e
        raise ObjSyntaxError("unexpected %r" % (val or "end"), at)

    e = p_sum()
    take("end")
    return e


# ----------------------------------------------------------------
# morphisms


@dataclass(frozen=True)
class BaseMor:
    dom: ObjExpr
    cod: ObjExpr
    payload: Any = None

    def __repr__(self):
        return "BaseMor(%s -> %s, %r)" % (self.dom, self.cod, self.payload)


@dataclass(frozen=True)
class Capabilities:
    mult_symmetry: bool = False
    biproducts: bool = False
    duals: bool = False
    dagger: bool = False


# name -> (arity, capability or None, dom template, cod template)
def _x(a, b):
    return Prod(a, b)


def _p(a, b):
    return Sum(a, b)


STRUCTURAL = {
    "assoc+": (3, None, lambda a, b, c: _p(_p(a, b), c), lambda a, b, c: _p(a, _p(b, c))),
    "lunit+": (1, None, lambda a: _p(O, a), lambda a: a),
    "runit+": (1, None, lambda a: _p(a, O), lambda a: a),
    "sym+": (2, None, lambda a, b: _p(a, b), lambda a, b: _p(b, a)),
    "assoc*": (3, None, lambda a, b, c: _x(_x(a, b), c), lambda a, b, c: _x(a, _x(b, c))),
    "lunit*": (1, None, lambda a: _x(I, a), lambda a: a),
    "runit*": (1, None, lambda a: _x(a, I), lambda a: a),
    "sym*": (2, "mult_symmetry", lambda a, b: _x(a, b), lambda a, b: _x(b, a)),
    "distl": (3, None, lambda a, b, c: _x(a, _p(b, c)), lambda a, b, c: _p(_x(a, b), _x(a, c))),
    "distr": (3, None, lambda a, b, c: _x(_p(a, b), c), lambda a, b, c: _p(_x(a, c), _x(b, c))),
    "nulll": (1, None, lambda a: _x(O, a), lambda a: O),
    "nullr": (1, None, lambda a: _x(a, O), lambda a: O),
}

ALIASES = {
    "assoc⊕": "assoc+", "lunit⊕": "lunit+", "runit⊕": "runit+", "sym⊕": "sym+",
    "assoc⊗": "assoc*", "lunit⊗": "lunit*", "runit⊗": "runit*", "sym⊗": "sym*",
}


def structural_type(name: str, args: Sequence[ObjExpr]):
    name = ALIASES.get(name, name)
    if name not in STRUCTURAL:
        raise KeyError("unknown structural isomorphism %r" % (name,))
    arity, cap, dom, cod = STRUCTURAL[name]
    if len(args) != arity:
        raise MorphismTypeError("%s takes %d objects, got %d" % (name, arity, len(args)))
    return name, cap, dom(*args), cod(*args)


class Bimonoidal:
    """
    Contract for a bimonoidal base category.

    ``compose(f, g)`` is diagrammatic: first ``f`` then ``g``.
    """

    name = "abstract"
    caps = Capabilities()

    def __repr__(self):
        return "%s()" % type(self).__name__

    def require(self, *flags):
        for flag in flags:
            if not getattr(self.caps, flag):
                raise CapabilityError("%s lacks the %s capability" % (self.name, flag))

    # objects -------------------------------------------------------

    def parse_handle(self, text: str):
        raise NotImplementedError

    def format_handle(self, h) -> str:
        return _default_handle_fmt(h)

    def obj(self, text: str) -> ObjExpr:
        return parse_obj(text, self.parse_handle)

    def fmt(self, a: ObjExpr) -> str:
        return format_obj(a, self.format_handle)

    def check_handle(self, h):
        pass

    # morphisms -----------------------------------------------------

    def identity(self, a: ObjExpr) -> BaseMor:
        return BaseMor(a, a, self._p_identity(a))

    def compose(self, f: BaseMor, g: BaseMor) -> BaseMor:
        if f.cod != g.dom:
            raise MorphismTypeError(
                "cannot compose: cod %s != dom %s" % (self.fmt(f.cod), self.fmt(g.dom)))
        return BaseMor(f.dom, g.cod, self._p_compose(f, g))

    def compose_all(self, fs: Sequence[BaseMor]) -> BaseMor:
        f = fs[0]
        for g in fs[1:]:
            f = self.compose(f, g)
        return f

    def oplus(self, f: BaseMor, g: BaseMor) -> BaseMor:
        return BaseMor(Sum(f.dom, g.dom), Sum(f.cod, g.cod), self._p_oplus(f, g))

    def otimes(self, f: BaseMor, g: BaseMor) -> BaseMor:
        return BaseMor(Prod(f.dom, g.dom), Prod(f.cod, g.cod), self._p_otimes(f, g))

    def oplus_all(self, fs: Sequence[BaseMor]) -> BaseMor:
        """Left-nested, matching :func:`oplus_all` on objects; empty gives 1_O."""
        if not fs:
            return self.identity(O)
        f = fs[0]
        for g in fs[1:]:
            f = self.oplus(f, g)
        return f

    def dagger(self, f: BaseMor) -> BaseMor:
        self.require("dagger")
        return BaseMor(f.cod, f.dom, self._p_dagger(f))

    def zero(self, a: ObjExpr, b: ObjExpr) -> BaseMor:
        self.require("biproducts")
        return BaseMor(a, b, self._p_zero(a, b))

    def diag(self, a: ObjExpr) -> BaseMor:
        """Biproduct diagonal a -> a (+) a."""
        self.require("biproducts")
        return BaseMor(a, Sum(a, a), self._p_diag(a))

    def codiag(self, a: ObjExpr) -> BaseMor:
        """Biproduct codiagonal (fold) a (+) a -> a."""
        self.require("biproducts")
        return BaseMor(Sum(a, a), a, self._p_codiag(a))

    def dual_counit(self, a: ObjExpr) -> BaseMor:
        """epsilon_a : a (x) a* -> I"""
        self.require("duals")
        return BaseMor(Prod(a, dual(a)), I, self._p_dual_counit(a))

    def dual_unit(self, a: ObjExpr) -> BaseMor:
        """eta_a : I -> a* (x) a"""
        self.require("duals")
        return BaseMor(I, Prod(dual(a), a), self._p_dual_unit(a))

    def structural(self, name: str, args: Sequence[ObjExpr], inverse: bool = False) -> BaseMor:
        name, cap, dom, cod = structural_type(name, args)
        if cap:
            self.require(cap)
        payload = self._p_structural(name, tuple(args), inverse)
        if inverse:
            return BaseMor(cod, dom, payload)
        return BaseMor(dom, cod, payload)

    def scalar(self, value) -> BaseMor:
        """The scalar ``value`` as a morphism I -> I (instances with a scalar field)."""
        raise CapabilityError("%s has no scalars" % self.name)

    def scale(self, s: BaseMor, f: BaseMor) -> BaseMor:
        """s . f  built as  lunit o (s (x) f) o lunit^-1."""
        if s.dom != I or s.cod != I:
            raise MorphismTypeError("a scalar must be a morphism I -> I")
        return self.compose_all([
            self.structural("lunit*", [f.dom], inverse=True),
            self.otimes(s, f),
            self.structural("lunit*", [f.cod]),
        ])

    # payload hooks ---------------------------------------------------

    def _p_identity(self, a):
        raise NotImplementedError

    def _p_compose(self, f, g):
        raise NotImplementedError

    def _p_oplus(self, f, g):
        raise NotImplementedError

    def _p_otimes(self, f, g):
        raise NotImplementedError

    def _p_dagger(self, f):
        raise NotImplementedError

    def _p_zero(self, a, b):
        raise NotImplementedError

    def _p_diag(self, a):
        raise NotImplementedError

    def _p_codiag(self, a):
        raise NotImplementedError

    def _p_dual_counit(self, a):
        raise NotImplementedError

    def _p_dual_unit(self, a):
        raise NotImplementedError

    def _p_structural(self, name, args, inverse):
        raise NotImplementedError


def copy_to(cat: Bimonoidal, a: ObjExpr, k: int) -> BaseMor:
    """a -> a (+) ... (+) a  (k copies, left-nested) from biproduct diagonals."""
    if k == 0:
        return cat.zero(a, O)
    f = cat.identity(a)
    for j in range(1, k):
        # a -> (a^{j}) (+) a
        f = cat.compose(cat.diag(a), cat.oplus(f, cat.identity(a)))
    return f


def fold_from(cat: Bimonoidal, a: ObjExpr, k: int) -> BaseMor:
    """a (+) ... (+) a -> a  (k copies, left-nested)."""
    if k == 0:
        return cat.zero(O, a)
    f = cat.identity(a)
    for j in range(1, k):
        f = cat.compose(cat.oplus(f, cat.identity(a)), cat.codiag(a))
    return f


def add_mor(cat: Bimonoidal, f: BaseMor, g: BaseMor) -> BaseMor:
    """f + g  =  codiag o (f (+) g) o diag  (needs biproducts)."""
    if f.dom != g.dom or f.cod != g.cod:
        raise MorphismTypeError("f + g needs parallel morphisms")
    return cat.compose_all([cat.diag(f.dom), cat.oplus(f, g), cat.codiag(f.cod)])
