"""
Concrete bimonoidal categories.

``VecSkel``
    Skeletal finite-dimensional vector spaces over the Gaussian
    rationals.  An object is a dimension, a morphism ``d -> e`` an
    ``e x d`` matrix.  ``(+)`` is block-diagonal, ``(x)`` is Kronecker
    with left-factor-major index order.  Every structural isomorphism is
    a permutation matrix produced by :func:`basis_permutation`.

``BoolCat``
    The poset ``false <= true``; ``(+)`` is "or", ``(x)`` is "and".
    Mat(BoolCat) is the bicategory of relations.

``NatDiscrete``
    The discrete category on the naturals.  Strict, only identities.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from bimat.base import (
    I, O, Base, BaseMor, Bimonoidal, Capabilities, Dual, MorphismTypeError,
    ObjExpr, Prod, Sum, Var, _Unit, _Zero, structural_type,
)
from bimat.scalars import ONE, ZERO, GaussRational, format_gauss, parse_gauss


# ----------------------------------------------------------------
# sparse exact matrices


class Matrix:
    """
    Sparse rows x cols matrix over :class:`GaussRational`.

    Permutation matrices are stored as a tuple ``perm`` with
    ``M[perm[j], j] = 1``; everything else as a dict of nonzero entries.
    """

    __slots__ = ("rows", "cols", "perm", "_data")

    def __init__(self, rows: int, cols: int, data: Optional[Dict] = None, perm=None):
        self.rows = rows
        self.cols = cols
        self.perm = None if perm is None else tuple(perm)
        if self.perm is not None:
            assert rows == cols == len(self.perm)
            self._data = None
        else:
            self._data = {k: v for k, v in (data or {}).items() if v}

    # constructors

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, perm=range(n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, {})

    @classmethod
    def from_rows(cls, rows, shape=None) -> "Matrix":
        rows = [list(r) for r in rows]
        if shape is not None:
            nrows, ncols = shape
            if nrows != len(rows):
                raise ValueError("expected %d rows, got %d" % (nrows, len(rows)))
        else:
            nrows = len(rows)
            ncols = len(rows[0]) if rows else 0
        data = {}
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(r):
                v = GaussRational.coerce(v)
                if v:
                    data[i, j] = v
        return cls(nrows, ncols, data)

    @classmethod
    def from_perm(cls, perm) -> "Matrix":
        return cls(len(perm), len(perm), perm=perm)

    # views

    @property
    def data(self) -> Dict[Tuple[int, int], GaussRational]:
        if self.perm is not None:
            return {(p, j): ONE for j, p in enumerate(self.perm)}
        return self._data

    def __getitem__(self, ij):
        return self.data.get(ij, ZERO)

    def to_rows(self):
        d = self.data
        return [[d.get((i, j), ZERO) for j in range(self.cols)] for i in range(self.rows)]

    def __repr__(self):
        if self.perm is not None:
            return "Matrix(perm=%r)" % (self.perm,)
        return "Matrix(%s)" % [[format_gauss(v) for v in r] for r in self.to_rows()]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        if self.perm is not None and other.perm is not None:
            return self.perm == other.perm
        return self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.data.items())))

    def is_permutation(self) -> bool:
        if self.perm is not None:
            return True
        d = self._data
        if self.rows != self.cols or len(d) != self.rows:
            return False
        rows = {i for i, _ in d}
        cols = {j for _, j in d}
        return len(rows) == len(cols) == self.rows and all(v == ONE for v in d.values())

    # algebra

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        if self.perm is not None and other.perm is not None:
            p = self.perm
            return Matrix.from_perm([p[k] for k in other.perm])
        if self.perm is not None:
            p = self.perm
            return Matrix(self.rows, other.cols, {(p[i], j): v for (i, j), v in other._data.items()})
        if other.perm is not None:
            inv = [0] * other.cols
            for c, r in enumerate(other.perm):
                inv[r] = c
            return Matrix(self.rows, other.cols, {(i, inv[j]): v for (i, j), v in self._data.items()})
        by_row: Dict[int, list] = {}
        for (k, j), v in other._data.items():
            by_row.setdefault(k, []).append((j, v))
        out: Dict[Tuple[int, int], GaussRational] = {}
        for (i, k), a in self._data.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                out[key] = out[key] + a * b if key in out else a * b
        return Matrix(self.rows, other.cols, out)

    def kron(self, other: "Matrix") -> "Matrix":
        rb, cb = other.rows, other.cols
        if self.perm is not None and other.perm is not None:
            pa, pb = self.perm, other.perm
            return Matrix.from_perm([pa[ja] * rb + pb[jb]
                                     for ja in range(self.cols) for jb in range(cb)])
        out = {}
        for (ia, ja), a in self.data.items():
            for (ib, jb), b in other.data.items():
                out[ia * rb + ib, ja * cb + jb] = b if a is ONE else (a if b is ONE else a * b)
        return Matrix(self.rows * rb, self.cols * cb, out)

    def block_diag(self, other: "Matrix") -> "Matrix":
        if self.perm is not None and other.perm is not None:
            n = self.rows
            return Matrix.from_perm(list(self.perm) + [p + n for p in other.perm])
        r, c = self.rows, self.cols
        out = dict(self.data)
        for (i, j), v in other.data.items():
            out[i + r, j + c] = v
        return Matrix(r + other.rows, c + other.cols, out)

    def conj_transpose(self) -> "Matrix":
        if self.perm is not None:
            inv = [0] * self.rows
            for c, r in enumerate(self.perm):
                inv[r] = c
            return Matrix.from_perm(inv)
        return Matrix(self.cols, self.rows, {(j, i): v.conj() for (i, j), v in self._data.items()})

    def transpose(self) -> "Matrix":
        if self.perm is not None:
            return self.conj_transpose()
        return Matrix(self.cols, self.rows, {(j, i): v for (i, j), v in self._data.items()})

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in +")
        out = dict(self.data)
        for k, v in other.data.items():
            out[k] = out[k] + v if k in out else v
        return Matrix(self.rows, self.cols, out)

    def scale(self, z) -> "Matrix":
        z = GaussRational.coerce(z)
        return Matrix(self.rows, self.cols, {k: z * v for k, v in self.data.items()})


def kron(M: Matrix, N: Matrix) -> Matrix:
    return M.kron(N)


def block_diag(M: Matrix, N: Matrix) -> Matrix:
    return M.block_diag(N)


# ----------------------------------------------------------------
# basis enumeration (the one routine behind every structural permutation)


def basis_labels(a: ObjExpr, dim_of_leaf) -> list:
    """
    Basis of ``a`` in index order.  A basis vector is labelled by the
    sorted tuple of (leaf, coordinate) pairs it is built from: a sum
    lists its left summand first, a product is left-factor major.
    Leaves must be pairwise distinct for labels to be unique.
    """
    if isinstance(a, _Zero):
        return []
    if isinstance(a, _Unit):
        return [()]
    if isinstance(a, Sum):
        return basis_labels(a.left, dim_of_leaf) + basis_labels(a.right, dim_of_leaf)
    if isinstance(a, Prod):
        L = basis_labels(a.left, dim_of_leaf)
        R = basis_labels(a.right, dim_of_leaf)
        return [tuple(sorted(l + r)) for l in L for r in R]
    return [((a.name if isinstance(a, Var) else repr(a), x),) for x in range(dim_of_leaf(a))]


def basis_permutation(src: ObjExpr, dst: ObjExpr, dim_of_leaf) -> Tuple[int, ...]:
    """perm[j] = index in ``dst`` of the j-th basis vector of ``src``."""
    S = basis_labels(src, dim_of_leaf)
    T = basis_labels(dst, dim_of_leaf)
    index = {lab: k for k, lab in enumerate(T)}
    if len(index) != len(T) or len(S) != len(T):
        raise ValueError("basis labels do not match: %s vs %s" % (src, dst))
    return tuple(index[lab] for lab in S)


_ARGVARS = (Var("X0"), Var("X1"), Var("X2"))


@lru_cache(maxsize=None)
def structural_perm(name: str, dims: Tuple[int, ...], inverse: bool) -> Tuple[int, ...]:
    args = _ARGVARS[:len(dims)]
    _, _, dom, cod = structural_type(name, args)
    dmap = dict(zip((v.name for v in args), dims))
    leaf = lambda v: dmap[v.name]
    if inverse:
        return basis_permutation(cod, dom, leaf)
    return basis_permutation(dom, cod, leaf)


# ----------------------------------------------------------------
# VecSkel


class VecSkel(Bimonoidal):
    name = "vecskel"
    caps = Capabilities(mult_symmetry=True, biproducts=True, duals=True, dagger=True)

    def parse_handle(self, text):
        d = int(text)
        if d < 0:
            raise ValueError("dimension must be >= 0")
        return d

    def check_handle(self, h):
        if not isinstance(h, int) or isinstance(h, bool) or h < 0:
            raise MorphismTypeError("VecSkel object must be a natural number, got %r" % (h,))

    def dim(self, a: ObjExpr) -> int:
        return dim_of(a)

    def morphism(self, dom: ObjExpr, cod: ObjExpr, M) -> BaseMor:
        if not isinstance(M, Matrix):
            try:
                M = Matrix.from_rows(M, (dim_of(cod), dim_of(dom)))
            except ValueError as exc:
                raise MorphismTypeError(str(exc)) from None
        if (M.rows, M.cols) != (dim_of(cod), dim_of(dom)):
            raise MorphismTypeError("matrix is %dx%d, expected %dx%d"
                                    % (M.rows, M.cols, dim_of(cod), dim_of(dom)))
        return BaseMor(dom, cod, M)

    def scalar(self, value) -> BaseMor:
        return BaseMor(I, I, Matrix.from_rows([[GaussRational.coerce(value)]]))

    def format_mor(self, f: BaseMor):
        return [[format_gauss(v) for v in row] for row in f.payload.to_rows()]

    def parse_mor(self, dom, cod, rows) -> BaseMor:
        M = Matrix.from_rows([[parse_gauss(v) for v in r] for r in rows],
                             (dim_of(cod), dim_of(dom)))
        return self.morphism(dom, cod, M)

    def _p_identity(self, a):
        return Matrix.identity(dim_of(a))

    def _p_compose(self, f, g):
        return g.payload @ f.payload

    def _p_oplus(self, f, g):
        return f.payload.block_diag(g.payload)

    def _p_otimes(self, f, g):
        return f.payload.kron(g.payload)

    def _p_dagger(self, f):
        return f.payload.conj_transpose()

    def _p_zero(self, a, b):
        return Matrix.zeros(dim_of(b), dim_of(a))

    def _p_diag(self, a):
        d = dim_of(a)
        return Matrix(2 * d, d, {**{(j, j): ONE for j in range(d)},
                                 **{(d + j, j): ONE for j in range(d)}})

    def _p_codiag(self, a):
        d = dim_of(a)
        return Matrix(d, 2 * d, {**{(j, j): ONE for j in range(d)},
                                 **{(j, d + j): ONE for j in range(d)}})

    def _p_dual_counit(self, a):
        # d* = d; pairs basis (j, j) of a (x) a*
        d = dim_of(a)
        return Matrix(1, d * d, {(0, j * d + j): ONE for j in range(d)})

    def _p_dual_unit(self, a):
        d = dim_of(a)
        return Matrix(d * d, 1, {(j * d + j, 0): ONE for j in range(d)})

    def _p_structural(self, name, args, inverse):
        return Matrix.from_perm(structural_perm(name, tuple(dim_of(a) for a in args), inverse))


@lru_cache(maxsize=65536)
def dim_of(a: ObjExpr) -> int:
    """Dimension of a VecSkel object expression."""
    if isinstance(a, _Zero):
        return 0
    if isinstance(a, _Unit):
        return 1
    if isinstance(a, Base):
        h = a.handle
        if not isinstance(h, int) or isinstance(h, bool) or h < 0:
            raise MorphismTypeError("foreign leaf %r in a VecSkel expression" % (h,))
        return h
    if isinstance(a, Dual):
        return dim_of(a.arg)
    if isinstance(a, Sum):
        return dim_of(a.left) + dim_of(a.right)
    if isinstance(a, Prod):
        return dim_of(a.left) * dim_of(a.right)
    raise MorphismTypeError("cannot take the dimension of %s" % (a,))


# ----------------------------------------------------------------
# thin instances


class _Thin(Bimonoidal):
    """A category with at most one morphism between two objects; payload is None."""

    def value(self, a: ObjExpr):
        raise NotImplementedError

    def hom(self, x, y) -> bool:
        raise NotImplementedError

    def _check(self, dom, cod):
        if not self.hom(self.value(dom), self.value(cod)):
            raise MorphismTypeError("%s has no morphism %s -> %s" % (self.name, self.fmt(dom), self.fmt(cod)))
        return BaseMor(dom, cod, None)

    def morphism(self, dom, cod, payload=None) -> BaseMor:
        return self._check(dom, cod)

    def format_mor(self, f):
        return None

    def parse_mor(self, dom, cod, data) -> BaseMor:
        return self._check(dom, cod)

    def compose(self, f, g):
        if f.cod != g.dom:
            raise MorphismTypeError(
                "cannot compose: cod %s != dom %s" % (self.fmt(f.cod), self.fmt(g.dom)))
        return self._check(f.dom, g.cod)

    def oplus(self, f, g):
        return self._check(Sum(f.dom, g.dom), Sum(f.cod, g.cod))

    def otimes(self, f, g):
        return self._check(Prod(f.dom, g.dom), Prod(f.cod, g.cod))

    def structural(self, name, args, inverse=False):
        name, cap, dom, cod = structural_type(name, args)
        if cap:
            self.require(cap)
        return self._check(cod, dom) if inverse else self._check(dom, cod)

    def _p_identity(self, a):
        return None


class BoolCat(_Thin):
    name = "bool"
    caps = Capabilities(mult_symmetry=True)

    def parse_handle(self, text):
        if text in ("true", "1", "T"):
            return True
        if text in ("false", "0", "F"):
            return False
        raise ValueError("BoolCat object must be true or false, got %r" % text)

    def check_handle(self, h):
        if not isinstance(h, bool):
            raise MorphismTypeError("BoolCat object must be a bool, got %r" % (h,))

    def value(self, a):
        return bool_value(a)

    def hom(self, x, y):
        # implication order: false -> true
        return (not x) or y


def bool_value(a: ObjExpr) -> bool:
    if isinstance(a, _Zero):
        return False
    if isinstance(a, _Unit):
        return True
    if isinstance(a, Base):
        if not isinstance(a.handle, bool):
            raise MorphismTypeError("foreign leaf %r in a BoolCat expression" % (a.handle,))
        return a.handle
    if isinstance(a, Sum):
        return bool_value(a.left) or bool_value(a.right)
    if isinstance(a, Prod):
        return bool_value(a.left) and bool_value(a.right)
    raise MorphismTypeError("BoolCat has no %s" % (a,))


def bool_hom(a: bool, b: bool) -> Optional[BaseMor]:
    """The unique morphism a -> b of the truth-value poset, if any."""
    if (not a) or b:
        return BaseMor(Base(a), Base(b), None)
    return None


class NatDiscrete(_Thin):
    name = "natdiscrete"
    caps = Capabilities(mult_symmetry=True)

    def parse_handle(self, text):
        n = int(text)
        if n < 0:
            raise ValueError("NatDiscrete object must be >= 0")
        return n

    def check_handle(self, h):
        if not isinstance(h, int) or isinstance(h, bool) or h < 0:
            raise MorphismTypeError("NatDiscrete object must be a natural number, got %r" % (h,))

    def value(self, a):
        return nat_value(a)

    def hom(self, x, y):
        return x == y


def nat_value(a: ObjExpr) -> int:
    if isinstance(a, _Zero):
        return 0
    if isinstance(a, _Unit):
        return 1
    if isinstance(a, Base):
        return a.handle
    if isinstance(a, Sum):
        return nat_value(a.left) + nat_value(a.right)
    if isinstance(a, Prod):
        return nat_value(a.left) * nat_value(a.right)
    raise MorphismTypeError("NatDiscrete has no %s" % (a,))


INSTANCES = {"bool": BoolCat, "vecskel": VecSkel, "natdiscrete": NatDiscrete}


def get_instance(name: str) -> Bimonoidal:
    try:
        return INSTANCES[name]()
    except KeyError:
        raise ValueError("unknown instance %r (choose from %s)" % (name, ", ".join(INSTANCES))) from None
