"""
The bicategory Mat(C).

0-cells are natural numbers, a 1-cell ``m -> n`` is an ``m x n`` matrix
of objects (:class:`Cell1`) and a 2-cell is a matrix of base morphisms
between two equal-shape 1-cells (:class:`Cell2`).  Horizontal
composition is matrix multiplication with ``(+)``/``(x)``::

    (AB)_ik = A_i0 (x) B_0k (+) A_i1 (x) B_1k (+) ...

left-nested over ascending ``j``; an empty sum is ``O``.  Nothing is
simplified on the nose.  Associators, unitors and the rest are built
entrywise from synthesized structural isomorphisms on *templates*: the
cells are first replaced by matrices of distinct variables, the plan is
built there and only then realized at the actual entries.  This keeps
the permutation of summands right when two entries happen to coincide.
"""

from __future__ import annotations

from typing import Dict, Optional, Sequence

from bimat.base import (
    I, O, BaseMor, Bimonoidal, MorphismTypeError, ObjExpr, Prod, Sum, Var, oplus_all, substitute,
)
from bimat.synth import evaluate, normal_form, synth_plan


# ----------------------------------------------------------------
# 1-cells


class Cell1:
    """An m x n matrix of objects."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, entries, rows: Optional[int] = None, cols: Optional[int] = None):
        entries = tuple(tuple(r) for r in entries)
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entries do not have shape %dx%d" % (rows, cols))
        for r in entries:
            for a in r:
                if not isinstance(a, ObjExpr):
                    raise TypeError("Cell1 entry %r is not an ObjExpr" % (a,))
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = hash((rows, cols, entries))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, Cell1) and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.rows or not self.cols:
            return "Cell1([ ]_%d,%d)" % self.shape
        return "Cell1([%s])" % "; ".join(", ".join(map(str, r)) for r in self.entries)

    def map(self, fn) -> "Cell1":
        return Cell1([[fn(a) for a in r] for r in self.entries], self.rows, self.cols)


def id1(m: int) -> Cell1:
    return Cell1([[I if i == j else O for j in range(m)] for i in range(m)], m, m)


def zero1(m: int, n: int) -> Cell1:
    return Cell1([[O] * n for _ in range(m)], m, n)


def empty(m: int, n: int) -> Cell1:
    """[ ]_{m,n}; only meaningful when m or n is 0."""
    if m and n:
        raise ValueError("[ ]_{m,n} needs m = 0 or n = 0")
    return zero1(m, n)


def hcomp1(A: Cell1, B: Cell1) -> Cell1:
    if A.cols != B.rows:
        raise MorphismTypeError("cannot compose %dx%d with %dx%d" % (A.rows, A.cols, B.rows, B.cols))
    m = A.cols
    return Cell1([[oplus_all([Prod(A.entries[i][j], B.entries[j][k]) for j in range(m)])
                   for k in range(B.cols)] for i in range(A.rows)], A.rows, B.cols)


def hcomp1_all(cells: Sequence[Cell1]) -> Cell1:
    """Left-nested: ((A B) C) ..."""
    out = cells[0]
    for c in cells[1:]:
        out = hcomp1(out, c)
    return out


def boxplus1(A: Cell1, B: Cell1) -> Cell1:
    m, n = A.rows + B.rows, A.cols + B.cols
    rows = [list(r) + [O] * B.cols for r in A.entries]
    rows += [[O] * A.cols + list(r) for r in B.entries]
    return Cell1(rows, m, n)


def sigma_boxplus(m: int, n: int) -> Cell1:
    """[[0_{n,m}, 1_n], [1_m, 0_{m,n}]] : (n+m) x (m+n)."""
    rows = []
    for i in range(n + m):
        row = []
        for j in range(m + n):
            if i < n:
                row.append(I if j >= m and j - m == i else O)
            else:
                row.append(I if j < m and j == i - n else O)
        rows.append(row)
    return Cell1(rows, n + m, m + n)


def diagonal(k: int) -> Cell1:
    """k x 1 column of I."""
    return Cell1([[I] for _ in range(k)], k, 1)


def codiagonal(k: int) -> Cell1:
    """1 x k row of I."""
    return Cell1([[I] * k], 1, k)


def template(prefix: str, m: int, n: int) -> Cell1:
    return Cell1([[Var("%s%d_%d" % (prefix, i, j)) for j in range(n)] for i in range(m)], m, n)


def bind(prefix: str, A: Cell1, into: Optional[Dict] = None) -> Dict[str, ObjExpr]:
    out = {} if into is None else into
    for i, r in enumerate(A.entries):
        for j, a in enumerate(r):
            out["%s%d_%d" % (prefix, i, j)] = a
    return out


# ----------------------------------------------------------------
# 2-cells


class Cell2:
    """An m x n matrix of base morphisms dom[i][j] -> cod[i][j]."""

    __slots__ = ("dom", "cod", "mors")

    def __init__(self, dom: Cell1, cod: Cell1, mors, check: bool = True):
        mors = tuple(tuple(r) for r in mors)
        self.dom = dom
        self.cod = cod
        self.mors = mors
        if check:
            if dom.shape != cod.shape:
                raise MorphismTypeError("2-cell between 1-cells of shapes %s and %s" % (dom.shape, cod.shape))
            if len(mors) != dom.rows or any(len(r) != dom.cols for r in mors):
                raise MorphismTypeError("2-cell entries do not have shape %dx%d" % dom.shape)
            for i, r in enumerate(mors):
                for j, f in enumerate(r):
                    if f.dom != dom.entries[i][j] or f.cod != cod.entries[i][j]:
                        raise MorphismTypeError(
                            "entry (%d,%d) is %s -> %s, expected %s -> %s"
                            % (i, j, f.dom, f.cod, dom.entries[i][j], cod.entries[i][j]))

    @property
    def shape(self):
        return self.dom.shape

    def __getitem__(self, ij):
        i, j = ij
        return self.mors[i][j]

    def __eq__(self, other):
        return (isinstance(other, Cell2) and self.dom == other.dom and self.cod == other.cod
                and all(f.payload == g.payload for r, s in zip(self.mors, other.mors)
                        for f, g in zip(r, s)))

    __hash__ = None

    def __repr__(self):
        return "Cell2(%r => %r, %r)" % (self.dom, self.cod, [[f.payload for f in r] for r in self.mors])


class MatC:
    """Mat(C) over the base category ``cat``."""

    def __init__(self, cat: Bimonoidal):
        self.cat = cat

    def __repr__(self):
        return "MatC(%r)" % (self.cat,)

    # cells --------------------------------------------------------

    def cell1(self, rows) -> Cell1:
        """Build a 1-cell from nested lists of ObjExpr or object text."""
        return Cell1([[self.cat.obj(a) if isinstance(a, str) else a for a in r] for r in rows])

    def cell2(self, dom: Cell1, cod: Cell1, mors) -> Cell2:
        return Cell2(dom, cod, mors)

    def id2(self, A: Cell1) -> Cell2:
        cat = self.cat
        return Cell2(A, A, [[cat.identity(a) for a in r] for r in A.entries], check=False)

    def vcomp(self, f: Cell2, g: Cell2) -> Cell2:
        """f then g."""
        if f.cod != g.dom:
            raise MorphismTypeError("vcomp: cod of the first 2-cell is not the dom of the second")
        cat = self.cat
        return Cell2(f.dom, g.cod, [[cat.compose(a, b) for a, b in zip(r, s)]
                                    for r, s in zip(f.mors, g.mors)], check=False)

    def vcomp_all(self, fs: Sequence[Cell2]) -> Cell2:
        out = fs[0]
        for g in fs[1:]:
            out = self.vcomp(out, g)
        return out

    def hcomp2(self, f: Cell2, g: Cell2) -> Cell2:
        if f.shape[1] != g.shape[0]:
            raise MorphismTypeError("hcomp2: shapes %s and %s" % (f.shape, g.shape))
        cat = self.cat
        m = f.shape[1]
        mors = [[cat.oplus_all([cat.otimes(f.mors[i][j], g.mors[j][k]) for j in range(m)])
                 for k in range(g.shape[1])] for i in range(f.shape[0])]
        return Cell2(hcomp1(f.dom, g.dom), hcomp1(f.cod, g.cod), mors, check=False)

    def whisker_l(self, A: Cell1, f: Cell2) -> Cell2:
        """A . f"""
        return self.hcomp2(self.id2(A), f)

    def whisker_r(self, f: Cell2, B: Cell1) -> Cell2:
        """f . B"""
        return self.hcomp2(f, self.id2(B))

    def boxplus2(self, f: Cell2, g: Cell2) -> Cell2:
        cat = self.cat
        idO = cat.identity(O)
        rows = [list(r) + [idO] * g.shape[1] for r in f.mors]
        rows += [[idO] * f.shape[1] + list(r) for r in g.mors]
        return Cell2(boxplus1(f.dom, g.dom), boxplus1(f.cod, g.cod), rows, check=False)

    def dagger2(self, f: Cell2) -> Cell2:
        self.cat.require("dagger")
        cat = self.cat
        return Cell2(f.cod, f.dom, [[cat.dagger(a) for a in r] for r in f.mors], check=False)

    def from_base(self, f: BaseMor) -> Cell2:
        """[f] as a 1x1 2-cell."""
        return Cell2(Cell1([[f.dom]]), Cell1([[f.cod]]), [[f]], check=False)

    # synthesized 2-cells ------------------------------------------------

    def synth2(self, src: Cell1, dst: Cell1, subst=None, inverse: bool = False) -> Cell2:
        """
        Entrywise canonical iso ``src => dst`` between template 1-cells,
        realized at ``subst``.  With ``inverse`` the direction flips.
        """
        if src.shape != dst.shape:
            raise MorphismTypeError("synth2 between shapes %s and %s" % (src.shape, dst.shape))
        cat = self.cat
        mors = []
        for r, s in zip(src.entries, dst.entries):
            row = []
            for a, b in zip(r, s):
                plan = synth_plan(a, b)
                row.append(evaluate(plan.inverse() if inverse else plan, cat, subst))
            mors.append(row)
        if subst:
            src = src.map(lambda a: substitute(a, subst))
            dst = dst.map(lambda a: substitute(a, subst))
        if inverse:
            src, dst = dst, src
        return Cell2(src, dst, mors)

    def cone(self, src: Cell1, dst: Cell1, inverse: bool = False) -> Cell2:
        """Entrywise iso between two concrete 1-cells (leaves taken as they are)."""
        return self.synth2(src, dst, None, inverse)

    def associator(self, A: Cell1, B: Cell1, C: Cell1, inverse: bool = False) -> Cell2:
        """(AB)C => A(BC)"""
        if A.cols != B.rows or B.cols != C.rows:
            raise MorphismTypeError("associator: shapes %s %s %s" % (A.shape, B.shape, C.shape))
        tA, tB, tC = template("A", *A.shape), template("B", *B.shape), template("C", *C.shape)
        subst = bind("A", A)
        bind("B", B, subst)
        bind("C", C, subst)
        return self.synth2(hcomp1(hcomp1(tA, tB), tC), hcomp1(tA, hcomp1(tB, tC)), subst, inverse)

    def left_unitor(self, A: Cell1, inverse: bool = False) -> Cell2:
        """1_m A => A"""
        tA = template("A", *A.shape)
        return self.synth2(hcomp1(id1(A.rows), tA), tA, bind("A", A), inverse)

    def right_unitor(self, A: Cell1, inverse: bool = False) -> Cell2:
        """A 1_n => A"""
        tA = template("A", *A.shape)
        return self.synth2(hcomp1(tA, id1(A.cols)), tA, bind("A", A), inverse)

    def sigma_naturalizer(self, A: Cell1, B: Cell1, inverse: bool = False) -> Cell2:
        """sigma(m,m') (A [+] B) => (B [+] A) sigma(n,n')"""
        (m, n), (m2, n2) = A.shape, B.shape
        tA, tB = template("A", m, n), template("B", m2, n2)
        subst = bind("A", A)
        bind("B", B, subst)
        src = hcomp1(sigma_boxplus(m, m2), boxplus1(tA, tB))
        dst = hcomp1(boxplus1(tB, tA), sigma_boxplus(n, n2))
        return self.synth2(src, dst, subst, inverse)

    def syllepsis(self, m: int, n: int, inverse: bool = False) -> Cell2:
        """sigma(n,m) sigma(m,n) => 1_{m+n}"""
        return self.synth2(hcomp1(sigma_boxplus(n, m), sigma_boxplus(m, n)), id1(m + n), None, inverse)

    def normalize_cell1(self, A: Cell1, inverse: bool = False) -> Cell2:
        """A => entrywise normal form of A."""
        return self.synth2(A, A.map(normal_form), None, inverse)

    def microcosm_oplus(self, a: ObjExpr, b: ObjExpr, inverse: bool = False):
        """(a (+) b, the iso [I I]([a] [+] [b])[I;I] => [a (+) b])."""
        ta, tb = Var("a"), Var("b")
        src = hcomp1(hcomp1(codiagonal(2), boxplus1(Cell1([[ta]]), Cell1([[tb]]))), diagonal(2))
        dst = Cell1([[Sum(ta, tb)]])
        return Sum(a, b), self.synth2(src, dst, {"a": a, "b": b}, inverse)

    def microcosm_otimes(self, a: ObjExpr, b: ObjExpr, inverse: bool = False):
        """(a (x) b, the iso [a][b] => [a (x) b]) -- on the nose up to nothing."""
        return Prod(a, b), self.id2(Cell1([[Prod(a, b)]]))

    # sanity helpers ---------------------------------------------------

    def is_identity2(self, f: Cell2) -> bool:
        return f.dom == f.cod and f == self.id2(f.dom)

    def inverse_pair(self, f: Cell2, g: Cell2) -> bool:
        """f and g are mutually inverse."""
        return self.is_identity2(self.vcomp(f, g)) and self.is_identity2(self.vcomp(g, f))

