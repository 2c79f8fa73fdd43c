"""
Seeded random cells, morphisms and path terms for the property suites.

Every generator takes a ``random.Random`` so that a seed fixes a whole run.
"""

from __future__ import annotations

import random

from bimat.base import Base, BaseMor, Bimonoidal, I, O, ObjExpr
from bimat.instances import BoolCat, NatDiscrete, VecSkel, bool_value, dim_of
from bimat.matc import Cell1, Cell2
from bimat.pathcalc import COMUL, COUNIT, MUL, SWAP, UNIT, Id, Par, PathTerm, Seq, scalar
from bimat.pathcalc import depth as term_depth
from bimat.scalars import GaussRational


def random_leaf(cat: Bimonoidal, rng: random.Random, max_dim: int = 3) -> ObjExpr:
    if isinstance(cat, BoolCat):
        return Base(rng.random() < 0.5)
    return Base(rng.randint(0, max_dim))


def random_cell1(cat, rng, m: int, n: int, max_dim: int = 3) -> Cell1:
    return Cell1([[random_leaf(cat, rng, max_dim) for _ in range(n)] for _ in range(m)], m, n)


def random_gauss(rng, lo=-2, hi=2, imag=True) -> GaussRational:
    return GaussRational(rng.randint(lo, hi), rng.randint(lo, hi) if imag and rng.random() < 0.5 else 0)


def random_matrix(rng, rows: int, cols: int):
    return [[random_gauss(rng) for _ in range(cols)] for _ in range(rows)]


def random_target(cat, rng, a: ObjExpr, max_dim: int = 3) -> ObjExpr:
    """A leaf b such that a morphism a -> b exists."""
    if isinstance(cat, BoolCat):
        return Base(True) if bool_value(a) else Base(rng.random() < 0.5)
    if isinstance(cat, NatDiscrete):
        return a
    return Base(rng.randint(0, max_dim))


def random_mor(cat, rng, a: ObjExpr, b: ObjExpr) -> BaseMor:
    if isinstance(cat, VecSkel):
        return cat.morphism(a, b, random_matrix(rng, dim_of(b), dim_of(a)))
    return cat.morphism(a, b)


def random_cell2(cat, rng, A: Cell1, B: Cell1 = None, max_dim: int = 3) -> Cell2:
    """A random 2-cell out of A (into B, or into a random admissible target)."""
    if B is None:
        B = A.map(lambda a: random_target(cat, rng, a, max_dim))
    mors = [[random_mor(cat, rng, A.entries[i][j], B.entries[i][j]) for j in range(A.cols)]
            for i in range(A.rows)]
    return Cell2(A, B, mors)


def random_unitary(rng, d: int):
    """A signed permutation with Gaussian-unit phases (1, -1, i, -i)."""
    perm = list(range(d))
    rng.shuffle(perm)
    phases = [GaussRational(1), GaussRational(-1), GaussRational(0, 1), GaussRational(0, -1)]
    rows = [[GaussRational(0)] * d for _ in range(d)]
    for j, p in enumerate(perm):
        rows[p][j] = rng.choice(phases)
    return rows


# ----------------------------------------------------------------
# path terms


def _balanced_par(parts):
    if len(parts) == 1:
        return parts[0]
    mid = len(parts) // 2
    return Par(_balanced_par(parts[:mid]), _balanced_par(parts[mid:]))


def _layer(rng, n_in: int, names, max_wires: int, budget: int) -> PathTerm:
    """One slice of generators consuming exactly n_in wires, nested at most ``budget`` deep."""
    parts = []
    left = n_in
    outs = 0
    while left > 0:
        opts = [Id(1), COUNIT, scalar(rng.choice(names)) if names else Id(1)]
        if outs + left < max_wires:
            opts.append(COMUL)
        if left >= 2:
            opts += [MUL, SWAP]
        g = rng.choice(opts)
        parts.append(g)
        left -= g.inputs
        outs += g.outputs
    if not parts or (outs < max_wires and rng.random() < 0.15):
        parts.insert(rng.randrange(len(parts) + 1), UNIT)
    out = _balanced_par(parts)
    if term_depth(out) > budget:
        return Id(n_in) if n_in != 1 or not names else rng.choice([Id(1), scalar(rng.choice(names))])
    return out


def random_term(rng, depth: int = 6, names=("r", "s", "t"), n_in: int = None,
                max_wires: int = 5) -> PathTerm:
    """A well-typed term of nesting depth at most ``depth``."""
    if n_in is None:
        n_in = rng.randint(0, 3)
    if depth <= 0:
        return _layer(rng, n_in, list(names), max_wires, 0)
    k = rng.random()
    if k < 0.5:
        t = random_term(rng, depth - 1, names, n_in, max_wires)
        s = random_term(rng, depth - 1, names, t.outputs, max_wires)
        return Seq(s, t)
    if k < 0.75 and n_in >= 1:
        a = rng.randint(0, n_in)
        return Par(random_term(rng, depth - 1, names, a, max_wires),
                   random_term(rng, depth - 1, names, n_in - a, max_wires))
    return _layer(rng, n_in, list(names), max_wires, depth)
