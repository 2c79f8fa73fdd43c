"""
JSON forms.

Cell1::

    {"instance": "vecskel", "rows": m, "cols": n, "entries": [["#2 (+) I", ...], ...]}

Cell2 adds ``"dom"``/``"cod"`` (Cell1 objects) and ``"mors"``: per entry
the instance's morphism datum (nested arrays of ``"p/q+r/s i"`` strings
for VecSkel, ``null`` for the thin instances).
"""

from __future__ import annotations

from bimat.base import Bimonoidal
from bimat.instances import get_instance
from bimat.matc import Cell1, Cell2
from bimat.scalars import format_gauss, format_rational, parse_gauss, parse_rational


def cell1_to_json(cat: Bimonoidal, A: Cell1) -> dict:
    return {
        "instance": cat.name,
        "rows": A.rows,
        "cols": A.cols,
        "entries": [[cat.fmt(a) for a in r] for r in A.entries],
    }


def cell1_from_json(d: dict, cat: Bimonoidal = None):
    cat = cat or get_instance(d["instance"])
    A = Cell1([[cat.obj(s) for s in r] for r in d["entries"]], d["rows"], d["cols"])
    return A


def cell2_to_json(cat: Bimonoidal, f: Cell2) -> dict:
    return {
        "instance": cat.name,
        "rows": f.shape[0],
        "cols": f.shape[1],
        "dom": cell1_to_json(cat, f.dom),
        "cod": cell1_to_json(cat, f.cod),
        "mors": [[cat.format_mor(g) for g in r] for r in f.mors],
    }


def cell2_from_json(d: dict, cat: Bimonoidal = None) -> Cell2:
    cat = cat or get_instance(d["instance"])
    dom = cell1_from_json(d["dom"], cat)
    cod = cell1_from_json(d["cod"], cat)
    mors = [[cat.parse_mor(dom.entries[i][j], cod.entries[i][j], d["mors"][i][j])
             for j in range(dom.cols)] for i in range(dom.rows)]
    return Cell2(dom, cod, mors)


def rational_to_json(q) -> str:
    return format_rational(q)


def rational_from_json(s: str):
    return parse_rational(s)


def gauss_to_json(z) -> str:
    return format_gauss(z)


def gauss_from_json(s: str):
    return parse_gauss(s)
