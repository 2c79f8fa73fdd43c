"""
bimat command line.

    bimat eval --rig nat "mul . comul"
    bimat lift --assign r=#2 "mul . (scalar(r) | scalar(r))"
    bimat check-axioms --rig nat --trials 100
    bimat coherence --instance natdiscrete --seed 7
    bimat snake-check --instance vecskel
    bimat trace --instance vecskel
    bimat frobenius --instance vecskel
    bimat teleport --basis pauli --instance vecskel
    bimat microcosm --instance vecskel "#2" "#3"

Exit status: 0 when every check passes, 1 when one fails, 2 on usage errors.
The default instance comes from ``$BIMAT_INSTANCE`` (else vecskel).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from bimat import checks as ck
from bimat.checks import Check
from bimat import pathcalc as pc
from bimat.base import CapabilityError, ObjSyntaxError, NotStructurallyIsomorphic, MorphismTypeError
from bimat.instances import INSTANCES, get_instance
from bimat.jsonio import cell1_to_json, cell2_to_json
from bimat.matc import MatC
from bimat.scalars import GaussRational, format_gauss, parse_gauss


class UsageError(Exception):
    pass


def _read_term(args) -> str:
    if args.file:
        with open(args.file) as fh:
            return fh.read()
    if args.term is None:
        raise UsageError("give a term or --file")
    return args.term


def _parse_assign(text, parse_value):
    out = {}
    if not text:
        return out
    for part in text.split(","):
        if "=" not in part:
            raise UsageError("bad --assign entry %r (want name=value)" % part)
        k, v = part.split("=", 1)
        out[k.strip()] = parse_value(v.strip())
    return out


def _fmt_matrix(rows):
    return "[" + ", ".join("[" + ", ".join(str(x).lower() if isinstance(x, bool) else str(x)
                                             for x in r) + "]" for r in rows) + "]"


def _emit(args, text, payload):
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _emit_report(args, rep, extra=None):
    payload = rep.to_json()
    if extra:
        payload.update(extra)
    _emit(args, rep.text(), payload)
    return 0 if rep.ok else 1


# ----------------------------------------------------------------
# verbs


def cmd_eval(args):
    rig = pc.RIGS[args.rig]
    t = pc.parse(_read_term(args))
    a = _parse_assign(args.assign, rig.parse)
    try:
        m = pc.eval_rig(t, rig, a)
    except pc.UnassignedScalar as exc:
        raise UsageError("unassigned scalar %s" % exc) from None
    _emit(args, _fmt_matrix(m), {"term": str(t), "rig": rig.name, "outputs": t.outputs,
                                 "inputs": t.inputs, "matrix": m})
    return 0


def cmd_lift(args):
    cat = get_instance(args.instance)
    t = pc.parse(_read_term(args))
    a = _parse_assign(args.assign, cat.obj)
    try:
        A = pc.lift(t, a)
    except pc.UnassignedScalar as exc:
        raise UsageError("unassigned scalar %s" % exc) from None
    text = "\n".join("[" + ", ".join(cat.fmt(x) for x in r) + "]" for r in A.entries) \
        or "[ ]_%d,%d" % A.shape
    _emit(args, text, cell1_to_json(cat, A))
    return 0


def cmd_check_axioms(args):
    rep = ck.axioms_suite(pc.RIGS[args.rig], args.seed, args.trials)
    if args.coning:
        cat = get_instance(args.instance)
        cone = ck.coning_suite(cat, args.seed)
        rep.title += "; " + cone.title
        rep.checks.extend(Check("coning " + c.name, c.ok, c.detail) for c in cone.checks)
    return _emit_report(args, rep)


def cmd_coherence(args):
    cat = get_instance(args.instance)
    rep = ck.coherence_suite(cat, args.seed, args.trials, args.max_shape, args.max_dim)
    if isinstance(cat, INSTANCES["bool"]):
        rng = random.Random("relations/%d" % args.seed)
        tally = ck._Tally("relational composition")
        for _ in range(args.trials):
            tally(*ck.relations_trial(rng))
        tally.into(rep)
    if cat.caps.dagger:
        rep.checks.extend(ck.dagger_suite(cat, args.seed, args.trials, args.max_shape, args.max_dim).checks)
    rng = random.Random("decat/%d" % args.seed)
    if cat.name == "vecskel":
        tally = ck._Tally("decategorification")
        for _ in range(args.trials):
            tally(*ck.decategorification_trial(rng))
        tally.into(rep)
    return _emit_report(args, rep)


def cmd_snake(args):
    cat = get_instance(args.instance)
    return _emit_report(args, ck.snake_suite(cat, args.seed, args.trials, args.max_shape, args.max_dim))


def cmd_trace(args):
    cat = get_instance(args.instance)
    return _emit_report(args, ck.trace_suite(cat, args.seed, args.trials))


def cmd_frobenius(args):
    cat = get_instance(args.instance)
    return _emit_report(args, ck.frobenius_report(cat))


def cmd_teleport(args):
    from bimat.quantum import pauli_basis, pauli_x, is_unitary2, teleportation_report, default_scalar
    cat = get_instance(args.instance)
    cat.require("dagger", "duals", "biproducts")
    if args.basis != "pauli":
        raise UsageError("only --basis pauli is available")
    M = MatC(cat)
    basis = pauli_basis(cat)
    s = parse_gauss(args.scalar) if args.scalar else default_scalar(basis.n)
    s_text = format_gauss(GaussRational.coerce(s))
    tr = teleportation_report(M, basis, s)
    rep = ck.Report("teleportation, qubit Pauli basis, n = %d, scalar %s" % (basis.n, s_text))
    for name, ok in tr.checks.items():
        detail = ""
        if name == "mu unitary":
            mm = M.vcomp(tr.cells["mu"], M.dagger2(tr.cells["mu"]))
            detail = "mu o mu^dag = %r" % (mm.mors[0][0].payload,)
        rep.add(name, ok, detail)
    px = pauli_x(M)
    rep.add("pauli X is the swap", px.mors[0][0].payload.to_rows() == [[0, 1], [1, 0]],
            "got %r" % (px.mors[0][0].payload,))
    rep.add("pauli X unitary", is_unitary2(M, px))
    extra = {"scalar": s_text,
             "cells": {k: cell2_to_json(cat, v) for k, v in tr.cells.items()}}
    extra["cells"]["pauli_x"] = cell2_to_json(cat, px)
    return _emit_report(args, rep, extra)


def cmd_microcosm(args):
    cat = get_instance(args.instance)
    M = MatC(cat)
    if args.a is None:
        return _emit_report(args, ck.microcosm_suite(cat, args.seed, args.trials))
    a, b = cat.obj(args.a), cat.obj(args.b or "O")
    s, f = M.microcosm_oplus(a, b)
    ok = M.inverse_pair(f, M.microcosm_oplus(a, b, inverse=True)[1])
    text = "%s => %s\n%r\n%s" % (f.dom, f.cod, f.mors[0][0].payload, "PASS" if ok else "FAIL")
    _emit(args, text, {"object": cat.fmt(s), "iso": cell2_to_json(cat, f), "ok": ok})
    return 0 if ok else 1


# ----------------------------------------------------------------


def build_parser():
    default_inst = os.environ.get("BIMAT_INSTANCE", "vecskel")
    p = argparse.ArgumentParser(prog="bimat", description="Verify identities in the bicategory Mat(C).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", choices=sorted(INSTANCES), default=default_inst,
                        help="base category (default: $BIMAT_INSTANCE or vecskel)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--max-shape", type=int, default=3)
    common.add_argument("--max-dim", type=int, default=3)
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, trials, help_):
        q = sub.add_parser(name, parents=[common], help=help_)
        q.set_defaults(fn=fn, default_trials=trials)
        return q

    q = verb("eval", cmd_eval, 0, "evaluate a path term over a rig")
    q.add_argument("term", nargs="?")
    q.add_argument("--file")
    q.add_argument("--rig", choices=sorted(pc.RIGS), default="nat")
    q.add_argument("--assign", help="r=2,s=3")

    q = verb("lift", cmd_lift, 0, "lift a path term to a 1-cell")
    q.add_argument("term", nargs="?")
    q.add_argument("--file")
    q.add_argument("--assign", help="r=#2,s=#3 (object syntax)")

    q = verb("check-axioms", cmd_check_axioms, 100, "semantic soundness of the axioms")
    q.add_argument("--rig", choices=sorted(pc.RIGS), default="nat")
    q.add_argument("--coning", action="store_true", help="also check every coning iso in --instance")

    verb("coherence", cmd_coherence, 200, "interchange, unitors, pentagon, triangle")
    verb("snake-check", cmd_snake, 50, "snake equations for dual transposes")
    verb("trace", cmd_trace, 50, "object traces and additivity")
    verb("frobenius", cmd_frobenius, 0, "the classical bit on [I I][I;I]")

    q = verb("teleport", cmd_teleport, 0, "teleportation and Pauli X")
    q.add_argument("--basis", default="pauli")
    q.add_argument("--scalar", help="normalizing scalar (default 1/sqrt(n)), e.g. \"1/2+1/2 i\"")

    q = verb("microcosm", cmd_microcosm, 20, "the (add) iso [I I]([a] [+] [b])[I;I] => [a (+) b]")
    q.add_argument("a", nargs="?")
    q.add_argument("b", nargs="?")
    return p


def main(argv=None):
    p = build_parser()
    args = p.parse_args(argv)
    if args.trials is None:
        args.trials = args.default_trials
    try:
        return args.fn(args)
    except (UsageError, CapabilityError, pc.PathSyntaxError, pc.ArityError, ObjSyntaxError) as exc:
        print("bimat: error: %s" % exc, file=sys.stderr)
        return 2
    except (NotStructurallyIsomorphic, MorphismTypeError, ValueError) as exc:
        print("bimat: error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
