"""Batch command line: ``burnside <command> ...``.

Exit status is 0 when the command succeeds or the checked property holds,
1 when a verdict is negative, and 2 when an input is malformed or the
requested computation is undefined for it.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import __version__
from .bisets import compose_bisets, find_isomorphism
from .burnside import burnside_group, canonical_form, hom_monoid_element, indecomposables
from .comparison import biset_to_span, span_to_biset
from .errors import BurnsideError, ParseError
from .groupoids import components
from .laws import SUITES, run_suites
from .spans import compose_spans, double_coset_equivalence
from .textio import Loader, dump_biset, dump_groupoid, dump_span, names_for

OK, FALSE, BAD_INPUT = 0, 1, 2


class Report:
    """Rows of ``(key, value...)``; text joins with spaces, tsv with tabs."""

    def __init__(self, fmt, out):
        self.fmt = fmt
        self.out = out

    def row(self, *fields):
        sep = "\t" if self.fmt == "tsv" else " "
        self.out.write(sep.join(str(f) for f in fields) + "\n")


def _size(v):
    return ",".join(map(str, v))


class Session:
    def __init__(self, args, out):
        self.args = args
        self.loader = Loader()
        self.report = Report(args.report, out)
        self.out = out

    # groupoid files are written next to the output when a new base appears

    def ref_for(self, G, out_path, stem):
        base_dir = os.path.dirname(os.path.abspath(out_path)) if out_path else os.getcwd()
        for path, H in self.loader.groupoids.items():
            if H is G:
                return os.path.relpath(path, base_dir)
        for path, H in self.loader.groupoids.items():
            if H == G:
                return os.path.relpath(path, base_dir)
        if not out_path:
            raise BurnsideError("a new groupoid was produced; give -o so it can be written")
        new = os.path.splitext(out_path)[0] + f".{stem}.grpd"
        with open(new, "w", encoding="utf-8") as fh:
            fh.write(dump_groupoid(G))
        self.loader.groupoids[os.path.abspath(new)] = G
        return os.path.relpath(new, base_dir)

    def emit(self, text, out_path):
        if out_path:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
            self.report.row("wrote", out_path)
        else:
            self.out.write(text)

    def write_biset(self, X, out_path):
        h = self.ref_for(X.H, out_path, "H")
        g = self.ref_for(X.G, out_path, "G")
        self.emit(dump_biset(X, h, g), out_path)

    def write_span(self, A, out_path):
        h = self.ref_for(A.H, out_path, "H")
        l = self.ref_for(A.apex, out_path, "apex")
        g = self.ref_for(A.G, out_path, "G")
        self.emit(dump_span(A, h, l, g), out_path)


# commands

def cmd_validate(s):
    for path in s.args.files:
        kind, obj = s.loader.load(path)
        s.report.row("ok", kind, path, _describe(kind, obj))
    return OK


def _describe(kind, obj):
    if kind == "GRPD":
        return f"objects={obj.n_objects} morphisms={obj.n_morphisms} components={len(components(obj))}"
    if kind == "BISET":
        return f"size={obj.size}"
    if kind == "GSET":
        return f"size={obj.size}"
    if kind == "SPAN":
        return f"apex_objects={obj.apex.n_objects} apex_morphisms={obj.apex.n_morphisms}"
    return f"objects={len(obj.obj_map)} morphisms={len(obj.mor_map)}"


def cmd_compose(s):
    k1, A = s.loader.load(s.args.first)
    k2, B = s.loader.load(s.args.second)
    if k1 == k2 == "BISET":
        Z = compose_bisets(A, B)
        s.report.row("composite", "size", Z.size, "orbits", len(indecomposables(Z)))
        s.write_biset(Z, s.args.output)
    elif k1 == k2 == "SPAN":
        C = compose_spans(A, B)
        s.report.row("composite", "apex_objects", C.apex.n_objects,
                     "apex_components", len(components(C.apex)))
        s.write_span(C, s.args.output)
    else:
        raise BurnsideError(f"cannot compose %{k1} with %{k2}; give two bi-sets or two spans")
    return OK


def cmd_iso(s):
    X = s.loader.load_biset(s.args.first)
    Y = s.loader.load_biset(s.args.second)
    f = find_isomorphism(X, Y)
    if f is None:
        s.report.row("not-isomorphic")
        return FALSE
    s.report.row("isomorphic")
    nx, ny = names_for(X.labels, "e"), names_for(Y.labels, "e")
    for x, y in enumerate(f.mapping):
        s.report.row(nx[x], "->", ny[y])
    return OK


def cmd_hom(s):
    H = s.loader.load_grpd(s.args.left)
    G = s.loader.load_grpd(s.args.right)
    basis = burnside_group(H, G, s.args.bound)
    for c, _ in basis:
        s.report.row("class", c.digest, "size", _size(c.size_vector))
    s.report.row("rank", len(basis))
    return OK


def cmd_decompose(s):
    X = s.loader.load_biset(s.args.file, require_admissible=True)
    for Y in indecomposables(X):
        c = canonical_form(Y)
        s.report.row("summand", c.digest, "size", _size(c.size_vector))
    s.report.row("element", hom_monoid_element(X))
    return OK


def cmd_to_span(s):
    X = s.loader.load_biset(s.args.file, require_admissible=True)
    s.write_span(biset_to_span(X), s.args.output)
    return OK


def cmd_from_span(s):
    A = s.loader.load_span(s.args.file)
    s.write_biset(span_to_biset(A), s.args.output)
    return OK


def cmd_laws(s):
    names = s.args.suite or DEFAULT_SUITES
    status = OK
    for r in run_suites(names, s.args.seed, s.args.cases):
        s.report.row(r.name, "pass" if r else "FAIL", "cases", r.cases, "failures", len(r.failures))
        for i, msg in r.failures:
            s.report.row(r.name, "case", i, msg.strip().splitlines()[-1])
        if not r:
            status = FALSE
    return status


DEFAULT_SUITES = ["pentagon", "triangle", "unit", "pullback", "beta", "alpha", "phi"]


def cmd_double_coset(s):
    p = s.loader.load_func(s.args.p)
    q = s.loader.load_func(s.args.q)
    if p.target != q.target:
        raise BurnsideError("the two functors must share their target")
    d = double_coset_equivalence(p, q)
    s.report.row("pullback_components", len(components(d.apex.groupoid)))
    s.report.row("comparison", "equivalence" if d else "not-an-equivalence")
    return OK if d else FALSE


def build_parser():
    ap = argparse.ArgumentParser(prog="burnside", description="Finite groupoids, bi-sets and spans.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("--report", choices=["text", "tsv"], default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate files of any kind")
    p.add_argument("files", nargs="+")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("compose", help="compose two bi-sets (X after Y) or two spans")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("iso", help="search for a natural bijection between two bi-sets")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(run=cmd_iso)

    p = sub.add_parser("hom", help="basis of the Burnside hom group up to a size bound")
    p.add_argument("--left", required=True, help="upper groupoid H (acting on the right)")
    p.add_argument("--right", required=True, help="lower groupoid G (acting on the left)")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(run=cmd_hom)

    p = sub.add_parser("decompose", help="indecomposable summands of an admissible bi-set")
    p.add_argument("file")
    p.set_defaults(run=cmd_decompose)

    p = sub.add_parser("to-span", help="bi-set to span through the double translation groupoid")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_to_span)

    p = sub.add_parser("from-span", help="span to bi-set")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_from_span)

    p = sub.add_parser("laws", help="run seeded law suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=20)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    p.set_defaults(run=cmd_laws)

    p = sub.add_parser("double-coset", help="compare T(q) o S(p) with its pullback form")
    p.add_argument("p", help="functor H -> G")
    p.add_argument("q", help="finite weak cover F -> G")
    p.set_defaults(run=cmd_double_coset)
    return ap


def run(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else BAD_INPUT
    if getattr(args, "bound", 0) is not None and getattr(args, "bound", 0) < 0:
        sys.stderr.write("error: --bound must be non-negative\n")
        return BAD_INPUT
    s = Session(args, out)
    try:
        return args.run(s)
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT
    except BurnsideError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return BAD_INPUT
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return BAD_INPUT


def main():
    sys.exit(run())
