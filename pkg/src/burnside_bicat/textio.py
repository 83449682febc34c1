"""Reading and writing the line-based file formats.

Every file starts with a header line ``%KIND 1``.  Tokens are separated by
whitespace; ``#`` starts a comment.  File references inside a file are
resolved relative to that file's directory.
"""

from __future__ import annotations

import os
import re

from .bisets import validate_biset
from .errors import BurnsideError, ParseError
from .groupoids import validate_functor, validate_groupoid
from .gsets import LEFT, RIGHT, validate_gset
from .spans import make_span

KINDS = ("GRPD", "GSET", "BISET", "SPAN", "FUNC")
_TOKEN = re.compile(r"^[^\s:#]+$")


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _int(tok, path, n, what="index"):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer {what}, got {tok!r}", path, n) from None


class Loader:
    """Loads files, caching groupoids by absolute path so shared bases are shared objects."""

    def __init__(self):
        self.groupoids = {}

    def read(self, path):
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read file: {exc.strerror}", path) from None

    def _header(self, path):
        for n, line in _lines(self.read(path)):
            parts = line.split()
            if len(parts) == 2 and parts[0].startswith("%") and parts[0][1:] in KINDS:
                if parts[1] != "1":
                    raise ParseError(f"unsupported version {parts[1]!r}", path, n)
                return parts[0][1:], n
            raise ParseError("missing header line such as '%GRPD 1'", path, n)
        raise ParseError("empty file", path)

    def kind(self, path):
        return self._header(path)[0]

    def _body(self, path, kind):
        found, n = self._header(path)
        if found != kind:
            raise ParseError(f"expected a %{kind} file, found %{found}", path, n)
        lines = list(_lines(self.read(path)))
        return lines[1:]

    def _ref(self, path, tok):
        return os.path.normpath(os.path.join(os.path.dirname(os.path.abspath(path)), tok))

    def load(self, path):
        """Load any supported file; returns ``(kind, object)``."""
        kind = self.kind(path)
        return kind, getattr(self, "load_" + kind.lower())(path)

    # groupoids

    def load_grpd(self, path):
        key = os.path.abspath(path)
        if key in self.groupoids:
            return self.groupoids[key]
        n_objects = None
        mors, idents, comp = [], {}, {}
        names = set()
        for n, line in self._body(path, "GRPD"):
            t = line.split()
            if t[0] == "objects" and len(t) == 2:
                if n_objects is not None:
                    raise ParseError("duplicate 'objects' line", path, n)
                n_objects = _int(t[1], path, n, "object count")
                if n_objects < 0:
                    raise ParseError("negative object count", path, n)
            elif t[0] == "mor" and len(t) == 4:
                if t[1] in names:
                    raise ParseError(f"duplicate morphism name {t[1]!r}", path, n)
                names.add(t[1])
                mors.append((t[1], _int(t[2], path, n), _int(t[3], path, n), n))
            elif t[0] == "id" and len(t) == 3:
                o = _int(t[1], path, n)
                if o in idents:
                    raise ParseError(f"duplicate identity for object {o}", path, n)
                idents[o] = t[2]
            elif t[0] == "cmp" and len(t) == 4:
                if (t[1], t[2]) in comp:
                    raise ParseError(f"duplicate composite {t[1]} o {t[2]}", path, n)
                if t[1] not in names or t[2] not in names or t[3] not in names:
                    raise ParseError("cmp names an undeclared morphism", path, n)
                comp[t[1], t[2]] = t[3]
            else:
                raise ParseError(f"unrecognised line {line!r}", path, n)
        if n_objects is None:
            raise ParseError("missing 'objects' line", path)
        for name, s, t, n in mors:
            for o in (s, t):
                if not 0 <= o < n_objects:
                    raise ParseError(f"object {o} out of range in morphism {name!r}", path, n)
        try:
            G = validate_groupoid(n_objects, [m[:3] for m in mors], idents, comp)
        except BurnsideError as exc:
            raise ParseError(str(exc), path) from None
        self.groupoids[key] = G
        return G

    # functors

    def _functor_lines(self, lines, H, G, path):
        obj_map = [None] * H.n_objects
        mor_map = [None] * H.n_morphisms
        for n, line in lines:
            t = line.split()
            if t[0] == "obj" and len(t) == 3:
                a, b = _int(t[1], path, n), _int(t[2], path, n)
                if not 0 <= a < H.n_objects or not 0 <= b < G.n_objects:
                    raise ParseError("object out of range", path, n)
                if obj_map[a] is not None:
                    raise ParseError(f"object {a} assigned twice", path, n)
                obj_map[a] = b
            elif t[0] == "mor" and len(t) == 3:
                if t[1] not in H.mor_index or t[2] not in G.mor_index:
                    raise ParseError("unknown morphism name", path, n)
                a = H.mor_index[t[1]]
                if mor_map[a] is not None:
                    raise ParseError(f"morphism {t[1]!r} assigned twice", path, n)
                mor_map[a] = G.mor_index[t[2]]
            else:
                raise ParseError(f"unrecognised functor line {line!r}", path, n)
        if None in obj_map or None in mor_map:
            raise ParseError("functor is not defined on every object and morphism", path)
        try:
            return validate_functor(obj_map, mor_map, H, G)
        except BurnsideError as exc:
            raise ParseError(str(exc), path) from None

    def load_func(self, path):
        refs, rest = {}, []
        for n, line in self._body(path, "FUNC"):
            t = line.split()
            if t[0] in ("source", "target") and len(t) == 2:
                refs[t[0]] = self.load_grpd(self._ref(path, t[1]))
            else:
                rest.append((n, line))
        if set(refs) != {"source", "target"}:
            raise ParseError("need 'source' and 'target' lines", path)
        return self._functor_lines(rest, refs["source"], refs["target"], path)

    # G-sets

    def load_gset(self, path):
        base, variance = None, LEFT
        fibers, act = {}, {}
        for n, line in self._body(path, "GSET"):
            head, _, tail = line.partition(":")
            t = head.split()
            if not t:
                raise ParseError(f"unrecognised line {line!r}", path, n)
            if t[0] == "base" and len(t) == 2 and not tail:
                base = self.load_grpd(self._ref(path, t[1]))
            elif t[0] == "variance" and len(t) == 2 and not tail:
                if t[1] not in (LEFT, RIGHT):
                    raise ParseError("variance must be 'left' or 'right'", path, n)
                variance = t[1]
            elif t[0] == "fiber" and len(t) == 2:
                if base is None:
                    raise ParseError("'base' must come before fibers", path, n)
                o = _int(t[1], path, n)
                if not 0 <= o < base.n_objects:
                    raise ParseError(f"object {o} out of range", path, n)
                fibers.setdefault(o, []).extend(tail.split())
            elif t[0] == "act" and len(t) == 2:
                if base is None or t[1] not in base.mor_index:
                    raise ParseError(f"unknown morphism {t[1]!r}", path, n)
                x, y = _arrow(tail, path, n)
                d = act.setdefault(base.mor_index[t[1]], {})
                if x in d:
                    raise ParseError(f"element {x!r} acted on twice by {t[1]!r}", path, n)
                d[x] = y
            else:
                raise ParseError(f"unrecognised line {line!r}", path, n)
        if base is None:
            raise ParseError("missing 'base' line", path)
        try:
            return validate_gset(base, fibers, act, variance)
        except BurnsideError as exc:
            raise ParseError(str(exc), path) from None

    # bi-sets

    def load_biset(self, path, require_admissible=False):
        refs = {}
        fibers, lact, ract = {}, {}, {}
        for n, line in self._body(path, "BISET"):
            head, _, tail = line.partition(":")
            t = head.split()
            if not t:
                raise ParseError(f"unrecognised line {line!r}", path, n)
            if t[0] in ("H", "G") and len(t) == 2 and not tail:
                refs[t[0]] = self.load_grpd(self._ref(path, t[1]))
                continue
            if "H" not in refs or "G" not in refs:
                raise ParseError("'H' and 'G' lines must come first", path, n)
            H, G = refs["H"], refs["G"]
            if t[0] == "fiber" and len(t) == 3:
                e, c = _int(t[1], path, n), _int(t[2], path, n)
                if not (0 <= e < H.n_objects and 0 <= c < G.n_objects):
                    raise ParseError(f"fiber ({e}, {c}) out of range", path, n)
                fibers.setdefault((e, c), []).extend(tail.split())
            elif t[0] in ("lact", "ract") and len(t) == 3:
                base = G if t[0] == "lact" else H
                if t[1] not in base.mor_index:
                    raise ParseError(f"unknown morphism {t[1]!r}", path, n)
                _int(t[2], path, n)
                x, y = _arrow(tail, path, n)
                table = lact if t[0] == "lact" else ract
                d = table.setdefault(base.mor_index[t[1]], {})
                if x in d:
                    raise ParseError(f"element {x!r} acted on twice by {t[1]!r}", path, n)
                d[x] = y
            else:
                raise ParseError(f"unrecognised line {line!r}", path, n)
        if set(refs) != {"H", "G"}:
            raise ParseError("need 'H' and 'G' lines", path)
        try:
            return validate_biset(refs["H"], refs["G"], fibers, lact, ract, require_admissible)
        except BurnsideError as exc:
            raise ParseError(str(exc), path) from None

    # spans

    def load_span(self, path):
        refs = {}
        blocks = {}
        current = None
        for n, line in self._body(path, "SPAN"):
            t = line.split()
            if current is not None:
                if t == ["end"]:
                    current = None
                else:
                    blocks[current].append((n, line))
            elif t[0] in ("H", "L", "G") and len(t) == 2:
                refs[t[0]] = self.load_grpd(self._ref(path, t[1]))
            elif t[0] in ("leftleg", "rightleg") and len(t) == 1:
                if t[0] in blocks:
                    raise ParseError(f"duplicate {t[0]} block", path, n)
                current = t[0]
                blocks[current] = []
            else:
                raise ParseError(f"unrecognised line {line!r}", path, n)
        if current is not None:
            raise ParseError(f"unterminated {current} block", path)
        if set(refs) != {"H", "L", "G"} or set(blocks) != {"leftleg", "rightleg"}:
            raise ParseError("need H, L, G lines and leftleg, rightleg blocks", path)
        q = self._functor_lines(blocks["leftleg"], refs["L"], refs["H"], path)
        p = self._functor_lines(blocks["rightleg"], refs["L"], refs["G"], path)
        try:
            return make_span(q, p)
        except BurnsideError as exc:
            raise ParseError(str(exc), path) from None


def _arrow(tail, path, n):
    parts = tail.split()
    if len(parts) != 3 or parts[1] != "->":
        raise ParseError("expected 'e -> e2'", path, n)
    return parts[0], parts[2]


# writers

def names_for(labels, prefix):
    """Use the labels themselves when they are distinct plain tokens."""
    strs = [lab if isinstance(lab, str) else None for lab in labels]
    if all(s is not None and _TOKEN.match(s) and s != "->" for s in strs) and len(set(strs)) == len(strs):
        return strs
    return [f"{prefix}{i}" for i in range(len(labels))]


def dump_groupoid(G):
    names = names_for(G.mor_labels, "m")
    out = ["%GRPD 1", f"objects {G.n_objects}"]
    out += [f"mor {names[m]} {G.src[m]} {G.tgt[m]}" for m in G.morphisms]
    out += [f"id {o} {names[G.ident[o]]}" for o in G.objects]
    for f in G.morphisms:
        for g in G.out(G.tgt[f]):
            out.append(f"cmp {names[g]} {names[f]} {names[G.compose(g, f)]}")
    return "\n".join(out) + "\n"


def _functor_lines_out(F):
    sn = names_for(F.source.mor_labels, "m")
    tn = names_for(F.target.mor_labels, "m")
    out = [f"obj {o} {F.obj_map[o]}" for o in F.source.objects]
    out += [f"mor {sn[m]} {tn[F.mor_map[m]]}" for m in F.source.morphisms]
    return out


def dump_functor(F, source_ref, target_ref):
    return "\n".join(["%FUNC 1", f"source {source_ref}", f"target {target_ref}"]
                     + _functor_lines_out(F)) + "\n"


def dump_gset(T, base_ref):
    names = names_for(T.labels, "e")
    mnames = names_for(T.base.mor_labels, "m")
    out = ["%GSET 1", f"base {base_ref}", f"variance {T.variance}"]
    for o, fib in enumerate(T.fibers):
        out.append(f"fiber {o}: " + " ".join(names[x] for x in fib))
    for m in T.base.morphisms:
        for x, y in sorted(T.act[m].items()):
            out.append(f"act {mnames[m]}: {names[x]} -> {names[y]}")
    return "\n".join(out) + "\n"


def dump_biset(X, h_ref, g_ref):
    names = names_for(X.labels, "e")
    gn = names_for(X.G.mor_labels, "m")
    hn = names_for(X.H.mor_labels, "m")
    out = ["%BISET 1", f"H {h_ref}", f"G {g_ref}"]
    for e in X.H.objects:
        for c in X.G.objects:
            fib = X.fiber(e, c)
            if fib:
                out.append(f"fiber {e} {c}: " + " ".join(names[x] for x in fib))
    for g in X.G.morphisms:
        for x, y in sorted(X.lact[g].items()):
            out.append(f"lact {gn[g]} {X.eta[x]}: {names[x]} -> {names[y]}")
    for h in X.H.morphisms:
        for x, y in sorted(X.ract[h].items()):
            out.append(f"ract {hn[h]} {X.gamma[x]}: {names[x]} -> {names[y]}")
    return "\n".join(out) + "\n"


def dump_span(A, h_ref, l_ref, g_ref):
    out = ["%SPAN 1", f"H {h_ref}", f"L {l_ref}", f"G {g_ref}", "leftleg"]
    out += _functor_lines_out(A.left) + ["end", "rightleg"]
    out += _functor_lines_out(A.right) + ["end"]
    return "\n".join(out) + "\n"
