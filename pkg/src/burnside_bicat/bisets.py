"""Bi-sets: functors ``H^op x G -> Set``, composed by coends.

A bi-set ``X`` in ``B(H, G)`` has elements numbered globally.  Element
``x`` lies in the fiber ``X^eta_gamma`` with ``eta = X.eta[x]`` (an object of
``H``) and ``gamma = X.gamma[x]`` (an object of ``G``).  ``G`` acts on the
left: ``lact[g]`` sends ``X^eta_a`` to ``X^eta_b`` for ``g: a -> b``.  ``H``
acts on the right: ``ract[h]`` sends ``X^eta`` to ``X^eta'`` for
``h: eta' -> eta``.  ``X`` is admissible when every column ``X^eta`` is a
free G-set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import actions
from .errors import (
    BaseMismatch,
    IllDefined,
    NotAdmissible,
    NotAnIsomorphism,
    NotBifunctorial,
    NotFunctorial,
)
from .groupoids import UnionFind, compose_functors, opposite
from .gsets import GSet, LEFT, RIGHT, is_free, _check_functorial


@dataclass(eq=False)
class BiSet:
    H: object
    G: object
    eta: tuple
    gamma: tuple
    lact: tuple
    ract: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.labels is None:
            self.labels = tuple(range(len(self.eta)))

    @property
    def size(self):
        return len(self.eta)

    @property
    def elements(self):
        return range(len(self.eta))

    @cached_property
    def fibers(self):
        out = {}
        for x in self.elements:
            out.setdefault((self.eta[x], self.gamma[x]), []).append(x)
        return {k: tuple(v) for k, v in out.items()}

    def fiber(self, eta, gamma):
        return self.fibers.get((eta, gamma), ())

    @cached_property
    def size_vector(self):
        """Fiber cardinalities indexed by ``(eta, gamma)`` in lexicographic order."""
        return tuple(len(self.fiber(e, c)) for e in self.H.objects for c in self.G.objects)

    @cached_property
    def index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def column_elements(self):
        out = [[] for _ in self.H.objects]
        for x in self.elements:
            out[self.eta[x]].append(x)
        return tuple(map(tuple, out))

    @cached_property
    def structure(self):
        colors = tuple(zip(self.eta, self.gamma))
        return actions.Structure(colors, tuple(self.lact) + tuple(self.ract))

    @cached_property
    def admissible(self):
        return admissibility(self) is None

    def act(self, g, x, h=None):
        """``g x h`` (``h`` optional)."""
        y = self.lact[g][x]
        return y if h is None else self.ract[h][y]

    def __eq__(self, other):
        if not isinstance(other, BiSet):
            return NotImplemented
        return (self.H == other.H and self.G == other.G and self.eta == other.eta
                and self.gamma == other.gamma and self.lact == other.lact
                and self.ract == other.ract and self.labels == other.labels)

    __hash__ = None

    def __repr__(self):
        return f"BiSet(size={self.size}, H={self.H!r}, G={self.G!r})"


def column(X, eta):
    """The left G-set ``X^eta``, plus the list of global element ids."""
    elems = X.column_elements[eta]
    index = {x: i for i, x in enumerate(elems)}
    act = tuple({index[x]: index[y] for x, y in a.items() if x in index} for a in X.lact)
    return GSet(X.G, tuple(X.gamma[x] for x in elems), act, LEFT,
                tuple(X.labels[x] for x in elems)), elems


def row(X, gamma):
    """The right H-set ``X_gamma`` (stored over ``opposite(H)``)."""
    elems = tuple(x for x in X.elements if X.gamma[x] == gamma)
    index = {x: i for i, x in enumerate(elems)}
    act = tuple({index[x]: index[y] for x, y in a.items() if x in index} for a in X.ract)
    return GSet(opposite(X.H), tuple(X.eta[x] for x in elems), act, RIGHT,
                tuple(X.labels[x] for x in elems)), elems


def admissibility(X):
    """``None`` if every column is free, else ``(eta, witness)`` for the first bad one."""
    for eta in X.H.objects:
        T, elems = column(X, eta)
        v = is_free(T)
        if not v:
            c2, c, x, g1, g2 = v.witness
            return eta, (c2, c, elems[x], g1, g2)
    return None


def check_biset(X, require_admissible=True):
    """Re-verify bifunctoriality, commutation and (optionally) admissibility."""
    H, G = X.H, X.G
    try:
        _check_functorial(G, X.gamma, X.lact)
        _check_functorial(opposite(H), X.eta, X.ract)
    except NotFunctorial as exc:
        raise NotBifunctorial(str(exc)) from None
    for g in G.morphisms:
        for x, gx in X.lact[g].items():
            if X.eta[gx] != X.eta[x]:
                raise NotBifunctorial(f"left action of {g} changes the H-index")
    for h in H.morphisms:
        for x, xh in X.ract[h].items():
            if X.gamma[xh] != X.gamma[x]:
                raise NotBifunctorial(f"right action of {h} changes the G-index")
    for g in G.morphisms:
        for h in H.morphisms:
            la, ra = X.lact[g], X.ract[h]
            for x in X.column_elements[H.tgt[h]]:
                if X.gamma[x] != G.src[g]:
                    continue
                if ra[la[x]] != la[ra[x]]:
                    raise NotBifunctorial(f"(g x) h != g (x h) for g={g}, h={h}, x={x}")
    if require_admissible:
        bad = admissibility(X)
        if bad is not None:
            raise NotAdmissible(f"column over {bad[0]} is not free (witness {bad[1]})",
                                eta=bad[0], witness=bad[1])
    return X


def validate_biset(H, G, fibers, lact, ract, require_admissible=True):
    """Build a bi-set from labelled data.

    ``fibers`` maps ``(eta, gamma)`` to element labels; ``lact`` maps a
    G-morphism index to a label dict and ``ract`` an H-morphism index to a
    label dict (``h: eta' -> eta`` sends the ``eta`` column to ``eta'``).
    """
    labels, eta, gamma = [], [], []
    for (e, c) in sorted(fibers):
        if not (0 <= e < H.n_objects and 0 <= c < G.n_objects):
            raise NotBifunctorial(f"fiber ({e}, {c}) is out of range")
        for lab in fibers[e, c]:
            labels.append(lab)
            eta.append(e)
            gamma.append(c)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise NotBifunctorial("duplicate element labels")

    def convert(raw, n):
        out = []
        for m in range(n):
            try:
                out.append({index[x]: index[y] for x, y in raw.get(m, {}).items()})
            except KeyError as exc:
                raise NotBifunctorial(f"action names unknown element {exc.args[0]!r}") from None
        return tuple(out)

    X = BiSet(H, G, tuple(eta), tuple(gamma), convert(lact, G.n_morphisms),
              convert(ract, H.n_morphisms), tuple(labels))
    return check_biset(X, require_admissible)


def empty_biset(H, G):
    return BiSet(H, G, (), (), tuple({} for _ in G.morphisms), tuple({} for _ in H.morphisms))


def identity_biset(G):
    """``1_G`` with ``(1_G)^a_b = G(a, b)``; element ``f`` is morphism ``f``."""
    lact = tuple({f: G.compose(g, f) for f in G.into(G.src[g])} for g in G.morphisms)
    ract = tuple({f: G.compose(f, h) for f in G.out(G.tgt[h])} for h in G.morphisms)
    return BiSet(G, G, tuple(G.src), tuple(G.tgt), lact, ract, tuple(G.mor_labels))


def s_of_functor(q):
    """``S(q)`` with ``S(q)^eta_gamma = G(q eta, gamma)``; labels are ``(eta, g)``."""
    H, G = q.source, q.target
    labels = [(e, g) for e in H.objects for g in G.out(q.obj_map[e])]
    index = {lab: i for i, lab in enumerate(labels)}
    lact = tuple({index[e, f]: index[e, G.compose(g, f)]
                  for (e, f) in labels if G.tgt[f] == G.src[g]} for g in G.morphisms)
    ract = []
    for h in H.morphisms:
        a, b = H.src[h], H.tgt[h]
        qh = q.mor_map[h]
        ract.append({index[b, f]: index[a, G.compose(f, qh)] for f in G.out(q.obj_map[b])})
    return BiSet(H, G, tuple(l[0] for l in labels), tuple(G.tgt[l[1]] for l in labels),
                 lact, tuple(ract), tuple(labels))


def t_of_functor(q):
    """The ``(H, K)``-bi-set ``H(eta, q kappa)`` for ``q: K -> H``; labels ``(kappa, h)``.

    It is admissible exactly when ``q`` is a finite weak cover.
    """
    K, H = q.source, q.target
    labels = [(k, h) for k in K.objects for h in H.into(q.obj_map[k])]
    index = {lab: i for i, lab in enumerate(labels)}
    lact = []
    for m in K.morphisms:
        qm = q.mor_map[m]
        lact.append({index[K.src[m], h]: index[K.tgt[m], H.compose(qm, h)]
                     for h in H.into(q.obj_map[K.src[m]])})
    ract = tuple({index[k, h]: index[k, H.compose(h, g)]
                  for (k, h) in labels if H.src[h] == H.tgt[g]} for g in H.morphisms)
    return BiSet(H, K, tuple(H.src[l[1]] for l in labels), tuple(l[0] for l in labels),
                 tuple(lact), ract, tuple(labels))


def transitive_biset(H, G, eta0, gamma0, stabilizer):
    """The orbit of a point ``x0`` in ``X^eta0_gamma0`` with the given stabilizer.

    ``stabilizer`` is a set of pairs ``(a, b)`` with ``a`` in ``Aut(eta0)`` and
    ``b`` in ``Aut(gamma0)`` such that ``b x0 a = x0``; it must be a subgroup
    under ``(a, b)(a', b') = (a' a, b b')``.  Elements are classes of
    ``(h: eta -> eta0, g: gamma0 -> gamma)`` standing for ``g x0 h``.
    """
    K = sorted(stabilizer)
    pairs = [(h, g) for h in sorted(m for e in H.objects for m in H.hom(e, eta0))
             for g in G.out(gamma0)]
    cls, reps = {}, []
    for h, g in pairs:
        if (h, g) in cls:
            continue
        orbit = sorted({(H.compose(H.inv[a], h), G.compose(g, G.inv[b])) for a, b in K})
        for p in orbit:
            cls[p] = len(reps)
        reps.append(orbit[0])
    lact = tuple({i: cls[h, G.compose(m, g)] for i, (h, g) in enumerate(reps) if G.tgt[g] == G.src[m]}
                 for m in G.morphisms)
    ract = tuple({i: cls[H.compose(h, m), g] for i, (h, g) in enumerate(reps) if H.src[h] == H.tgt[m]}
                 for m in H.morphisms)
    return BiSet(H, G, tuple(H.src[h] for h, _ in reps), tuple(G.tgt[g] for _, g in reps),
                 lact, ract, tuple(reps))


def tensor(X, Y):
    """Disjoint union; elements of ``X`` first, labels tagged ``(0, .)``/``(1, .)``."""
    if X.H != Y.H or X.G != Y.G:
        raise BaseMismatch("tensor of bi-sets over different bases")
    n = X.size
    lact = tuple({**a, **{x + n: y + n for x, y in b.items()}} for a, b in zip(X.lact, Y.lact))
    ract = tuple({**a, **{x + n: y + n for x, y in b.items()}} for a, b in zip(X.ract, Y.ract))
    return BiSet(X.H, X.G, X.eta + Y.eta, X.gamma + Y.gamma, lact, ract,
                 tuple((0, l) for l in X.labels) + tuple((1, l) for l in Y.labels))


def restrict(X, elements):
    """Sub-bi-set on a union of orbits, renumbered in the given order."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}

    def sub(acts):
        return tuple({index[x]: index[y] for x, y in a.items() if x in index} for a in acts)

    return BiSet(X.H, X.G, tuple(X.eta[e] for e in elements), tuple(X.gamma[e] for e in elements),
                 sub(X.lact), sub(X.ract), tuple(X.labels[e] for e in elements))


def relabel(X, perm):
    """Isomorphic copy in which element ``e`` becomes ``perm[e]``."""
    n = X.size
    inv = [0] * n
    for e, p in enumerate(perm):
        inv[p] = e

    def move(acts):
        return tuple({perm[x]: perm[y] for x, y in a.items()} for a in acts)

    return BiSet(X.H, X.G, tuple(X.eta[inv[i]] for i in range(n)),
                 tuple(X.gamma[inv[i]] for i in range(n)), move(X.lact), move(X.ract),
                 tuple(X.labels[inv[i]] for i in range(n)))


def twist(X, sigma_h, sigma_g):
    """Compose both actions with groupoid automorphisms (given as functors).

    The result has ``g . x = sigma_g(g) x`` and ``x . h = x sigma_h(h)``;
    both automorphisms must fix every object.
    """
    if any(sigma_g.obj_map[o] != o for o in X.G.objects) or \
       any(sigma_h.obj_map[o] != o for o in X.H.objects):
        raise ValueError("twisting automorphisms must fix objects")
    lact = tuple(X.lact[sigma_g.mor_map[g]] for g in X.G.morphisms)
    ract = tuple(X.ract[sigma_h.mor_map[h]] for h in X.H.morphisms)
    return BiSet(X.H, X.G, X.eta, X.gamma, lact, ract, X.labels)


def restrict_lower(Z, F):
    """``Z`` restricted along ``F: G' -> G`` in the lower (left-acting) variable."""
    G2 = F.source
    pre = {}
    for o in G2.objects:
        pre.setdefault(F.obj_map[o], []).append(o)
    labels = [(x, o) for x in Z.elements for o in pre.get(Z.gamma[x], ())]
    index = {lab: i for i, lab in enumerate(labels)}
    lact = tuple({index[x, G2.src[g]]: index[Z.lact[F.mor_map[g]][x], G2.tgt[g]]
                  for (x, o) in labels if o == G2.src[g]} for g in G2.morphisms)
    ract = tuple({index[x, o]: index[Z.ract[h][x], o] for (x, o) in labels if x in Z.ract[h]}
                 for h in Z.H.morphisms)
    return BiSet(Z.H, G2, tuple(Z.eta[x] for x, _ in labels), tuple(o for _, o in labels),
                 lact, ract, tuple(labels))


def restrict_upper(Z, F):
    """``Z`` restricted along ``F: H' -> H`` in the upper (right-acting) variable."""
    H2 = F.source
    pre = {}
    for o in H2.objects:
        pre.setdefault(F.obj_map[o], []).append(o)
    labels = [(x, o) for x in Z.elements for o in pre.get(Z.eta[x], ())]
    index = {lab: i for i, lab in enumerate(labels)}
    ract = tuple({index[x, H2.tgt[h]]: index[Z.ract[F.mor_map[h]][x], H2.src[h]]
                  for (x, o) in labels if o == H2.tgt[h]} for h in H2.morphisms)
    lact = tuple({index[x, o]: index[Z.lact[g][x], o] for (x, o) in labels if x in Z.lact[g]}
                 for g in Z.G.morphisms)
    return BiSet(H2, Z.G, tuple(o for _, o in labels), tuple(Z.gamma[x] for x, _ in labels),
                 lact, ract, tuple(labels))


# isomorphisms

@dataclass(eq=False)
class BiSetIso:
    source: BiSet
    target: BiSet
    mapping: tuple

    def __call__(self, x):
        return self.mapping[x]

    def __eq__(self, other):
        if not isinstance(other, BiSetIso):
            return NotImplemented
        return (self.mapping == other.mapping and self.source == other.source
                and self.target == other.target)

    __hash__ = None


@dataclass(eq=False)
class BiSetMap:
    """A natural map ``X -> Y``, not necessarily bijective."""
    source: BiSet
    target: BiSet
    mapping: tuple

    def __call__(self, x):
        return self.mapping[x]


def validate_biset_map(mapping, X, Y):
    """Check that ``mapping`` preserves fibers and commutes with both actions."""
    mapping = tuple(mapping)
    if X.H != Y.H or X.G != Y.G:
        raise BaseMismatch("bi-sets live over different bases")
    if len(mapping) != X.size or any(not 0 <= y < Y.size for y in mapping):
        raise NotAnIsomorphism("map is not defined on every element")
    _check_natural(mapping, X, Y)
    return BiSetMap(X, Y, mapping)


def validate_biset_iso(mapping, X, Y):
    """Check that ``mapping`` is a natural bijection ``X -> Y``."""
    mapping = tuple(mapping)
    if X.H != Y.H or X.G != Y.G:
        raise BaseMismatch("bi-sets live over different bases")
    if len(mapping) != X.size or X.size != Y.size or sorted(mapping) != list(range(Y.size)):
        raise NotAnIsomorphism("map is not a bijection")
    _check_natural(mapping, X, Y)
    return BiSetIso(X, Y, mapping)


def _check_natural(mapping, X, Y):
    for x, y in enumerate(mapping):
        if X.eta[x] != Y.eta[y] or X.gamma[x] != Y.gamma[y]:
            raise NotAnIsomorphism(f"element {x} changes fiber")
    for g in X.G.morphisms:
        yg = Y.lact[g]
        for x, gx in X.lact[g].items():
            if mapping[gx] != yg[mapping[x]]:
                raise NotAnIsomorphism(f"not natural for the left action of {g}")
    for h in X.H.morphisms:
        yh = Y.ract[h]
        for x, xh in X.ract[h].items():
            if mapping[xh] != yh[mapping[x]]:
                raise NotAnIsomorphism(f"not natural for the right action of {h}")


def identity_iso(X):
    return BiSetIso(X, X, tuple(X.elements))


def compose_isos(f2, f1):
    return BiSetIso(f1.source, f2.target, tuple(f2.mapping[y] for y in f1.mapping))


def invert_iso(f):
    inv = [0] * len(f.mapping)
    for x, y in enumerate(f.mapping):
        inv[y] = x
    return BiSetIso(f.target, f.source, tuple(inv))


def swap_iso(X, Y):
    """``X ⊔ Y -> Y ⊔ X``."""
    n, m = X.size, Y.size
    return validate_biset_iso([x + m for x in range(n)] + list(range(m)), tensor(X, Y), tensor(Y, X))


def find_isomorphism(X, Y):
    """A natural bijection ``X -> Y`` found by orbit matching, or ``None``.

    Orbits (components of the double translation groupoid) are paired by
    their fiber-size vectors before the element-level search.
    """
    if X.H != Y.H or X.G != Y.G:
        raise BaseMismatch("bi-sets live over different bases")
    perm = actions.find_iso(X.structure, Y.structure)
    if perm is None:
        return None
    return validate_biset_iso(perm, X, Y)


# coends and composition

@dataclass
class Coend:
    """``S x_G T``; ``cls[(s, t)]`` is the class of a pair, ``classes[i]`` its members."""
    classes: tuple
    cls: dict

    def __len__(self):
        return len(self.classes)

    def insertion(self, S, gamma):
        """``in_gamma: S^gamma x T_gamma -> S x_G T`` as a dict on pairs."""
        return {p: c for p, c in self.cls.items() if S.obj[p[0]] == gamma}


def coend(S, T):
    """``S x_G T = (coprod_c S^c x T_c) / (s g, t) ~ (s, g t)``.

    ``S`` is a right G-set and ``T`` a left G-set.  Computed object by
    object from the functor data: for each ``g: a -> b`` the pairs of
    ``S^b x T_a`` generate the relation.
    """
    if S.variance != RIGHT or T.variance != LEFT:
        raise BaseMismatch("coend needs a right G-set and a left G-set")
    G = T.base
    if G.n_objects != S.base.n_objects or G.n_morphisms != S.base.n_morphisms:
        raise BaseMismatch("G-sets act through different groupoids")
    pairs = []
    for c in G.objects:
        pairs += [(s, t) for s in S.fibers[c] for t in T.fibers[c]]
    index = {p: i for i, p in enumerate(pairs)}
    uf = UnionFind(len(pairs))
    for a in G.objects:
        for b in G.objects:
            for g in G.hom(a, b):
                sg, gt = S.act[g], T.act[g]
                for s in S.fibers[b]:
                    for t in T.fibers[a]:
                        uf.union(index[sg[s], t], index[s, gt[t]])
    classes = uf.classes()
    cls = {}
    for i, c in enumerate(classes):
        for j in c:
            cls[pairs[j]] = i
    return Coend(tuple(tuple(pairs[j] for j in c) for c in classes), cls)


@dataclass(eq=False)
class Composite:
    """``X x_G Y`` with the class of every pair ``(x, y)``.

    ``biset.labels[e]`` is the least pair of class ``e``; ``cls`` maps every
    pair to its class.
    """
    left: BiSet
    right: BiSet
    biset: BiSet
    cls: dict


def composite(X, Y, check=False):
    """Compose ``X`` in ``B(G, F)`` after ``Y`` in ``B(H, G)``.

    Pairs ``(x, y)`` with ``X.eta[x] == Y.gamma[y]`` are enumerated by ``x``
    then ``y``; classes are ordered by ``(eta, phi)`` of the result and then
    by least member.
    """
    if X.H != Y.G:
        raise BaseMismatch("middle groupoids differ")
    G = Y.G
    pairs = []
    for x in X.elements:
        pairs += [(x, y) for y in Y.elements if Y.gamma[y] == X.eta[x]]
    by_col = {}
    for x in X.elements:
        by_col.setdefault(X.eta[x], []).append(x)
    index = {p: i for i, p in enumerate(pairs)}
    uf = UnionFind(len(pairs))
    for g in G.morphisms:
        # g: a -> b; x in X^b, y in Y_a: (x g, y) ~ (x, g y)
        xg, gy = X.ract[g], Y.lact[g]
        for y in gy:
            for x in by_col.get(G.tgt[g], ()):
                uf.union(index[xg[x], y], index[x, gy[y]])
    raw = uf.classes()
    raw.sort(key=lambda c: (Y.eta[pairs[c[0]][1]], X.gamma[pairs[c[0]][0]], c[0]))
    cls = {}
    for i, c in enumerate(raw):
        for j in c:
            cls[pairs[j]] = i
    reps = [pairs[c[0]] for c in raw]
    lact = []
    for f in X.G.morphisms:
        a = X.lact[f]
        lact.append({i: cls[a[x], y] for i, (x, y) in enumerate(reps) if x in a})
    ract = []
    for h in Y.H.morphisms:
        a = Y.ract[h]
        ract.append({i: cls[x, a[y]] for i, (x, y) in enumerate(reps) if y in a})
    Z = BiSet(Y.H, X.G, tuple(Y.eta[y] for _, y in reps), tuple(X.gamma[x] for x, _ in reps),
              tuple(lact), tuple(ract), tuple(reps))
    if check:
        _check_induced(X, Y, raw, pairs, cls)
    return Composite(X, Y, Z, cls)


def _check_induced(X, Y, raw, pairs, cls):
    """Every member of a class must induce the same action (debug check)."""
    for i, c in enumerate(raw):
        members = [pairs[j] for j in c]
        for f in X.G.morphisms:
            a = X.lact[f]
            images = {cls[a[x], y] for x, y in members if x in a}
            if len(images) > 1:
                raise IllDefined(f"left action of {f} is ill-defined on class {i}")
        for h in Y.H.morphisms:
            a = Y.ract[h]
            images = {cls[x, a[y]] for x, y in members if y in a}
            if len(images) > 1:
                raise IllDefined(f"right action of {h} is ill-defined on class {i}")


def compose_bisets(X, Y, check=False):
    """``X x_G Y`` for admissible ``X`` in ``B(G, F)`` and ``Y`` in ``B(H, G)``."""
    for name, Z in (("left", X), ("right", Y)):
        bad = admissibility(Z)
        if bad is not None:
            raise NotAdmissible(f"{name} factor is not admissible", eta=bad[0], witness=bad[1])
    return composite(X, Y, check=check).biset


def class_map(src, tgt, fn):
    """Map the classes of ``src`` to ``tgt`` via ``fn`` on member pairs.

    Every member of a class is sent, and all must agree.
    """
    images = [None] * src.biset.size
    for pair, c in src.cls.items():
        v = fn(pair)
        if images[c] is None:
            images[c] = v
        elif images[c] != v:
            raise IllDefined(f"map on class {c} depends on the representative")
    return images


def unitor_right(X):
    """``rho: X x_G 1_G -> X``, ``(x, f) -> x f``."""
    C = composite(X, identity_biset(X.H))
    images = class_map(C, None, lambda p: X.ract[p[1]][p[0]])
    return validate_biset_iso(images, C.biset, X)


def unitor_left(Y):
    """``lambda: 1_G x_G Y -> Y``, ``(f, y) -> f y``."""
    C = composite(identity_biset(Y.G), Y)
    images = class_map(C, None, lambda p: Y.lact[p[0]][p[1]])
    return validate_biset_iso(images, C.biset, Y)


def associator(X, Y, Z):
    """``X x (Y x Z) -> (X x Y) x Z``: the same triple, bracketed the other way."""
    YZ = composite(Y, Z)
    XY = composite(X, Y)
    src = composite(X, YZ.biset)
    tgt = composite(XY.biset, Z)
    reps = YZ.biset.labels

    def send(pair):
        x, c = pair
        y, z = reps[c]
        return tgt.cls[XY.cls[x, y], z]

    images = class_map(src, tgt, send)
    return validate_biset_iso(images, src.biset, tgt.biset)


def whisker_left(W, f):
    """``W x f: W x A -> W x A'`` for an iso ``f: A -> A'``."""
    src, tgt = composite(W, f.source), composite(W, f.target)
    images = class_map(src, tgt, lambda p: tgt.cls[p[0], f.mapping[p[1]]])
    return validate_biset_iso(images, src.biset, tgt.biset)


def whisker_right(f, Z):
    """``f x Z: A x Z -> A' x Z`` for an iso ``f: A -> A'``."""
    src, tgt = composite(f.source, Z), composite(f.target, Z)
    images = class_map(src, tgt, lambda p: tgt.cls[f.mapping[p[0]], p[1]])
    return validate_biset_iso(images, src.biset, tgt.biset)


def s_of_nattrans(alpha):
    """The iso ``S(q) -> S(q')`` induced by ``alpha: q' -> q``: ``g -> g alpha_eta``."""
    qp, q = alpha.source, alpha.target
    Sq, Sqp = s_of_functor(q), s_of_functor(qp)
    G = q.target
    images = [Sqp.index[e, G.compose(g, alpha.components[e])] for (e, g) in Sq.labels]
    return validate_biset_iso(images, Sq, Sqp)


def s_composition_iso(p, q):
    """``S(q) x S(p) -> S(q p)``: ``((h, g), (e, f)) -> (e, g q(f))``, collapsing by the unitor."""
    C = composite(s_of_functor(q), s_of_functor(p))
    Sqp = s_of_functor(compose_functors(q, p))
    G = q.target
    Sq, Sp = C.left, C.right

    def send(pair):
        _, g = Sq.labels[pair[0]]
        e, f = Sp.labels[pair[1]]
        return Sqp.index[e, G.compose(g, q.mor_map[f])]

    images = class_map(C, None, send)
    return validate_biset_iso(images, C.biset, Sqp)

