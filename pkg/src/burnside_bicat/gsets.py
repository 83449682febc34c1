"""G-sets over finite groupoids, in functor, action and covering-map form.

Elements of a G-set are numbered globally; ``obj[e]`` is the object whose
fiber contains ``e`` and ``act[m]`` is a dict sending each element of the
source fiber of ``m`` to its image.  A right G-set is stored as a left
G-set over ``opposite(G)``: the morphism indices are unchanged, only the
direction of the action flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import actions
from .errors import BaseMismatch, NotACover, NotFree, NotFunctorial
from .groupoids import (
    Functor,
    Groupoid,
    UnionFind,
    opposite,
)

LEFT, RIGHT = "left", "right"


@dataclass(eq=False)
class GSet:
    base: Groupoid
    obj: tuple
    act: tuple
    variance: str = LEFT
    labels: tuple | None = None

    def __post_init__(self):
        if self.labels is None:
            self.labels = tuple(range(len(self.obj)))

    @property
    def size(self):
        return len(self.obj)

    @property
    def elements(self):
        return range(len(self.obj))

    @cached_property
    def fibers(self):
        out = [[] for _ in self.base.objects]
        for e, o in enumerate(self.obj):
            out[o].append(e)
        return tuple(map(tuple, out))

    def fiber(self, o):
        return self.fibers[o]

    @property
    def acting(self):
        """The groupoid ``G`` this is a left or right ``G``-set for."""
        return self.base if self.variance == LEFT else opposite(self.base)

    def apply(self, m, x):
        return self.act[m][x]

    @cached_property
    def structure(self):
        return actions.Structure(self.obj, self.act)

    def __eq__(self, other):
        if not isinstance(other, GSet):
            return NotImplemented
        return (self.base == other.base and self.variance == other.variance
                and self.obj == other.obj and self.act == other.act
                and self.labels == other.labels)

    __hash__ = None

    def __repr__(self):
        return f"GSet({self.variance}, size={self.size}, base={self.base!r})"


@dataclass(eq=False)
class GSetMap:
    """A natural map ``source -> target``; ``components[e]`` is the image of ``e``."""
    source: GSet
    target: GSet
    components: tuple

    def __call__(self, x):
        return self.components[x]


def _check_functorial(G, obj, act):
    fibers = [[] for _ in G.objects]
    for e, o in enumerate(obj):
        fibers[o].append(e)
    for m in G.morphisms:
        a, b = G.src[m], G.tgt[m]
        f = act[m]
        if set(f) != set(fibers[a]):
            raise NotFunctorial(f"action of morphism {m} is not defined on exactly its source fiber")
        image = set(f.values())
        if image != set(fibers[b]) or len(image) != len(f):
            raise NotFunctorial(f"action of morphism {m} is not a bijection onto its target fiber")
    for o in G.objects:
        if any(x != y for x, y in act[G.ident[o]].items()):
            raise NotFunctorial(f"identity at object {o} acts non-trivially")
    for f in G.morphisms:
        for g in G.out(G.tgt[f]):
            gf = act[G.compose(g, f)]
            ag, af = act[g], act[f]
            for x in fibers[G.src[f]]:
                if gf[x] != ag[af[x]]:
                    raise NotFunctorial(f"action of {g} o {f} differs from the composite action")


def validate_gset(G, fibers, act, variance=LEFT):
    """Build a G-set from labelled data, checking functoriality.

    ``fibers`` maps object index to a list of element labels (labels must
    be distinct across fibers).  ``act`` maps morphism index to a dict of
    labels.  For ``variance="right"`` a morphism ``g: a -> b`` acts from the
    fiber over ``b`` to the fiber over ``a``.
    """
    base = G if variance == LEFT else opposite(G)
    labels, obj = [], []
    for o in G.objects:
        for lab in fibers.get(o, ()):
            labels.append(lab)
            obj.append(o)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise NotFunctorial("duplicate element labels")
    acts = []
    for m in G.morphisms:
        raw = act.get(m, {})
        try:
            acts.append({index[x]: index[y] for x, y in raw.items()})
        except KeyError as exc:
            raise NotFunctorial(f"action of morphism {m} names unknown element {exc.args[0]!r}")
    _check_functorial(base, obj, acts)
    return GSet(base, tuple(obj), tuple(acts), variance, tuple(labels))


def check_gset(T):
    _check_functorial(T.base, T.obj, T.act)
    return T


def validate_gset_map(components, S, T):
    components = tuple(components)
    if S.base != T.base or S.variance != T.variance:
        raise BaseMismatch("G-sets live over different bases")
    if len(components) != S.size:
        raise NotFunctorial("map is not defined on every element")
    for x, y in enumerate(components):
        if T.obj[y] != S.obj[x]:
            raise NotFunctorial(f"element {x} is not sent into the matching fiber")
    for m in S.base.morphisms:
        for x, gx in S.act[m].items():
            if components[gx] != T.act[m][components[x]]:
                raise NotFunctorial(f"map is not natural at morphism {m}")
    return GSetMap(S, T, components)


def identity_map(T):
    return GSetMap(T, T, tuple(T.elements))


def constant_gset(G, variance=LEFT):
    """The terminal G-set ``*`` with singleton fibers."""
    base = G if variance == LEFT else opposite(G)
    return GSet(base, tuple(base.objects),
                tuple({base.src[m]: base.tgt[m]} for m in base.morphisms), variance)


def corepresentable(G, gamma0):
    """``G(gamma0, -)``: the fiber over ``c`` is ``G(gamma0, c)``, acted on by post-composition."""
    mors = G.out(gamma0)
    index = {f: i for i, f in enumerate(mors)}
    obj = tuple(G.tgt[f] for f in mors)
    act = tuple({index[f]: index[G.compose(m, f)] for f in mors if G.tgt[f] == G.src[m]}
                for m in G.morphisms)
    return GSet(G, obj, act, LEFT, tuple(G.mor_labels[f] for f in mors))


def representable(G, gamma0):
    """``G(-, gamma0)`` as a right G-set, acted on by pre-composition."""
    T = corepresentable(opposite(G), gamma0)
    return GSet(T.base, T.obj, T.act, RIGHT, T.labels)


def transitive_gset(G, gamma0, stabilizer):
    """``G(gamma0, -)/K`` for a subgroup ``K`` of the automorphisms of ``gamma0``.

    The element ``[f]`` is the orbit ``{f o k : k in K}``; ``K`` trivial gives
    the corepresentable G-set.
    """
    K = tuple(sorted(stabilizer))
    classes, cls = [], {}
    for f in G.out(gamma0):
        if f in cls:
            continue
        orbit = sorted({G.compose(f, k) for k in K})
        for h in orbit:
            cls[h] = len(classes)
        classes.append(orbit[0])
    obj = tuple(G.tgt[f] for f in classes)
    act = tuple({i: cls[G.compose(m, f)] for i, f in enumerate(classes) if G.tgt[f] == G.src[m]}
                for m in G.morphisms)
    return GSet(G, obj, act, LEFT)


def coproduct(*sets):
    """Disjoint union of G-sets over one base, in argument order."""
    if not sets:
        raise ValueError("need at least one G-set")
    base, variance = sets[0].base, sets[0].variance
    obj, labels = [], []
    acts = [dict() for _ in base.morphisms]
    offset = 0
    for i, T in enumerate(sets):
        if T.base != base or T.variance != variance:
            raise BaseMismatch("coproduct of G-sets over different bases")
        obj += T.obj
        labels += [(i, lab) for lab in T.labels]
        for m in base.morphisms:
            acts[m].update({x + offset: y + offset for x, y in T.act[m].items()})
        offset += T.size
    return GSet(base, tuple(obj), tuple(acts), variance, tuple(labels))


def restrict(T, elements):
    """The sub-G-set on a union of orbits, renumbered in the given order."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    act = tuple({index[x]: index[y] for x, y in a.items() if x in index} for a in T.act)
    return GSet(T.base, tuple(T.obj[e] for e in elements), act, T.variance,
                tuple(T.labels[e] for e in elements))


def relabel(T, perm):
    """Isomorphic copy in which element ``e`` becomes ``perm[e]``."""
    n = T.size
    inv = [0] * n
    for e, p in enumerate(perm):
        inv[p] = e
    obj = tuple(T.obj[inv[i]] for i in range(n))
    act = tuple({perm[x]: perm[y] for x, y in a.items()} for a in T.act)
    labels = tuple(T.labels[inv[i]] for i in range(n))
    return GSet(T.base, obj, act, T.variance, labels)


# orbits

@dataclass
class Colimit:
    """Orbit set of a G-set: ``projection[e]`` is the class index of ``e``."""
    classes: tuple
    projection: tuple

    @property
    def representatives(self):
        return tuple(c[0] for c in self.classes)

    def __len__(self):
        return len(self.classes)


def colimit(T):
    """``G\\T``: orbits under ``x ~ gx``; representatives are least elements."""
    uf = UnionFind(T.size)
    for a in T.act:
        for x, y in a.items():
            uf.union(x, y)
    classes = uf.classes()
    proj = [0] * T.size
    for i, c in enumerate(classes):
        for x in c:
            proj[x] = i
    return Colimit(tuple(map(tuple, classes)), tuple(proj))


def is_finite(T):
    """Every G-set here has a finite orbit set."""
    return len(colimit(T)) < float("inf")


@dataclass
class FreeVerdict:
    free: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.free


def is_free(T):
    """Check that ``g -> gx`` is injective on ``G(c, c')`` for all ``x`` in ``T_c``.

    The search runs lexicographically over ``(c', c, x)``; the first
    collision is reported as ``(c', c, x, g1, g2)``.
    """
    G = T.base
    for c2 in G.objects:
        for c in G.objects:
            homs = G.hom(c, c2)
            if len(homs) < 2:
                continue
            for x in T.fibers[c]:
                seen = {}
                for g in homs:
                    y = T.act[g][x]
                    if y in seen:
                        return FreeVerdict(False, (c2, c, x, seen[y], g))
                    seen[y] = g
    return FreeVerdict(True)


def shear_is_injective(T):
    """Injectivity of ``(g, x) -> (x, gx)`` on composable pairs."""
    G = T.base
    seen = set()
    count = 0
    for g in G.morphisms:
        for x, y in T.act[g].items():
            seen.add((x, y))
            count += 1
    return len(seen) == count


@dataclass
class FreeDecomposition:
    """``summands[i] = (c_i, x_i)``; ``iso`` maps the coproduct of the
    corepresentables ``G(c_i, -)`` onto ``T`` by ``f -> f x_i``."""
    summands: tuple
    coproduct: GSet
    iso: GSetMap


def decompose_free(T):
    if not is_free(T):
        raise NotFree("G-set is not free")
    G = T.base
    reps = colimit(T).representatives
    pieces = [corepresentable(G, T.obj[x]) for x in reps] if reps else []
    if pieces:
        C = coproduct(*pieces)
    else:
        C = GSet(G, (), tuple({} for _ in G.morphisms), T.variance)
    comps = []
    for x, P in zip(reps, pieces):
        for f in G.out(T.obj[x]):
            comps.append(T.act[f][x])
    iso = validate_gset_map(comps, C, T)
    if len(set(comps)) != T.size:
        raise NotFree("orbit map is not bijective")
    return FreeDecomposition(tuple((T.obj[x], x) for x in reps), C, iso)


def find_gset_iso(S, T):
    """A G-set isomorphism ``S -> T`` or ``None``."""
    if S.base != T.base or S.variance != T.variance:
        return None
    perm = actions.find_iso(S.structure, T.structure)
    if perm is None:
        return None
    return validate_gset_map(perm, S, T)


# coequalizers

@dataclass
class Coequalizer:
    quotient: GSet
    projection: GSetMap


def coequalizer(u, v):
    """Coequalizer of parallel maps, computed fiberwise and given the induced action."""
    if u.source is not v.source and u.source != v.source:
        raise BaseMismatch("maps are not parallel")
    if u.target is not v.target and u.target != v.target:
        raise BaseMismatch("maps are not parallel")
    Y = u.target
    uf = UnionFind(Y.size)
    for x in u.source.elements:
        uf.union(u(x), v(x))
    classes = uf.classes()
    cls = [0] * Y.size
    for i, c in enumerate(classes):
        for y in c:
            cls[y] = i
    acts = []
    for m in Y.base.morphisms:
        a = {}
        for y, gy in Y.act[m].items():
            c = cls[y]
            if c in a and a[c] != cls[gy]:
                raise NotFunctorial("induced action on the coequalizer is ill-defined")
            a[c] = cls[gy]
        acts.append(a)
    Z = GSet(Y.base, tuple(Y.obj[c[0]] for c in classes), tuple(acts), Y.variance)
    proj = validate_gset_map(cls, Y, Z)
    return Coequalizer(Z, proj)


def factor_through(coeq, w):
    """The unique map ``Z -> W`` with ``w = factor o projection``."""
    comps = [None] * coeq.quotient.size
    for y in coeq.projection.source.elements:
        c = coeq.projection(y)
        if comps[c] is None:
            comps[c] = w(y)
        elif comps[c] != w(y):
            raise NotFunctorial("map does not coequalize")
    return validate_gset_map(comps, coeq.quotient, w.target)


def kernel_pair(f):
    """``X x_Y X`` with its two projections, for a map ``f: X -> Y``."""
    X = f.source
    pairs = [(a, b) for a in X.elements for b in X.elements if f(a) == f(b)]
    index = {p: i for i, p in enumerate(pairs)}
    acts = tuple({index[a, b]: index[X.act[m][a], X.act[m][b]]
                  for (a, b) in pairs if X.obj[a] == X.base.src[m]}
                 for m in X.base.morphisms)
    K = GSet(X.base, tuple(X.obj[a] for a, _ in pairs), acts, X.variance, tuple(pairs))
    p1 = validate_gset_map([a for a, _ in pairs], K, X)
    p2 = validate_gset_map([b for _, b in pairs], K, X)
    return K, p1, p2


# translation groupoids and covers

def translation_groupoid(T):
    """``GX`` with objects the elements of ``T`` and ``GX(x, y) = {g : gx = y}``.

    Morphism labels are ``(g, x)`` for the arrow ``x -> gx``.  Returns the
    groupoid and its projection functor to ``G``.
    """
    G = T.base
    mors = []
    for x in T.elements:
        for g in G.out(T.obj[x]):
            mors.append(((g, x), x, T.act[g][x]))
    GX = Groupoid.from_labels(
        T.labels, mors,
        [(G.ident[T.obj[x]], x) for x in T.elements],
        lambda gl, fl: (G.compose(gl[0], fl[0]), fl[1]),
        lambda fl: (G.inv[fl[0]], T.act[fl[0]][fl[1]]),
    )
    proj = Functor(GX, G, tuple(T.obj), tuple(lab[0] for lab in GX.mor_labels))
    return GX, proj


@dataclass
class CoverVerdict:
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def is_covering_map(p):
    """Unique lifting: for each ``e'`` and ``g: p(e') -> c`` exactly one ``h`` out of ``e'`` with ``p(h) = g``."""
    H, G = p.source, p.target
    for e in H.objects:
        counts = {}
        for h in H.out(e):
            counts[p.mor_map[h]] = counts.get(p.mor_map[h], 0) + 1
        for g in G.out(p.obj_map[e]):
            if counts.get(g, 0) != 1:
                return CoverVerdict(False, (e, g, counts.get(g, 0)))
    return CoverVerdict(True)


def gset_from_cover(p):
    """The G-set with fibers ``p^{-1}(c)`` and action by unique lifting."""
    if not is_covering_map(p):
        raise NotACover("functor does not have unique lifting")
    H, G = p.source, p.target
    lift = {}
    for h in H.morphisms:
        lift[H.src[h], p.mor_map[h]] = H.tgt[h]
    act = tuple({e: lift[e, g] for e in H.objects if p.obj_map[e] == G.src[g]}
                for g in G.morphisms)
    return GSet(G, tuple(p.obj_map), act, LEFT, H.obj_labels)


def translation_round_trip(T):
    """Isomorphism ``T -> gset_from_cover(projection of GX)``.

    Objects of ``GX`` are the elements of ``T`` in order, so the expected
    isomorphism is the identity on element indices.
    """
    _, proj = translation_groupoid(T)
    S = gset_from_cover(proj)
    return validate_gset_map(tuple(T.elements), T, S)


def cover_round_trip(p):
    """Isomorphism of groupoids over ``G`` between ``GX`` and ``H``, for ``X = gset_from_cover(p)``.

    Returns the functor ``GX -> H``; it is bijective on objects and
    morphisms and commutes strictly with the projections.
    """
    H = p.source
    X = gset_from_cover(p)
    GX, proj = translation_groupoid(X)
    lift = {}
    for h in H.morphisms:
        lift[H.src[h], p.mor_map[h]] = h
    mor_map = tuple(lift[x, g] for (g, x) in GX.mor_labels)
    return Functor(GX, H, tuple(range(GX.n_objects)), mor_map), proj


# balanced products

@dataclass
class BalancedProduct:
    """Quotient of ``Q x_{G_0} P``; ``cls[(q, p)]`` is the class of a pair."""
    classes: tuple
    cls: dict

    def __len__(self):
        return len(self.classes)


def balanced_product(Q, P):
    """``Q x_G P = Q x_{G_0} P / (qg, p) ~ (q, gp)`` for a right ``Q`` and left ``P``."""
    if Q.variance != RIGHT or P.variance != LEFT:
        raise BaseMismatch("balanced product needs a right G-set and a left G-set")
    G = P.base
    if opposite(Q.base) != G:
        raise BaseMismatch("G-sets act through different groupoids")
    pairs = [(q, p) for q in Q.elements for p in P.fibers[Q.obj[q]]]
    index = {pr: i for i, pr in enumerate(pairs)}
    uf = UnionFind(len(pairs))
    for g in G.morphisms:
        # g: a -> b acts Q^b -> Q^a and P_a -> P_b
        qg, gp = Q.act[g], P.act[g]
        for q in Q.fibers[G.tgt[g]]:
            for p in P.fibers[G.src[g]]:
                uf.union(index[qg[q], p], index[q, gp[p]])
    classes = uf.classes()
    cls = {}
    for i, c in enumerate(classes):
        for j in c:
            cls[pairs[j]] = i
    return BalancedProduct(tuple(tuple(pairs[j] for j in c) for c in classes), cls)
