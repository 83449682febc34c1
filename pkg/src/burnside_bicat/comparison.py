"""Passing between bi-sets and spans.

``biset_to_span`` uses the double translation groupoid ``GXH``;
``span_to_biset`` uses the coend ``G(p(-), gamma) x_K H(eta, q(-))``.
``beta_iso``, ``alpha_equivalence`` and ``phi_equivalence`` check, instance
by instance, that the two round trips and composition agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bisets import (
    Composite,
    class_map,
    column,
    compose_bisets,
    composite,
    admissibility,
    s_of_functor,
    t_of_functor,
    validate_biset_iso,
    validate_biset_map,
    BiSet,
)
from .errors import BaseMismatch, NotAdmissible, NotFunctorial
from .groupoids import (
    Functor,
    Groupoid,
    components,
    identity_nat_trans,
    is_equivalence,
    point_functor,
    validate_functor,
)
from .gsets import colimit, translation_groupoid
from .spans import (
    compose_spans_full,
    homotopy_fiber,
    make_span,
    pullback,
    validate_span_morphism,
)


# double translation groupoid

@dataclass(eq=False)
class DoubleTranslation:
    """``GXH``: object ``x`` is the element ``x`` of ``X``, labelled ``(gamma, x, eta)``.

    The morphism labelled ``(xb, g, h)`` goes from ``xb`` to ``g xb h^-1``.
    """
    groupoid: Groupoid
    p: Functor
    q: Functor
    biset: BiSet


def double_translation(X):
    G, H = X.G, X.H
    mors = []
    for xb in X.elements:
        for g in G.out(X.gamma[xb]):
            gx = X.lact[g][xb]
            for h in H.out(X.eta[xb]):
                mors.append(((xb, g, h), xb, X.ract[H.inv[h]][gx]))
    target = {m[0]: m[2] for m in mors}
    GXH = Groupoid.from_labels(
        tuple((X.gamma[x], x, X.eta[x]) for x in X.elements), mors,
        [(x, G.ident[X.gamma[x]], H.ident[X.eta[x]]) for x in X.elements],
        lambda b, a: (a[0], G.compose(b[1], a[1]), H.compose(b[2], a[2])),
        lambda a: (target[a], G.inv[a[1]], H.inv[a[2]]),
    )
    labels = GXH.mor_labels
    p = Functor(GXH, G, tuple(X.gamma), tuple(lab[1] for lab in labels))
    q = Functor(GXH, H, tuple(X.eta), tuple(lab[2] for lab in labels))
    return DoubleTranslation(GXH, p, q, X)


def biset_to_span(X):
    """``H <-q- GXH -p-> G``; the cover property of ``q`` is re-verified."""
    bad = admissibility(X)
    if bad is not None:
        raise NotAdmissible("bi-set is not admissible", eta=bad[0], witness=bad[1])
    D = double_translation(X)
    return make_span(D.q, D.p)


def functoriality_on_morphisms(f):
    """The span morphism ``GX'H -> GXH`` induced by a bi-set map ``f: X' -> X``."""
    A1, A = biset_to_span(f.source), biset_to_span(f.target)
    S, T = A1.apex, A.apex
    obj_map = [f.mapping[x] for x in S.objects]
    mor_map = [T.mor_index[f.mapping[xb], g, h] for (xb, g, h) in S.mor_labels]
    t = validate_functor(obj_map, mor_map, S, T)
    return validate_span_morphism(t, identity_nat_trans(A1.right), identity_nat_trans(A1.left), A1, A)


# from spans to bi-sets

@dataclass(eq=False)
class SpanCoend:
    """``span_to_biset`` together with the coend it was read from.

    ``cls[(g, kappa, h)]`` is the element represented by the triple.
    """
    span: object
    biset: BiSet
    composite: Composite
    S: BiSet
    T: BiSet

    def cls(self, g, kappa, h):
        return self.composite.cls[self.S.index[kappa, g], self.T.index[kappa, h]]


def span_coend(A):
    """``X^eta_gamma = G(p(-), gamma) x_K H(eta, q(-))`` as the composite ``S(p) x_K T(q)``.

    Element labels are the least triples ``(g, kappa, h)`` of each class.
    """
    S, T = s_of_functor(A.right), t_of_functor(A.left)
    compose_bisets(S, T)   # raises NotAdmissible unless the left leg is a cover
    C = composite(S, T)
    Z = C.biset
    labels = tuple((S.labels[x][1], S.labels[x][0], T.labels[y][1]) for x, y in Z.labels)
    X = BiSet(Z.H, Z.G, Z.eta, Z.gamma, Z.lact, Z.ract, labels)
    return SpanCoend(A, X, C, S, T)


def span_to_biset(A):
    return span_coend(A).biset


def span_morphism_to_biset_map(m):
    """``(g, kappa', h) -> (g theta_kappa'^-1, t kappa', phi_kappa' h)`` on coend classes."""
    src, tgt = span_coend(m.source), span_coend(m.target)
    G, H = m.target.G, m.target.H
    S1, T1 = src.S, src.T

    def send(pair):
        kap, g = S1.labels[pair[0]]
        _, h = T1.labels[pair[1]]
        return tgt.cls(G.compose(g, G.inv[m.theta[kap]]), m.t.obj_map[kap],
                       H.compose(m.phi[kap], h))

    images = class_map(src.composite, None, send)
    return validate_biset_map(images, src.biset, tgt.biset)


# round trips

def beta_iso(X):
    """``G(p(-), gamma) x_{GXH} H(eta, q(-)) -> X``, ``(g, x, h) -> g x h``."""
    A = biset_to_span(X)
    sc = span_coend(A)
    S, T = sc.S, sc.T

    def send(pair):
        x, g = S.labels[pair[0]]
        _, h = T.labels[pair[1]]
        return X.ract[h][X.lact[g][x]]

    images = class_map(sc.composite, None, send)
    return validate_biset_iso(images, sc.biset, X)


@dataclass(eq=False)
class AlphaResult:
    morphism: object        # SpanMorphism A -> biset_to_span(span_to_biset(A))
    verdict: object         # EquivalenceVerdict for the apex functor

    def __bool__(self):
        return bool(self.verdict)


def alpha_equivalence(A):
    """``kappa -> (p kappa, [1, kappa, 1], q kappa)``, ``k -> (pk, qk)``.

    The functor commutes with both legs on the nose; the verdict decides
    whether it is an equivalence of apexes.
    """
    sc = span_coend(A)
    D = double_translation(sc.biset)
    B = make_span(D.q, D.p)
    K, G, H = A.apex, A.G, A.H
    p, q = A.right, A.left
    obj_map = [sc.cls(G.ident[p.obj_map[k]], k, H.ident[q.obj_map[k]]) for k in K.objects]
    mor_map = [D.groupoid.mor_index[obj_map[K.src[k]], p.mor_map[k], q.mor_map[k]]
               for k in K.morphisms]
    a = validate_functor(obj_map, mor_map, K, D.groupoid)
    m = validate_span_morphism(a, identity_nat_trans(A.right), identity_nat_trans(A.left), A, B)
    return AlphaResult(m, is_equivalence(a))


def phi_equivalence(X, Y):
    """``(GXH) x_H (HYK) -> G(X x_H Y)K``, ``(x, h, y) -> [xh, y]``, ``((g, h^), (h', k)) -> (g, k)``."""
    if X.H != Y.G:
        raise BaseMismatch("middle groupoids differ")
    AX, AY = biset_to_span(X), biset_to_span(Y)
    C = compose_spans_full(AX, AY)
    Z = composite(X, Y)
    DZ = double_translation(Z.biset)
    target = make_span(DZ.q, DZ.p)
    P = C.pullback.groupoid
    GXH, HYK = AX.apex, AY.apex
    obj_map = [Z.cls[X.ract[h][x], y] for (x, h, y) in P.obj_labels]
    mor_map = []
    for (i, km, lm) in P.mor_labels:
        _, g, _ = GXH.mor_labels[km]
        _, _, k = HYK.mor_labels[lm]
        mor_map.append(DZ.groupoid.mor_index[obj_map[i], g, k])
    f = validate_functor(obj_map, mor_map, P, DZ.groupoid)
    m = validate_span_morphism(f, identity_nat_trans(C.span.right),
                               identity_nat_trans(C.span.left), C.span, target)
    return AlphaResult(m, is_equivalence(f))


# Grothendieck construction

@dataclass(eq=False)
class Grothendieck:
    """``FH`` for a strict functor ``F: H^op -> groupoids``.

    Objects are ``(eta, phi)``; the morphism labelled ``(h, f, phi)`` goes
    from ``(src h, src f)`` to ``(tgt h, phi)`` with ``f: src f -> F(h)(phi)``.
    """
    groupoid: Groupoid
    projection: Functor
    fibers: tuple
    maps: tuple


def _check_strict(H, fibers, maps):
    if len(fibers) != H.n_objects or len(maps) != H.n_morphisms:
        raise NotFunctorial("need one groupoid per object and one functor per morphism")
    for h in H.morphisms:
        F = maps[h]
        if F.source != fibers[H.tgt[h]] or F.target != fibers[H.src[h]]:
            raise NotFunctorial(f"F({h}) does not go F(tgt) -> F(src)")
    for o in H.objects:
        F = maps[H.ident[o]]
        if F.obj_map != tuple(fibers[o].objects) or F.mor_map != tuple(fibers[o].morphisms):
            raise NotFunctorial(f"F(1_{o}) is not the identity")
    for h1 in H.morphisms:
        for h2 in H.out(H.tgt[h1]):
            F12 = maps[H.compose(h2, h1)]
            A, B = maps[h1], maps[h2]
            if (F12.obj_map != tuple(A.obj_map[o] for o in B.obj_map)
                    or F12.mor_map != tuple(A.mor_map[m] for m in B.mor_map)):
                raise NotFunctorial(f"F({h2} o {h1}) != F({h1}) o F({h2})")


def grothendieck(H, fibers, maps):
    """Build ``FH`` from ``fibers[eta]`` and ``maps[h]: F^eta -> F^eta'`` for ``h: eta' -> eta``.

    Composition is ``(h2, f2) o (h1, f1) = (h2 h1, F(h1)(f2) o f1)``.
    """
    fibers, maps = tuple(fibers), tuple(maps)
    _check_strict(H, fibers, maps)
    objs = [(e, phi) for e in H.objects for phi in fibers[e].objects]
    index = {o: i for i, o in enumerate(objs)}
    mors = []
    for e, phi in objs:
        for h in H.into(e):
            e1 = H.src[h]
            Fe1 = fibers[e1]
            for f in Fe1.into(maps[h].obj_map[phi]):
                mors.append(((h, f, phi), index[e1, Fe1.src[f]], index[e, phi]))

    def compose(b, a):
        h2, f2, phi2 = b
        h1, f1, _ = a
        Fe1 = fibers[H.src[h1]]
        return (H.compose(h2, h1), Fe1.compose(maps[h1].mor_map[f2], f1), phi2)

    def inverse(a):
        h, f, _ = a
        e1 = H.src[h]
        hi = H.inv[h]
        return (hi, maps[hi].mor_map[fibers[e1].inv[f]], fibers[e1].src[f])

    FH = Groupoid.from_labels(
        tuple(objs), mors,
        [(H.ident[e], fibers[e].ident[phi], phi) for e, phi in objs],
        compose, inverse,
    )
    proj = Functor(FH, H, tuple(o[0] for o in objs), tuple(lab[0] for lab in FH.mor_labels))
    return Grothendieck(FH, proj, fibers, maps)


def fiber_comparison(GC, eta0):
    """``F^eta0 -> FH x_H *``, ``phi -> ((eta0, phi), 1, *)`` and ``f -> (1, f)``."""
    H = GC.projection.target
    P = pullback(GC.projection, point_functor(H, eta0)).groupoid
    FH = GC.groupoid
    F0 = GC.fibers[eta0]
    one = H.ident[eta0]
    obj_map = [P.obj_index[FH.obj_index[eta0, phi], one, 0] for phi in F0.objects]
    mor_map = [P.mor_index[obj_map[F0.src[f]], FH.mor_index[one, f, F0.tgt[f]], 0]
               for f in F0.morphisms]
    return validate_functor(obj_map, mor_map, F0, P)


def gx_functor(X):
    """``eta -> G X^eta`` with ``h: eta' -> eta`` acting by ``x -> x h``."""
    H = X.H
    cols, groupoids = [], []
    for e in H.objects:
        T, elems = column(X, e)
        GX, _ = translation_groupoid(T)
        cols.append({x: i for i, x in enumerate(elems)})
        groupoids.append(GX)
    maps = []
    for h in H.morphisms:
        a, b = H.src[h], H.tgt[h]
        src, tgt = groupoids[b], groupoids[a]
        glob_b = {i: x for x, i in cols[b].items()}
        xh = [cols[a][X.ract[h][glob_b[i]]] for i in src.objects]
        mor_map = [tgt.mor_index[g, xh[i]] for (g, i) in src.mor_labels]
        maps.append(Functor(src, tgt, tuple(xh), tuple(mor_map)))
    return groupoids, maps


@dataclass
class Pi0Chain:
    colimit: int          # |colim_G X^eta0|
    translation: int      # |pi0(G X^eta0)|
    fiber: int            # |pi0(GXH x_H *)|
    comparison: bool      # F^eta0 -> FH x_H * is an equivalence

    def __bool__(self):
        return self.comparison and self.colimit == self.translation == self.fiber


def pi0_chain(X, eta0):
    """Three independent counts of the orbit set of the column over ``eta0``."""
    T, _ = column(X, eta0)
    n1 = len(colimit(T))
    GX, _ = translation_groupoid(T)
    n2 = len(components(GX))
    D = double_translation(X)
    n3 = len(components(homotopy_fiber(D.q, eta0)))
    groupoids, maps = gx_functor(X)
    GC = grothendieck(X.H, groupoids, maps)
    ok = bool(is_equivalence(fiber_comparison(GC, eta0)))
    return Pi0Chain(n1, n2, n3, ok)
