"""Spans of groupoids ``H <-q- L -p-> G`` with ``q`` a finite weak cover.

The bicategorical pullback is the workhorse: composition of spans,
homotopy fibers, the unit equivalence and the double coset formula are all
read off from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import BaseMismatch, NotAFiniteWeakCover, NotAFunctor, NotComposable, NotNatural
from .groupoids import (
    Functor,
    Groupoid,
    NatTrans,
    compose_functors,
    compose_nat_trans,
    identity_functor,
    identity_nat_trans,
    is_discrete,
    is_equivalence,
    is_isomorphism,
    point_functor,
    validate_functor,
    validate_nat_trans,
    whisker_left,
    whisker_right,
)


# pullbacks

class Pullback(NamedTuple):
    """``K x_G L`` with its projections and the comparison ``p o to_L -> m o to_K``."""
    groupoid: Groupoid
    to_K: Functor
    to_L: Functor
    comparison: NatTrans


def pullback(m, p):
    """Bicategorical pullback of ``K -m-> G <-p- L``.

    Objects are triples ``(kappa, g: p lambda -> m kappa, lambda)`` in
    lexicographic order of indices.  A morphism out of ``(kb, gb, lb)`` is
    a pair ``(k, l)``; it lands in ``(tgt k, m(k) gb p(l)^-1, tgt l)``, which
    is the unique triple making the square commute.  Morphism labels are
    ``(source index, k, l)``.
    """
    if m.target != p.target:
        raise BaseMismatch("pullback of functors with different targets")
    K, G, L = m.source, m.target, p.source
    over = {}
    for lam in L.objects:
        over.setdefault(p.obj_map[lam], []).append(lam)
    objs = []
    for kap in K.objects:
        for g in sorted(G.into(m.obj_map[kap])):
            for lam in over.get(G.src[g], ()):
                objs.append((kap, g, lam))
    index = {o: i for i, o in enumerate(objs)}
    mors = []
    target = {}
    for i, (kb, gb, lb) in enumerate(objs):
        for k in K.out(kb):
            mk = m.mor_map[k]
            for l in L.out(lb):
                g = G.compose(G.compose(mk, gb), G.inv[p.mor_map[l]])
                j = index[K.tgt[k], g, L.tgt[l]]
                target[i, k, l] = j
                mors.append(((i, k, l), i, j))

    def compose(b, a):
        return (a[0], K.compose(b[1], a[1]), L.compose(b[2], a[2]))

    def inverse(a):
        return (target[a], K.inv[a[1]], L.inv[a[2]])

    P = Groupoid.from_labels(
        tuple(objs), mors,
        [(i, K.ident[o[0]], L.ident[o[2]]) for i, o in enumerate(objs)],
        compose, inverse,
    )
    to_K = Functor(P, K, tuple(o[0] for o in objs), tuple(lab[1] for lab in P.mor_labels))
    to_L = Functor(P, L, tuple(o[2] for o in objs), tuple(lab[2] for lab in P.mor_labels))
    comparison = NatTrans(compose_functors(p, to_L), compose_functors(m, to_K),
                          tuple(o[1] for o in objs))
    return Pullback(P, to_K, to_L, comparison)


def homotopy_fiber(m, gamma):
    """The pullback of ``m`` along the point ``gamma``; objects ``(kappa, g: gamma -> m kappa, 0)``."""
    return pullback(m, point_functor(m.target, gamma)).groupoid


@dataclass
class WeakCoverVerdict:
    holds: bool
    witness: tuple | None = None   # (gamma, a, b, number of morphisms a -> b in the fiber)

    def __bool__(self):
        return self.holds


def is_finite_weak_cover(q):
    """Every homotopy fiber of ``q`` is discrete (finiteness is automatic here).

    An automorphism of ``(kappa, g)`` in the fiber over ``gamma`` is a ``k``
    in ``Aut(kappa)`` with ``q(k) = 1``, so the fibers are discrete exactly
    when ``q`` is injective on vertex groups.  That test runs first; the
    fibers are only built to report a witness.
    """
    K = q.source
    if all(q.mor_map[k] != q.target.ident[q.obj_map[o]]
           for o in K.objects for k in K.aut(o) if k != K.ident[o]):
        return WeakCoverVerdict(True)
    return weak_cover_by_fibers(q)


def weak_cover_by_fibers(q):
    """The same verdict computed from the homotopy fibers themselves."""
    for gamma in q.target.objects:
        F = homotopy_fiber(q, gamma)
        if not is_discrete(F):
            for a in F.objects:
                for b in F.objects:
                    n = len(F.hom(a, b))
                    if n > 1:
                        return WeakCoverVerdict(False, (gamma, a, b, n))
    return WeakCoverVerdict(True)


# spans and their morphisms

@dataclass(eq=False)
class Span:
    """``H <-left- apex -right-> G``, an object of ``C(H, G)``."""
    apex: Groupoid
    left: Functor
    right: Functor

    @property
    def H(self):
        return self.left.target

    @property
    def G(self):
        return self.right.target

    def __repr__(self):
        return f"Span({self.H!r} <- {self.apex!r} -> {self.G!r})"


def make_span(left, right, check=True):
    if left.source != right.source:
        raise BaseMismatch("legs have different sources")
    if check:
        v = is_finite_weak_cover(left)
        if not v:
            raise NotAFiniteWeakCover(
                f"left leg is not a finite weak cover: fiber over {v.witness[0]} "
                f"has {v.witness[3]} morphisms between objects {v.witness[1]} and {v.witness[2]}")
    return Span(left.source, left, right)


def identity_span(G):
    one = identity_functor(G)
    return Span(G, one, one)


def empty_span(H, G):
    from .groupoids import empty_groupoid
    E = empty_groupoid()
    return Span(E, Functor(E, H, (), ()), Functor(E, G, (), ()))


@dataclass(eq=False)
class SpanMorphism:
    """``(t, theta, phi)`` from ``source`` to ``target``.

    ``t: L' -> L`` need not be invertible; ``theta: p' -> p t`` on the right
    legs and ``phi: q' -> q t`` on the left legs.
    """
    source: Span
    target: Span
    t: Functor
    theta: NatTrans
    phi: NatTrans

    @property
    def is_isomorphism(self):
        return is_isomorphism(self.t)


def validate_span_morphism(t, theta, phi, A1, A):
    """Check ``t: A1.apex -> A.apex`` and the two transformations; component tuples are accepted."""
    if t.source != A1.apex or t.target != A.apex:
        raise NotAFunctor("t does not go between the apexes")
    if A1.H != A.H or A1.G != A.G:
        raise BaseMismatch("spans have different ends")
    if isinstance(theta, NatTrans):
        theta = theta.components
    if isinstance(phi, NatTrans):
        phi = phi.components
    th = validate_nat_trans(theta, A1.right, compose_functors(A.right, t))
    ph = validate_nat_trans(phi, A1.left, compose_functors(A.left, t))
    return SpanMorphism(A1, A, t, th, ph)


def identity_span_morphism(A):
    return SpanMorphism(A, A, identity_functor(A.apex),
                        identity_nat_trans(A.right), identity_nat_trans(A.left))


def compose_span_morphisms(m2, m1):
    """``m2 o m1 = (t2 t1, theta2_{t1} o theta1, phi2_{t1} o phi1)``."""
    if m1.target is not m2.source and not _same_span(m1.target, m2.source):
        raise NotComposable("span morphisms are not composable")
    t = compose_functors(m2.t, m1.t)
    theta = compose_nat_trans(whisker_right(m2.theta, m1.t), m1.theta)
    phi = compose_nat_trans(whisker_right(m2.phi, m1.t), m1.phi)
    return SpanMorphism(m1.source, m2.target, t, theta, phi)


def _same_span(A, B):
    return A.apex == B.apex and A.left == B.left and A.right == B.right


def same_morphism(a, b):
    """Equality of component data."""
    return (a.t.obj_map == b.t.obj_map and a.t.mor_map == b.t.mor_map
            and a.theta.components == b.theta.components
            and a.phi.components == b.phi.components)


# two-cells

@dataclass(eq=False)
class TwoCell:
    """``psi: t_bar -> t`` between parallel span morphisms, compatible with both legs."""
    source: SpanMorphism
    target: SpanMorphism
    psi: NatTrans


def validate_two_cell(components, mbar, m):
    """Check ``psi: mbar.t -> m.t`` with ``p psi o theta_bar = theta`` and ``q psi o phi_bar = phi``."""
    if not (_same_span(mbar.source, m.source) and _same_span(mbar.target, m.target)):
        raise NotComposable("two-cell between non-parallel morphisms")
    psi = validate_nat_trans(components, mbar.t, m.t)
    A = m.target
    for leg, tb, t in ((A.right, mbar.theta, m.theta), (A.left, mbar.phi, m.phi)):
        got = compose_nat_trans(whisker_left(leg, psi), tb)
        if got.components != t.components:
            raise NotNatural("two-cell is not compatible with a leg")
    return TwoCell(mbar, m, psi)


def identity_two_cell(m):
    return TwoCell(m, m, identity_nat_trans(m.t))


def vertical_two_cells(c2, c1):
    if c1.target is not c2.source:
        raise NotComposable("two-cells are not composable")
    return TwoCell(c1.source, c2.target, compose_nat_trans(c2.psi, c1.psi))


def compose_two_cells(c2, c1):
    """Horizontal composite along ``m2 o m1``.

    ``psi_x = psi2_{t1 x} o tbar2(psi1_x)``; it must equal
    ``t2(psi1_x) o psi2_{tbar1 x}``, which is checked.
    """
    mbar = compose_span_morphisms(c2.source, c1.source)
    m = compose_span_morphisms(c2.target, c1.target)
    L = c2.target.target.apex
    tb2, t2 = c2.source.t, c2.target.t
    tb1, t1 = c1.source.t, c1.target.t
    comps = []
    for x in c1.source.source.apex.objects:
        a = L.compose(c2.psi[t1.obj_map[x]], tb2.mor_map[c1.psi[x]])
        b = L.compose(t2.mor_map[c1.psi[x]], c2.psi[tb1.obj_map[x]])
        if a != b:
            raise NotNatural(f"the two diagonals differ at object {x}")
        comps.append(a)
    return validate_two_cell(comps, mbar, m)


# composition

@dataclass(eq=False)
class SpanComposite:
    """``A o B`` with the pullback that defines its apex."""
    span: Span
    pullback: Pullback


def compose_spans_full(A, B, check=True):
    """``A o B`` for ``A = (G <-n K -m-> F)`` and ``B = (H <-q L -p-> G)``.

    The apex is ``K x_G L`` over ``n`` and ``p``; legs are ``q o to_L`` and
    ``m o to_K``.
    """
    if A.H != B.G:
        raise BaseMismatch("middle groupoids differ")
    P = pullback(A.left, B.right)
    left = compose_functors(B.left, P.to_L)
    right = compose_functors(A.right, P.to_K)
    span = make_span(left, right, check=check)
    return SpanComposite(span, P)


def compose_spans(A, B, check=True):
    return compose_spans_full(A, B, check).span


def pullback_map(P1, P, s, sigma, t, theta):
    """The functor ``K' x_G L' -> K x_G L`` induced by ``(s, sigma: n' -> n s)`` and ``(t, theta: p' -> p t)``.

    ``(kappa', g, lambda') -> (s kappa', sigma o g o theta^-1, t lambda')`` and
    ``(k', l') -> (s k', t l')``.
    """
    G = sigma.source.target
    Q, Q1 = P.groupoid, P1.groupoid
    index = Q.obj_index
    obj_map = []
    for (kap, g, lam) in Q1.obj_labels:
        g2 = G.compose(sigma[kap], G.compose(g, G.inv[theta[lam]]))
        obj_map.append(index[s.obj_map[kap], g2, t.obj_map[lam]])
    mor_map = []
    for (i, k, l) in Q1.mor_labels:
        mor_map.append(Q.mor_index[obj_map[i], s.mor_map[k], t.mor_map[l]])
    return validate_functor(obj_map, mor_map, Q1, Q)


def horizontal_compose_morphisms(mA, mB):
    """``mA * mB: A' o B' -> A o B`` via naturality of pullbacks."""
    C1 = compose_spans_full(mA.source, mB.source, check=False)
    C = compose_spans_full(mA.target, mB.target, check=False)
    u = pullback_map(C1.pullback, C.pullback, mA.t, mA.phi, mB.t, mB.theta)
    theta = whisker_right(mA.theta, C1.pullback.to_K)
    phi = whisker_right(mB.phi, C1.pullback.to_L)
    return validate_span_morphism(u, theta, phi, C1.span, C.span)


# unit equivalence and coherence

class UnitSection(NamedTuple):
    pullback: Pullback
    section: Functor         # s: K -> K x_G G
    projection: Functor      # p1: K x_G G -> K
    iso: NatTrans            # 1 -> s p1


def unit_section(n):
    """``s: K -> K x_G G``, ``kappa -> (kappa, 1, n kappa)``, with ``p1 s = 1`` and ``1 ~ s p1``."""
    K, G = n.source, n.target
    P = pullback(n, identity_functor(G))
    Q = P.groupoid
    obj_map = [Q.obj_index[k, G.ident[n.obj_map[k]], n.obj_map[k]] for k in K.objects]
    mor_map = [Q.mor_index[obj_map[K.src[k]], k, n.mor_map[k]] for k in K.morphisms]
    s = validate_functor(obj_map, mor_map, K, Q)
    p1 = P.to_K
    comps = [Q.mor_index[i, K.ident[kap], g] for i, (kap, g, _) in enumerate(Q.obj_labels)]
    iso = validate_nat_trans(comps, identity_functor(Q), compose_functors(s, p1))
    return UnitSection(P, s, p1, iso)


def right_unitor(A):
    """``A o 1_G -> A`` with ``t = p1``; the left leg needs the comparison transformation."""
    C = compose_spans_full(A, identity_span(A.H), check=False)
    P = C.pullback
    return validate_span_morphism(P.to_K, identity_nat_trans(C.span.right).components,
                                  P.comparison.components, C.span, A)


def right_unitor_inverse(A):
    """``A -> A o 1_G`` via the section ``s``."""
    C = compose_spans_full(A, identity_span(A.H), check=False)
    u = unit_section(A.left)
    return validate_span_morphism(u.section, identity_nat_trans(A.right).components,
                                  identity_nat_trans(A.left).components, A, C.span)


def left_unitor(A):
    """``1_F o A -> A`` with ``t = to_L``; the right leg is corrected by ``g^-1``."""
    F = A.G
    C = compose_spans_full(identity_span(F), A, check=False)
    P = C.pullback
    theta = [F.inv[g] for (_, g, _) in P.groupoid.obj_labels]
    return validate_span_morphism(P.to_L, theta, identity_nat_trans(C.span.left).components,
                                  C.span, A)


def left_unitor_inverse(A):
    """``A -> 1_F o A`` via ``kappa -> (m kappa, 1, kappa)``."""
    F = A.G
    C = compose_spans_full(identity_span(F), A, check=False)
    Q = C.pullback.groupoid
    K, m = A.apex, A.right
    obj_map = [Q.obj_index[m.obj_map[k], F.ident[m.obj_map[k]], k] for k in K.objects]
    mor_map = [Q.mor_index[obj_map[K.src[k]], m.mor_map[k], k] for k in K.morphisms]
    s = validate_functor(obj_map, mor_map, K, Q)
    return validate_span_morphism(s, identity_nat_trans(A.right).components,
                                  identity_nat_trans(A.left).components, A, C.span)


def associator(A, B, C):
    """``(A o B) o C -> A o (B o C)``: ``((kappa, g, lambda), h, mu) -> (kappa, g, (lambda, h, mu))``.

    The result is an isomorphism of apexes commuting strictly with both legs.
    """
    AB = compose_spans_full(A, B, check=False)
    BC = compose_spans_full(B, C, check=False)
    src = compose_spans_full(AB.span, C, check=False)
    tgt = compose_spans_full(A, BC.span, check=False)
    S, T = src.pullback.groupoid, tgt.pullback.groupoid
    AB_objs, AB_mors = AB.pullback.groupoid.obj_labels, AB.pullback.groupoid.mor_labels
    BC_g = BC.pullback.groupoid
    obj_map = []
    for (inner, h, mu) in S.obj_labels:
        kap, g, lam = AB_objs[inner]
        obj_map.append(T.obj_index[kap, g, BC_g.obj_index[lam, h, mu]])
    mor_map = []
    for (i, km, m) in S.mor_labels:
        _, k, l = AB_mors[km]
        j = T.obj_labels[obj_map[i]][2]
        mor_map.append(T.mor_index[obj_map[i], k, BC_g.mor_index[j, l, m]])
    a = validate_functor(obj_map, mor_map, S, T)
    if not is_isomorphism(a):
        raise NotAFunctor("associator is not bijective")
    return validate_span_morphism(a, identity_nat_trans(src.span.right).components,
                                  identity_nat_trans(src.span.left).components,
                                  src.span, tgt.span)


# S and T

def s_span(p):
    """``H <-1- H -p-> G``."""
    return Span(p.source, identity_functor(p.source), p)


def t_span(q):
    """``G <-q- H -1-> H`` for a finite weak cover ``q: H -> G``."""
    return make_span(q, identity_functor(q.source))


def s_of_nattrans(alpha):
    """``alpha: p' -> p`` gives ``S(p') -> S(p)`` with ``theta = alpha``."""
    Ap, A = s_span(alpha.source), s_span(alpha.target)
    one = identity_functor(A.apex)
    return validate_span_morphism(one, alpha.components, identity_nat_trans(A.left).components, Ap, A)


def t_of_nattrans(beta):
    """``beta: q' -> q`` gives ``T(q') -> T(q)`` with ``phi = beta``."""
    Ap, A = t_span(beta.source), t_span(beta.target)
    one = identity_functor(A.apex)
    return validate_span_morphism(one, identity_nat_trans(A.right).components, beta.components, Ap, A)


@dataclass(eq=False)
class DoubleCoset:
    lhs: Span                   # T(q) o S(p), apex F x_G H
    rhs: Span                   # S(pbar) o T(qbar), apex P x_P P
    apex: Pullback              # P = F x_G H
    morphism: SpanMorphism      # lhs -> rhs, t = unit section
    verdict: object             # EquivalenceVerdict for t

    def __bool__(self):
        return bool(self.verdict)


def double_coset_equivalence(p, q):
    """``T(q) o S(p) ~ S(pbar) o T(qbar)`` in ``C(H, F)`` for ``p: H -> G`` and a cover ``q: F -> G``.

    The left side has apex ``P = F x_G H`` with legs ``qbar``, ``pbar``; the
    right side has apex ``P x_P P``.  The comparison is the unit section
    ``pi -> (pi, 1, pi)``, which commutes with both legs on the nose.
    """
    v = is_finite_weak_cover(q)
    if not v:
        raise NotAFiniteWeakCover(f"q is not a finite weak cover (fiber over {v.witness[0]})")
    lhs_c = compose_spans_full(t_span(q), s_span(p))
    P = lhs_c.pullback
    pbar, qbar = P.to_K, P.to_L
    rhs_c = compose_spans_full(s_span(pbar), make_span(qbar, identity_functor(P.groupoid)))
    Q = rhs_c.pullback.groupoid
    Pg = P.groupoid
    obj_map = [Q.obj_index[x, Pg.ident[x], x] for x in Pg.objects]
    mor_map = [Q.mor_index[obj_map[Pg.src[k]], k, k] for k in Pg.morphisms]
    s = validate_functor(obj_map, mor_map, Pg, Q)
    lhs, rhs = lhs_c.span, rhs_c.span
    m = validate_span_morphism(s, identity_nat_trans(lhs.right).components,
                               identity_nat_trans(lhs.left).components, lhs, rhs)
    return DoubleCoset(lhs, rhs, P, m, is_equivalence(s))
