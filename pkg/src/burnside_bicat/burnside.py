"""Isomorphism classes of admissible bi-sets and the Burnside hom groups.

Decomposition into indecomposables is unique, so the hom monoid is free
commutative on indecomposable classes and its group completion is the free
abelian group on them.  Elements are integer combinations keyed by
canonical codes, with one stored representative per code.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from . import actions
from .bisets import (
    admissibility,
    compose_bisets,
    empty_biset,
    find_isomorphism,
    identity_biset,
    restrict,
    restrict_lower,
    restrict_upper,
    s_of_functor,
    t_of_functor,
    tensor,
    transitive_biset,
)
from .comparison import double_translation
from .errors import BaseMismatch, NotAdmissible
from .groupoids import components, disjoint_union, subgroups


# decomposition and canonical form

def indecomposables(X):
    """Summands of ``X``, one per component of ``GXH``, in order of least element."""
    D = double_translation(X)
    return [restrict(X, comp) for comp in components(D.groupoid)]


@dataclass(frozen=True)
class BisetClass:
    code: bytes
    size_vector: tuple

    @property
    def digest(self):
        return hashlib.sha256(self.code).hexdigest()[:16]

    def __lt__(self, other):
        return (sum(self.size_vector), self.size_vector, self.code) < \
            (sum(other.size_vector), other.size_vector, other.code)


def canonical_form(X):
    """Sorted minimal BFS encodings of the orbits of ``X``, as bytes."""
    code = actions.canonical_code(X.structure)
    return BisetClass(repr(code).encode(), X.size_vector)


def _require_admissible(X):
    bad = admissibility(X)
    if bad is not None:
        raise NotAdmissible("bi-set is not admissible", eta=bad[0], witness=bad[1])


# Burnside elements

@dataclass(eq=False)
class BurnsideElement:
    """Integer combination of indecomposable classes in ``B(H, G)``."""
    H: object
    G: object
    coefficients: dict = field(default_factory=dict)      # BisetClass -> int
    representatives: dict = field(default_factory=dict)   # BisetClass -> BiSet

    def _check(self, other):
        if self.H != other.H or self.G != other.G:
            raise BaseMismatch("elements of different hom groups")

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coefficients)
        reps = {**self.representatives, **other.representatives}
        for c, n in other.coefficients.items():
            coeffs[c] = coeffs.get(c, 0) + n
        return _normalized(self.H, self.G, coeffs, reps)

    def __neg__(self):
        return BurnsideElement(self.H, self.G, {c: -n for c, n in self.coefficients.items()},
                               dict(self.representatives))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return _normalized(self.H, self.G, {c: k * n for c, n in self.coefficients.items()},
                           dict(self.representatives))

    def __eq__(self, other):
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self.H == other.H and self.G == other.G and self.coefficients == other.coefficients

    __hash__ = None

    @property
    def is_zero(self):
        return not self.coefficients

    def terms(self):
        return sorted(self.coefficients.items())

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for c, n in self.terms():
            sign = "-" if n < 0 else "+"
            parts.append(f"{sign} {abs(n)}*[{c.digest}]")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _normalized(H, G, coeffs, reps):
    coeffs = {c: n for c, n in coeffs.items() if n != 0}
    return BurnsideElement(H, G, coeffs, {c: reps[c] for c in coeffs})


def zero(H, G):
    return BurnsideElement(H, G)


def hom_monoid_element(X):
    """The class of an admissible ``X``: one count per indecomposable summand."""
    _require_admissible(X)
    coeffs, reps = {}, {}
    for Y in indecomposables(X):
        c = canonical_form(Y)
        coeffs[c] = coeffs.get(c, 0) + 1
        reps.setdefault(c, Y)
    return BurnsideElement(X.H, X.G, coeffs, reps)


def add(a, b):
    return a + b


def negate(a):
    return -a


def subtract(a, b):
    return a - b


def compose_elements(a, b):
    """Bilinear extension of ``compose_bisets``: ``a`` in ``B(G, F)`` after ``b`` in ``B(H, G)``."""
    if a.H != b.G:
        raise BaseMismatch("middle groupoids differ")
    out = zero(b.H, a.G)
    for ca, na in a.coefficients.items():
        for cb, nb in b.coefficients.items():
            Z = compose_bisets(a.representatives[ca], b.representatives[cb])
            out = out + hom_monoid_element(Z).scale(na * nb)
    return out


def identity_element(G):
    return hom_monoid_element(identity_biset(G))


# enumeration of hom groups

def stabilizer_candidates(H, G, eta0, gamma0, admissible=True):
    """Subgroups ``K`` of ``Aut(eta0)^op x Aut(gamma0)``.

    Admissible ones meet ``1 x Aut(gamma0)`` trivially: the left action on
    the orbit is then free.
    """
    A = list(H.aut(eta0))
    B = list(G.aut(gamma0))
    elems = [(a, b) for a in A for b in B]

    def mul(x, y):
        return (H.compose(y[0], x[0]), G.compose(x[1], y[1]))

    subs = subgroups(elems, mul, (H.ident[eta0], G.ident[gamma0]))
    if admissible:
        idh, idg = H.ident[eta0], G.ident[gamma0]
        subs = [K for K in subs if all(a != idh or b == idg for a, b in K)]
    return subs


def orbit_size(H, G, eta0, gamma0, K):
    """Number of elements of the transitive bi-set with stabilizer ``K``."""
    n_into = len(H.into(eta0))
    return n_into * len(G.out(gamma0)) // len(K)


def burnside_group(H, G, size_bound):
    """Basis of ``B(H, G)`` restricted to indecomposables of total size at most ``size_bound``.

    Every indecomposable meets the fiber over the chosen base points of one
    pair of components, and is then determined by the stabilizer of a point
    there; stabilizers are enumerated and duplicates removed by code.
    """
    found = {}
    for ch in components(H):
        for cg in components(G):
            eta0, gamma0 = ch[0], cg[0]
            for K in stabilizer_candidates(H, G, eta0, gamma0):
                if orbit_size(H, G, eta0, gamma0, K) > size_bound:
                    continue
                X = transitive_biset(H, G, eta0, gamma0, K)
                found.setdefault(canonical_form(X), X)
    return [(c, found[c]) for c in sorted(found)]


# additivity

@dataclass(eq=False)
class Additivity:
    sum: object      # G' + G''
    inclusions: tuple
    X: tuple         # X(i) = S(in_i) in B(G_i, G' + G'')
    Y: tuple         # Y(i) in B(G' + G'', G_i)


def structure_bisets(G1, G2):
    """``X(1), X(2), Y(1), Y(2)`` for the coproduct ``G1 + G2``.

    ``Y(i)`` is built from its defining formula: over ``in_i(c)`` the column
    is ``G_i(c, -)``, and other columns are empty.
    """
    D, in1, in2 = disjoint_union(G1, G2)
    Xs = (s_of_functor(in1), s_of_functor(in2))
    Ys = tuple(_y_biset(D, Gi, ini) for Gi, ini in ((G1, in1), (G2, in2)))
    return Additivity(D, (in1, in2), Xs, Ys)


def _y_biset(D, Gi, ini):
    from .bisets import BiSet

    labels = [(ini.obj_map[Gi.src[f]], f) for f in Gi.morphisms]
    index = {lab: i for i, lab in enumerate(labels)}
    back = {ini.mor_map[m]: m for m in Gi.morphisms}
    lact = tuple({index[ini.obj_map[Gi.src[f]], f]: index[ini.obj_map[Gi.src[f]], Gi.compose(g, f)]
                  for f in Gi.into(Gi.src[g])} for g in Gi.morphisms)
    ract = []
    for h in D.morphisms:
        if h not in back:
            ract.append({})
            continue
        m = back[h]
        # h: a -> b sends the column over b to the column over a by f -> f m
        ract.append({index[ini.obj_map[Gi.tgt[m]], f]: index[ini.obj_map[Gi.src[m]], Gi.compose(f, m)]
                     for f in Gi.out(Gi.tgt[m])})
    return BiSet(D, Gi, tuple(l[0] for l in labels), tuple(Gi.tgt[l[1]] for l in labels),
                 lact, tuple(ract), tuple(labels))


@dataclass
class AdditivityReport:
    product_ok: bool      # Y(i) x Z ~ Z(i)
    coproduct_ok: bool    # W x X(i) ~ W restricted along in_i
    unit_ok: bool         # Y(i) x X(i) ~ 1, Y(j) x X(i) empty for j != i
    failures: list

    def __bool__(self):
        return self.product_ok and self.coproduct_ok and self.unit_ok


def additivity_witnesses(G1, G2, K, zs=(), ws=()):
    """Check the structure bi-sets on sample ``Z`` in ``B(K, G1 + G2)`` and ``W`` in ``B(G1 + G2, K)``."""
    A = structure_bisets(G1, G2)
    failures = []
    for n, Z in enumerate(zs):
        for i in range(2):
            got = compose_bisets(A.Y[i], Z)
            want = restrict_lower(Z, A.inclusions[i])
            if find_isomorphism(got, want) is None:
                failures.append(("product", n, i))
    for n, W in enumerate(ws):
        for i in range(2):
            got = compose_bisets(W, A.X[i])
            want = restrict_upper(W, A.inclusions[i])
            if find_isomorphism(got, want) is None:
                failures.append(("coproduct", n, i))
    for i, Gi in enumerate((G1, G2)):
        for j in range(2):
            Z = compose_bisets(A.Y[j], A.X[i])
            if i == j:
                ok = find_isomorphism(Z, identity_biset(Gi)) is not None
            else:
                ok = Z.size == 0
            if not ok:
                failures.append(("unit", i, j))
    kinds = {f[0] for f in failures}
    return AdditivityReport("product" not in kinds, "coproduct" not in kinds,
                            "unit" not in kinds, failures)


def y_matches_t(G1, G2):
    """``Y(i)`` agrees with ``T(in_i)`` up to isomorphism."""
    A = structure_bisets(G1, G2)
    return all(find_isomorphism(A.Y[i], t_of_functor(A.inclusions[i])) is not None for i in range(2))


def split(Z, G1, G2):
    """``(Z(1), Z(2))`` for ``Z`` in ``B(K, G1 + G2)``; their recombination is ``Z`` up to iso."""
    A = structure_bisets(G1, G2)
    return tuple(compose_bisets(A.Y[i], Z) for i in range(2))


def recombine(Z1, Z2, G1, G2):
    """The bi-set in ``B(K, G1 + G2)`` whose restrictions are ``Z1`` and ``Z2``."""
    from .bisets import BiSet

    D, in1, in2 = disjoint_union(G1, G2)
    K = Z1.H
    parts = []
    for Zi, ini in ((Z1, in1), (Z2, in2)):
        lact = [dict() for _ in D.morphisms]
        for g in Zi.G.morphisms:
            lact[ini.mor_map[g]] = dict(Zi.lact[g])
        parts.append(BiSet(K, D, Zi.eta, tuple(ini.obj_map[c] for c in Zi.gamma),
                           tuple(lact), Zi.ract, Zi.labels))
    return tensor(*parts)


def is_zero_object(E, groupoids, size_bound=8):
    """``E`` has only the empty bi-set in both directions against each groupoid."""
    for G in groupoids:
        if burnside_group(E, G, size_bound) or burnside_group(G, E, size_bound):
            return False
        if empty_biset(E, G).size or empty_biset(G, E).size:
            return False
    return True
