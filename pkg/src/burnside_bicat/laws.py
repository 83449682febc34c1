"""Seeded law suites shared by the ``laws`` command and the acceptance tests.

Each suite draws ``cases`` independent instances; case ``i`` of suite
``name`` under seed ``s`` always uses ``random.Random(f"{s}:{name}:{i}")``,
so a failing case can be replayed on its own.
"""

from __future__ import annotations

import random
import traceback
from dataclasses import dataclass, field

from . import bisets as bs
from .burnside import (
    orbit_size,
    stabilizer_candidates,
    additivity_witnesses,
    canonical_form,
    is_zero_object,
)
from .comparison import alpha_equivalence, beta_iso, biset_to_span, phi_equivalence, pi0_chain
from .errors import BurnsideError
from .generators import (
    cyclic,
    random_biset,
    random_functor,
    random_groupoid,
    random_gset,
    random_permutation,
    small_groups,
    symmetric,
)
from .groupoids import (
    Functor,
    Groupoid,
    components,
    compose_functors,
    disjoint_union,
    empty_groupoid,
    group_homomorphisms,
    is_isomorphism,
    terminal_groupoid,
    validate_functor,
)
from .gsets import (
    GSet,
    colimit,
    cover_round_trip,
    decompose_free,
    gset_from_cover,
    is_covering_map,
    is_free,
    shear_is_injective,
    translation_groupoid,
    translation_round_trip,
)
from .spans import (
    associator as span_associator,
    compose_span_morphisms,
    compose_spans,
    homotopy_fiber,
    identity_span_morphism,
    left_unitor,
    left_unitor_inverse,
    make_span,
    right_unitor,
    right_unitor_inverse,
    same_morphism,
    unit_section,
)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)   # (case index, message)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.cases - len(self.failures)

    def __bool__(self):
        return not self.failures


def case_rng(seed, name, i):
    return random.Random(f"{seed}:{name}:{i}")


def _run(name, seed, cases, body):
    res = SuiteResult(name)
    for i in range(cases):
        rng = case_rng(seed, name, i)
        res.cases += 1
        try:
            msg = body(rng, res)
        except BurnsideError as exc:
            msg = f"{type(exc).__name__}: {exc}"
        except Exception:   # a crash is a failure of the case, reported with its trace
            msg = traceback.format_exc(limit=3)
        if msg:
            res.failures.append((i, msg))
    return res


def small_groupoid(rng):
    return random_groupoid(rng, max_objects=3, max_morphisms=8)


# bi-set coherence

def pentagon_holds(W, X, Y, Z):
    """Both ways from ``W(X(YZ))`` to ``((WX)Y)Z`` agree as maps of classes."""
    YZ = bs.compose_bisets(Y, Z)
    WX = bs.compose_bisets(W, X)
    a1 = bs.associator(W, X, YZ)
    a2 = bs.associator(WX, Y, Z)
    b1 = bs.whisker_left(W, bs.associator(X, Y, Z))
    XY = bs.compose_bisets(X, Y)
    b2 = bs.associator(W, XY, Z)
    b3 = bs.whisker_right(bs.associator(W, X, Y), Z)
    for f, g in ((a2, a1), (b2, b1), (b3, b2)):
        if not f.source == g.target:
            return "intermediate composites differ"
    if a1.source != b1.source or a2.target != b3.target:
        return "end points differ"
    lhs = bs.compose_isos(a2, a1).mapping
    rhs = bs.compose_isos(b3, bs.compose_isos(b2, b1)).mapping
    return None if lhs == rhs else "pentagon does not commute"


def triangle_holds(X, Y):
    """``(rho x Y) o a = X x lambda`` on ``X(1 Y)``."""
    one = bs.identity_biset(X.H)
    a = bs.associator(X, one, Y)
    left = bs.compose_isos(bs.whisker_right(bs.unitor_right(X), Y), a)
    right = bs.whisker_left(X, bs.unitor_left(Y))
    if left.source != right.source or left.target != right.target:
        return "end points differ"
    return None if left.mapping == right.mapping else "triangle does not commute"


def _chain(rng, n, max_size, tries=50):
    """Composable bi-sets ``X_1, ..., X_n`` with ``X_i.H == X_{i+1}.G``.

    Groupoids are redrawn until every link has an admissible orbit within
    ``max_size``; a start that leads nowhere is abandoned.
    """
    for _ in range(tries):
        G = small_groupoid(rng)
        out = []
        for _ in range(4 * n):
            H = small_groupoid(rng)
            X = random_biset(rng, H, G, max_size=max_size)
            if X is not None:
                out.append(X)
                G = H
                if len(out) == n:
                    return out
    raise BurnsideError("could not draw a composable chain")


def some_biset(rng, max_size):
    return _chain(rng, 1, max_size)[0]


def suite_pentagon(seed, cases, max_size=4):
    def body(rng, res):
        W, X, Y, Z = _chain(rng, 4, max_size)
        return pentagon_holds(W, X, Y, Z)
    return _run("pentagon", seed, cases, body)


def suite_triangle(seed, cases, max_size=5):
    def body(rng, res):
        X, Y = _chain(rng, 2, max_size)
        return triangle_holds(X, Y)
    return _run("triangle", seed, cases, body)


# spans

def random_span(rng, max_morphisms=8):
    """A span whose left leg is faithful, hence a finite weak cover."""
    for _ in range(50):
        L = random_groupoid(rng, max_morphisms=max_morphisms)
        H = random_groupoid(rng, max_morphisms=max_morphisms)
        try:
            q = random_functor(rng, L, H, faithful=True)
        except BurnsideError:
            continue
        G = random_groupoid(rng, max_morphisms=max_morphisms)
        p = random_functor(rng, L, G)
        return make_span(q, p)
    raise BurnsideError("no faithful functor found")


def _composable_spans(rng, n):
    """``n`` spans ``A_1 o ... o A_n`` built from bi-sets over a chain of groupoids."""
    X = _chain(rng, n, 3)
    return [biset_to_span(x) for x in X]


def suite_unit(seed, cases):
    def body(rng, res):
        A = random_span(rng, max_morphisms=6)
        for f, g in ((right_unitor(A), right_unitor_inverse(A)), (left_unitor(A), left_unitor_inverse(A))):
            if not same_morphism(compose_span_morphisms(f, g), identity_span_morphism(A)):
                return "unitor after its section is not the identity"
        u = unit_section(A.left)
        if compose_functors(u.projection, u.section).mor_map != tuple(A.apex.morphisms):
            return "p1 s != 1"
        for X in _chain(rng, 1, 4):
            bs.unitor_left(X)
            bs.unitor_right(X)
        return None
    return _run("unit", seed, cases, body)


def fiber_gset(m, gamma):
    """``G(gamma, m(-))`` as a left K-set."""
    K, G = m.source, m.target
    labels = [(k, g) for k in K.objects for g in G.hom(gamma, m.obj_map[k])]
    index = {lab: i for i, lab in enumerate(labels)}
    act = tuple({index[K.src[k], g]: index[K.tgt[k], G.compose(m.mor_map[k], g)]
                 for g in G.hom(gamma, m.obj_map[K.src[k]])} for k in K.morphisms)
    return GSet(K, tuple(l[0] for l in labels), act, "left", tuple(labels))


def suite_pullback(seed, cases):
    def body(rng, res):
        A, B, C = _composable_spans(rng, 3)
        a = span_associator(A, B, C)
        if not is_isomorphism(a.t):
            return "associator is not an isomorphism"
        m = random_span(rng, max_morphisms=6).right
        for gamma in m.target.objects:
            n1 = len(components(homotopy_fiber(m, gamma)))
            n2 = len(colimit(fiber_gset(m, gamma)))
            if n1 != n2:
                return f"fiber over {gamma}: {n1} components but {n2} orbits"
        compose_spans(A, B)   # re-verifies the cover property of the composite
        return None
    return _run("pullback", seed, cases, body)


# model comparison

def suite_beta(seed, cases, max_size=8):
    def body(rng, res):
        X = some_biset(rng, max_size)
        beta_iso(X)
        return None
    return _run("beta", seed, cases, body)


def suite_alpha(seed, cases):
    def body(rng, res):
        A = random_span(rng, max_morphisms=6)
        v = alpha_equivalence(A)
        return None if v else f"alpha is not an equivalence: {v.verdict.reason}"
    return _run("alpha", seed, cases, body)


def suite_phi(seed, cases, max_size=4):
    def body(rng, res):
        X, Y = _chain(rng, 2, max_size)
        v = phi_equivalence(X, Y)
        return None if v else f"phi is not an equivalence: {v.verdict.reason}"
    return _run("phi", seed, cases, body)


def suite_pi0(seed, cases, max_size=8):
    def body(rng, res):
        X = some_biset(rng, max_size)
        for eta0 in X.H.objects:
            c = pi0_chain(X, eta0)
            if not c:
                return f"pi0 chain breaks over {eta0}: {c}"
        return None
    return _run("pi0", seed, cases, body)


# G-sets and covers

def permuted_copy(G, rng):
    """An isomorphic copy of ``G`` with shuffled indices, and the iso ``G -> copy``."""
    op = random_permutation(rng, G.n_objects)
    mp = random_permutation(rng, G.n_morphisms)
    inv_m = [0] * G.n_morphisms
    for m, p in enumerate(mp):
        inv_m[p] = m
    table = {(mp[g], mp[f]): mp[h] for (g, f), h in G.comp.items()}
    src = [op[G.src[inv_m[i]]] for i in range(G.n_morphisms)]
    tgt = [op[G.tgt[inv_m[i]]] for i in range(G.n_morphisms)]
    ident = [0] * G.n_objects
    for o in G.objects:
        ident[op[o]] = mp[G.ident[o]]
    C = Groupoid(G.n_objects, src, tgt, ident, table=table)
    return C, Functor(G, C, tuple(op), tuple(mp))


def suite_gsets(seed, cases):
    def body(rng, res):
        G = small_groupoid(rng)
        T = random_gset(rng, G, free=rng.choice([True, False, None]))
        free = bool(is_free(T))
        if free != shear_is_injective(T):
            return "is_free and shear injectivity disagree"
        res.notes["free"] = res.notes.get("free", 0) + free
        if free:
            d = decompose_free(T)
            if sorted(d.iso.components) != list(range(T.size)):
                return "free decomposition is not a bijection"
        translation_round_trip(T)
        GX, proj = translation_groupoid(T)
        if len(colimit(T)) != len(components(GX)):
            return "orbit count differs from translation components"
        # converse: a covering map presented with shuffled indices
        C, iso = permuted_copy(GX, rng)
        back = [0] * C.n_morphisms
        for m, im in enumerate(iso.mor_map):
            back[im] = m
        p = Functor(C, G, tuple(proj.obj_map[o] for o in _inverse(iso.obj_map)),
                    tuple(proj.mor_map[back[m]] for m in C.morphisms))
        p = validate_functor(p.obj_map, p.mor_map, C, G)
        if not is_covering_map(p):
            return "translation projection is not a covering map"
        F, proj2 = cover_round_trip(p)
        F = validate_functor(F.obj_map, F.mor_map, F.source, F.target)
        if not is_isomorphism(F) or compose_functors(p, F).mor_map != proj2.mor_map:
            return "cover round trip is not an isomorphism over G"
        S = gset_from_cover(p)
        if len(colimit(S)) != len(colimit(T)):
            return "cover G-set has a different orbit count"
        return None
    return _run("gsets", seed, cases, body)


def _inverse(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


# canonical forms

def group_automorphisms(G):
    """Object-fixing automorphisms of a one-object groupoid."""
    elems = list(G.morphisms)
    homs = group_homomorphisms(elems, G.compose, G.ident[0], elems, G.compose, G.ident[0])
    out = []
    for h in homs:
        if len(set(h.values())) == len(elems):
            out.append(Functor(G, G, (0,), tuple(h[m] for m in elems)))
    return out


def near_miss(rng, H, G, max_size=8):
    """Two orbits over the same base pair with stabilizers of equal order, plus a shared piece.

    The sizes agree; the bi-sets are isomorphic exactly when the stabilizers
    are conjugate, which is usually not the case.
    """
    for _ in range(30):
        eta0, gamma0 = rng.choice(list(H.objects)), rng.choice(list(G.objects))
        subs = [K for K in stabilizer_candidates(H, G, eta0, gamma0)
                if orbit_size(H, G, eta0, gamma0, K) <= max_size]
        by_order = {}
        for K in subs:
            by_order.setdefault(len(K), []).append(K)
        pairs = [Ks for Ks in by_order.values() if len(Ks) > 1]
        if not pairs:
            continue
        K1, K2 = rng.sample(rng.choice(pairs), 2)
        X = bs.transitive_biset(H, G, eta0, gamma0, K1)
        Y = bs.transitive_biset(H, G, eta0, gamma0, K2)
        common = random_biset(rng, H, G, max_size=4, max_orbits=1, shuffle=False)
        if common is not None and rng.random() < 0.5:
            X, Y = bs.tensor(X, common), bs.tensor(common, Y)
        return X, Y
    return None


def canon_pair(rng):
    """A pair of bi-sets over a common base: isomorphic copies, twists or near misses."""
    kind = rng.choice(["relabel", "twist", "nearmiss", "nearmiss"])
    if kind == "twist":
        groups = small_groups()
        H, G = rng.choice(groups), rng.choice(groups)
        X = random_biset(rng, H, G, max_size=8)
        sh, sg = rng.choice(group_automorphisms(H)), rng.choice(group_automorphisms(G))
        Y = bs.twist(X, sh, sg)
    elif kind == "nearmiss":
        groups = small_groups()
        pair = None
        while pair is None:
            H = rng.choice(groups + [small_groupoid(rng)])
            G = rng.choice(groups + [small_groupoid(rng)])
            pair = near_miss(rng, H, G)
        X, Y = pair
    else:
        X = Y = some_biset(rng, 8)
    Y = bs.relabel(Y, random_permutation(rng, Y.size))
    return kind, X, Y


def suite_canon(seed, cases):
    def body(rng, res):
        kind, X, Y = canon_pair(rng)
        same_code = canonical_form(X) == canonical_form(Y)
        iso = bs.find_isomorphism(X, Y) is not None
        key = "isomorphic" if iso else "non-isomorphic"
        res.notes[key] = res.notes.get(key, 0) + 1
        if same_code != iso:
            return f"{kind}: canonical codes say {same_code}, search says {iso}"
        return None
    return _run("canon", seed, cases, body)


# additivity

def suite_additivity(seed, cases):
    G1, G2, K = cyclic(2), cyclic(3), terminal_groupoid()
    D = disjoint_union(G1, G2)[0]

    def body(rng, res):
        Z = random_biset(rng, K, D, max_size=8, max_orbits=3)
        W = random_biset(rng, D, K, max_size=8, max_orbits=3)
        r = additivity_witnesses(G1, G2, K, [Z], [W])
        return None if r else f"additivity fails: {r.failures}"

    res = _run("additivity", seed, cases, body)
    E = empty_groupoid()
    if not is_zero_object(E, [terminal_groupoid(), cyclic(2), cyclic(3), symmetric(3), D]):
        res.failures.append((-1, "the empty groupoid is not a zero object"))
    return res


SUITES = {
    "pentagon": suite_pentagon,
    "triangle": suite_triangle,
    "unit": suite_unit,
    "pullback": suite_pullback,
    "beta": suite_beta,
    "alpha": suite_alpha,
    "phi": suite_phi,
    "pi0": suite_pi0,
    "gsets": suite_gsets,
    "canon": suite_canon,
    "additivity": suite_additivity,
}


def run_suites(names, seed, cases):
    return [SUITES[n](seed, cases) for n in names]
