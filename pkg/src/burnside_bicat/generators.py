"""Standard small groupoids and seeded random instances.

Everything takes an explicit ``random.Random`` so reports are reproducible
from a seed.
"""

from __future__ import annotations

import random
from itertools import permutations

from .bisets import relabel as relabel_biset, tensor, transitive_biset
from .burnside import orbit_size, stabilizer_candidates
from .errors import NotAFunctor
from .groupoids import (
    Functor,
    Groupoid,
    components,
    disjoint_union,
    discrete_groupoid,
    from_group,
    group_homomorphisms,
    subgroups,
    validate_functor,
)
from .gsets import coproduct, relabel as relabel_gset, transitive_gset


# named groups

def cyclic_table(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def cyclic(n):
    """``C_n``; morphism ``k`` is the residue ``k``."""
    return from_group(cyclic_table(n), names=[f"r{k}" for k in range(n)])


def symmetric_table(n):
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (a*b)(i) = a(b(i))
    return [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms], perms


def symmetric(n):
    """``S_n`` on permutations in lexicographic order (index 0 is the identity)."""
    table, perms = symmetric_table(n)
    return from_group(table, names=["p" + "".join(map(str, p)) for p in perms])


def klein():
    table = [[a ^ b for b in range(4)] for a in range(4)]
    return from_group(table, names=["e", "a", "b", "c"])


def dihedral4():
    # elements r^k s^f as (k, f); (k1,f1)(k2,f2) = (k1 + (-1)^f1 k2, f1 ^ f2)
    elems = [(k, f) for f in range(2) for k in range(4)]
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[((k1 + (k2 if f1 == 0 else -k2)) % 4, f1 ^ f2)] for (k2, f2) in elems]
             for (k1, f1) in elems]
    return from_group(table, names=[f"r{k}s{f}" for k, f in elems])


def connected_groupoid(group, n):
    """Connected groupoid on ``n`` objects with vertex group ``group``.

    Morphism ``(i, j, k)`` goes ``i -> j``; ``(j, l, k2) o (i, j, k1) = (i, l, k2 k1)``.
    """
    mors = [((i, j, k), i, j) for i in range(n) for j in range(n) for k in group.morphisms]
    return Groupoid.from_labels(
        tuple(range(n)), mors, [(i, i, group.ident[0]) for i in range(n)],
        lambda g, f: (f[0], g[1], group.compose(g[2], f[2])),
        lambda f: (f[1], f[0], group.inv[f[2]]),
    )


def contractible(n=2):
    """The groupoid with ``n`` objects and exactly one morphism between any two."""
    return connected_groupoid(cyclic(1), n)


def subgroup_inclusion(G, elements):
    """One-object groupoid of a subgroup with its inclusion functor into ``G``."""
    elements = sorted(elements)
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[G.compose(a, b)] for b in elements] for a in elements]
    K = from_group(table, names=[G.mor_labels[e] for e in elements])
    return K, Functor(K, G, (0,), tuple(elements))


def functor_from_hom(H, G, images):
    """Functor between one-object groupoids from the list of morphism images."""
    return validate_functor((0,) * H.n_objects, images, H, G)


# random groupoids

_SMALL_GROUPS = None


def small_groups():
    global _SMALL_GROUPS
    if _SMALL_GROUPS is None:
        _SMALL_GROUPS = [cyclic(1), cyclic(2), cyclic(3), cyclic(4), klein(), symmetric(3)]
    return _SMALL_GROUPS


def random_connected(rng, max_morphisms=8):
    options = [(g, n) for g in small_groups() for n in (1, 2, 3)
               if n * n * g.n_morphisms <= max_morphisms]
    g, n = rng.choice(options)
    return connected_groupoid(g, n)


def random_groupoid(rng, max_objects=3, max_morphisms=8, allow_empty=False):
    """Disjoint union of connected pieces within the given bounds."""
    if allow_empty and rng.random() < 0.05:
        return discrete_groupoid(0)
    G = random_connected(rng, max_morphisms)
    while rng.random() < 0.35:
        room = max_morphisms - G.n_morphisms
        if room < 1 or G.n_objects >= max_objects:
            break
        piece = random_connected(rng, room)
        if G.n_objects + piece.n_objects > max_objects:
            break
        G = disjoint_union(G, piece)[0]
    return G


def _aut_mul(G, o):
    return list(G.aut(o)), (lambda a, b: G.compose(a, b)), G.ident[o]


def random_functor(rng, H, G, faithful=False, tries=50):
    """A random functor ``H -> G``, optionally faithful.

    Per component of ``H``: pick the root image, a homomorphism of vertex
    groups, and images of spanning-tree arrows.
    """
    if G.n_objects == 0:
        if H.n_objects == 0:
            return Functor(H, G, (), ())
        raise NotAFunctor("no functor into the empty groupoid")
    for _ in range(tries):
        obj_map = [None] * H.n_objects
        mor_map = [None] * H.n_morphisms
        ok = True
        for comp in components(H):
            root = comp[0]
            o = rng.randrange(G.n_objects)
            gcomp = next(c for c in components(G) if o in c)
            obj_map[root] = o
            tree = {root: H.ident[root]}
            tree_img = {root: G.ident[o]}
            for i in comp[1:]:
                tree[i] = H.hom(root, i)[0]
                obj_map[i] = rng.choice(gcomp)
                tree_img[i] = rng.choice(G.hom(o, obj_map[i]))
            homs = group_homomorphisms(*_aut_mul(H, root), *_aut_mul(G, o))
            if faithful:
                homs = [h for h in homs if len(set(h.values())) == len(h)]
                if not homs:
                    ok = False
                    break
            phi = rng.choice(homs)
            for i in comp:
                for j in comp:
                    for m in H.hom(i, j):
                        loop = H.compose(H.inv[tree[j]], H.compose(m, tree[i]))
                        mor_map[m] = G.compose(tree_img[j], G.compose(phi[loop], G.inv[tree_img[i]]))
        if ok:
            return validate_functor(obj_map, mor_map, H, G)
    raise NotAFunctor("could not find a functor with the requested property")


# random G-sets and bi-sets

def random_gset(rng, G, free=None, max_orbits=3):
    """Coproduct of random transitive G-sets, randomly relabelled."""
    pieces = []
    for _ in range(rng.randint(1, max_orbits)):
        o = rng.randrange(G.n_objects)
        elems, mul, e = _aut_mul(G, o)
        subs = subgroups(elems, mul, e)
        if free is True:
            K = subs[0]
        elif free is False and not pieces:
            nontrivial = [s for s in subs if len(s) > 1]
            K = rng.choice(nontrivial) if nontrivial else subs[0]
        else:
            K = rng.choice(subs)
        pieces.append(transitive_gset(G, o, K))
    T = coproduct(*pieces)
    perm = list(range(T.size))
    rng.shuffle(perm)
    return relabel_gset(T, perm)


def random_transitive_biset(rng, H, G, max_size=8, admissible=True):
    options = []
    for e in H.objects:
        for c in G.objects:
            for K in stabilizer_candidates(H, G, e, c, admissible):
                if orbit_size(H, G, e, c, K) <= max_size:
                    options.append((e, c, K))
    if not options:
        return None
    e, c, K = rng.choice(options)
    return transitive_biset(H, G, e, c, K)


def random_biset(rng, H, G, max_size=8, max_orbits=2, shuffle=True):
    """Random admissible bi-set: a tensor of transitive pieces, relabelled.

    Returns ``None`` when no admissible orbit fits (e.g. an empty base).
    """
    X = None
    budget = max_size
    for _ in range(rng.randint(1, max_orbits)):
        piece = random_transitive_biset(rng, H, G, budget)
        if piece is None:
            break
        X = piece if X is None else tensor(X, piece)
        budget -= piece.size
        if budget <= 0:
            break
    if X is None:
        return None
    if shuffle:
        perm = list(range(X.size))
        rng.shuffle(perm)
        X = relabel_biset(X, perm)
    return X


def random_permutation(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def make_rng(seed):
    return random.Random(seed)
