"""Finite sets with a coloring and a family of partial bijections.

Both G-sets and bi-sets reduce to this: elements are colored by the fiber
they live in, and each groupoid morphism acts as a partial bijection.
Isomorphisms preserve colors and commute with every operation.  Two
independent mechanisms decide isomorphism: propagation-based matching
(:func:`find_iso`) and minimal BFS encodings (:func:`canonical_code`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .groupoids import UnionFind


@dataclass(eq=False)
class Structure:
    """``colors[e]`` is any orderable value; ``ops[k]`` is a dict ``e -> e'``."""
    colors: tuple
    ops: tuple

    @property
    def n(self):
        return len(self.colors)

    @cached_property
    def out_edges(self):
        """Per element, the list of ``(k, image)`` sorted by operation index."""
        out = [[] for _ in range(self.n)]
        for k, op in enumerate(self.ops):
            for x, y in op.items():
                out[x].append((k, y))
        return out

    @cached_property
    def orbits(self):
        uf = UnionFind(self.n)
        for op in self.ops:
            for x, y in op.items():
                uf.union(x, y)
        return uf.classes()

    def orbit_invariant(self, orbit):
        return tuple(sorted(Counter(self.colors[x] for x in orbit).items()))


def _extend(a, b, start_a, start_b, mapping, used):
    """Propagate ``start_a -> start_b`` through ``a``'s orbit.

    Returns the new pairs, or ``None`` on a conflict.  Every edge of the
    orbit is examined, so success means the partial map commutes with all
    operations on that orbit.
    """
    if a.colors[start_a] != b.colors[start_b] or start_b in used:
        return None
    local = {start_a: start_b}
    local_used = {start_b}
    stack = [start_a]
    while stack:
        x = stack.pop()
        y = local[x]
        bx = b.out_edges[y]
        ax = a.out_edges[x]
        if len(ax) != len(bx):
            return None
        for (k, x2), (kb, y2) in zip(ax, bx):
            if k != kb:
                return None
            if x2 in local:
                if local[x2] != y2:
                    return None
                continue
            if y2 in local_used or y2 in used or a.colors[x2] != b.colors[y2]:
                return None
            local[x2] = y2
            local_used.add(y2)
            stack.append(x2)
    return local


def find_iso(a, b):
    """A color-preserving bijection commuting with all ops, or ``None``.

    Orbits of ``a`` are matched to orbits of ``b`` with equal invariants,
    backtracking over the choice of target orbit and of the image of the
    orbit's least element.
    """
    if a.n != b.n or len(a.ops) != len(b.ops):
        return None
    if Counter(a.colors) != Counter(b.colors):
        return None
    a_orbits, b_orbits = a.orbits, b.orbits
    if len(a_orbits) != len(b_orbits):
        return None
    b_inv = [b.orbit_invariant(o) for o in b_orbits]
    a_inv = [a.orbit_invariant(o) for o in a_orbits]
    if sorted(a_inv) != sorted(b_inv):
        return None

    mapping = {}
    used = set()
    taken = [False] * len(b_orbits)

    def search(i):
        if i == len(a_orbits):
            return True
        orb = a_orbits[i]
        s = orb[0]
        for j, borb in enumerate(b_orbits):
            if taken[j] or b_inv[j] != a_inv[i]:
                continue
            for t in borb:
                local = _extend(a, b, s, t, mapping, used)
                if local is None or len(local) != len(orb):
                    continue
                mapping.update(local)
                used.update(local.values())
                taken[j] = True
                if search(i + 1):
                    return True
                taken[j] = False
                for x in local:
                    del mapping[x]
                used.difference_update(local.values())
        return False

    if not search(0):
        return None
    return tuple(mapping[x] for x in range(a.n))


def _encode_from(s, orbit_size, struct):
    order = [s]
    label = {s: 0}
    i = 0
    while i < len(order):
        x = order[i]
        for _, y in struct.out_edges[x]:
            if y not in label:
                label[y] = len(order)
                order.append(y)
        i += 1
    colors = tuple(struct.colors[x] for x in order)
    edges = tuple(tuple((k, label[y]) for k, y in struct.out_edges[x]) for x in order)
    return (colors, edges), order


def orbit_code(struct, orbit):
    """Minimal BFS encoding of one orbit over all admissible start points."""
    start_color = min(struct.colors[x] for x in orbit)
    best = None
    for s in orbit:
        if struct.colors[s] != start_color:
            continue
        code, _ = _encode_from(s, len(orbit), struct)
        if best is None or code < best:
            best = code
    return best


def canonical_code(struct):
    """Sorted tuple of orbit codes: equal iff the structures are isomorphic."""
    return tuple(sorted(orbit_code(struct, o) for o in struct.orbits))
