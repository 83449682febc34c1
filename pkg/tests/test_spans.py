import random

import pytest
from hypothesis import given

import oracles
from burnside_bicat.errors import NotAFiniteWeakCover
from burnside_bicat.generators import subgroup_inclusion, symmetric
from burnside_bicat.groupoids import (
    Functor,
    components,
    constant_functor,
    identity_functor,
    is_discrete,
    is_equivalence,
    is_isomorphism,
    point_functor,
)
from burnside_bicat.gsets import colimit
from burnside_bicat.laws import fiber_gset, random_span
from burnside_bicat.spans import (
    compose_span_morphisms,
    compose_spans,
    compose_two_cells,
    double_coset_equivalence,
    empty_span,
    homotopy_fiber,
    horizontal_compose_morphisms,
    identity_span,
    identity_span_morphism,
    identity_two_cell,
    is_finite_weak_cover,
    left_unitor,
    left_unitor_inverse,
    pullback,
    right_unitor,
    right_unitor_inverse,
    s_span,
    same_morphism,
    t_span,
    unit_section,
    vertical_two_cells,
    weak_cover_by_fibers,
)

from strategies import functors, seeds


def perm_group_of(S3, elements):
    return [tuple(int(c) for c in S3.mor_labels[e][1:]) for e in elements]


@pytest.fixture(scope="module")
def inc():
    return subgroup_inclusion(symmetric(3), [0, 2])[1]


def test_unit_section_is_an_equivalence(S3, inc):
    u = unit_section(inc)
    assert is_equivalence(u.section)
    assert is_equivalence(u.projection)


def test_pullback_of_points_over_c2(C2, one):
    P = pullback(point_functor(C2, 0), point_functor(C2, 0))
    assert P.groupoid.n_objects == 2
    assert is_discrete(P.groupoid) and P.groupoid.n_morphisms == 2


def test_homotopy_fibers(C2, S3, E):
    F = homotopy_fiber(identity_functor(C2), 0)
    assert F.n_objects == 2 and len(components(F)) == 1
    assert homotopy_fiber(Functor(E, S3, (), ()), 0).n_objects == 0


def test_weak_covers(C2, S3, D2, one, inc):
    assert is_discrete(D2) and not is_discrete(C2)
    assert is_finite_weak_cover(inc)
    assert len(components(homotopy_fiber(inc, 0))) == 3
    assert is_finite_weak_cover(identity_functor(S3))
    v = is_finite_weak_cover(constant_functor(C2, one, 0))
    assert not v and v.witness[3] == 2
    with pytest.raises(NotAFiniteWeakCover):
        t_span(constant_functor(C2, one, 0))


def test_point_of_c2_is_a_cover(C2, D2):
    # its homotopy fiber is C2 acting on itself with discrete stabilizers: two isolated points
    q = point_functor(C2, 0)
    F = homotopy_fiber(q, 0)
    assert F.n_objects == 2 and F.n_morphisms == 2 and is_discrete(F)
    assert is_finite_weak_cover(q)
    t_span(q)


def test_double_coset_composite(S3, inc):
    A = compose_spans(t_span(inc), s_span(inc))
    K = perm_group_of(S3, [0, 2])
    G = oracles.sym(3)
    assert len(components(A.apex)) == len(oracles.double_cosets(K, G, K)) == 2


def test_compositions_with_units_and_empties(S3, C2, inc):
    B = s_span(inc)
    assert is_equivalence(right_unitor(B).t)
    assert is_equivalence(left_unitor(B).t)
    Z = compose_spans(empty_span(S3, C2), s_span(inc))
    assert Z.apex.n_objects == 0


def test_s_span_of_identity(S3):
    A = s_span(identity_functor(S3))
    B = identity_span(S3)
    assert A.apex == B.apex and A.left == B.left and A.right == B.right


def test_t_span_of_inclusion(inc):
    A = t_span(inc)
    assert A.H == inc.target and A.G == inc.source


def test_double_coset_equivalence(S3, inc):
    one = identity_functor(S3)
    d = double_coset_equivalence(one, one)
    assert d and len(components(d.apex.groupoid)) == 1
    d = double_coset_equivalence(inc, inc)
    assert d and len(components(d.apex.groupoid)) == 2
    triv, p = subgroup_inclusion(S3, [0])
    d = double_coset_equivalence(p, inc)
    n = len(oracles.double_cosets([(0, 1, 2)], oracles.sym(3), perm_group_of(S3, [0, 2])))
    assert d and len(components(d.apex.groupoid)) == n == 3


def test_morphism_identities(inc):
    A = t_span(inc)
    one = identity_span_morphism(A)
    assert same_morphism(compose_span_morphisms(one, one), one)
    c = identity_two_cell(one)
    assert vertical_two_cells(c, c).psi.components == c.psi.components
    h = compose_two_cells(c, c)
    assert h.psi.components == c.psi.components


def test_horizontal_composite_of_identities(inc, S3):
    A, B = t_span(inc), s_span(inc)
    h = horizontal_compose_morphisms(identity_span_morphism(A), identity_span_morphism(B))
    assert is_isomorphism(h.t) and h.t.mor_map == tuple(range(h.t.source.n_morphisms))


@given(seeds)
def test_unitors_compose_to_identity(seed):
    A = random_span(random.Random(seed), max_morphisms=6)
    assert same_morphism(compose_span_morphisms(right_unitor(A), right_unitor_inverse(A)),
                         identity_span_morphism(A))
    assert same_morphism(compose_span_morphisms(left_unitor(A), left_unitor_inverse(A)),
                         identity_span_morphism(A))


@given(seeds)
def test_morphism_composition_is_associative(seed):
    rng = random.Random(seed)
    A = random_span(rng, max_morphisms=6)
    ms = [right_unitor_inverse(A), right_unitor(A), right_unitor_inverse(A)]
    a = compose_span_morphisms(ms[2], compose_span_morphisms(ms[1], ms[0]))
    b = compose_span_morphisms(compose_span_morphisms(ms[2], ms[1]), ms[0])
    assert same_morphism(a, b)


@given(functors(faithful=True))
def test_faithful_functors_are_weak_covers(q):
    assert is_finite_weak_cover(q)


@given(functors())
def test_fiber_components_are_orbits(m):
    for gamma in m.target.objects:
        assert len(components(homotopy_fiber(m, gamma))) == len(colimit(fiber_gset(m, gamma)))


@given(functors())
def test_weak_cover_iff_faithful(q):
    faithful = all(len({q.mor_map[f] for f in q.source.hom(a, b)}) == len(q.source.hom(a, b))
                   for a in q.source.objects for b in q.source.objects)
    assert bool(is_finite_weak_cover(q)) == faithful == bool(weak_cover_by_fibers(q))
