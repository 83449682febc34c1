import random

import pytest
from hypothesis import given

import oracles
from burnside_bicat.bisets import (
    compose_bisets,
    empty_biset,
    find_isomorphism,
    identity_biset,
    relabel,
    s_of_functor,
    t_of_functor,
    tensor,
    transitive_biset,
    twist,
    validate_biset_iso,
)
from burnside_bicat.burnside import (
    additivity_witnesses,
    burnside_group,
    canonical_form,
    compose_elements,
    hom_monoid_element,
    identity_element,
    indecomposables,
    is_zero_object,
    recombine,
    split,
    structure_bisets,
    y_matches_t,
    zero,
)
from burnside_bicat.errors import BaseMismatch, NotAdmissible
from burnside_bicat.generators import cyclic, random_biset, subgroup_inclusion, symmetric
from burnside_bicat.groupoids import constant_functor, disjoint_union, terminal_groupoid
from burnside_bicat.laws import _chain, group_automorphisms

from strategies import seeds


def test_indecomposables(C2, S3):
    X = identity_biset(C2)
    assert len(indecomposables(X)) == 1
    parts = indecomposables(tensor(X, X))
    assert len(parts) == 2 and canonical_form(parts[0]) == canonical_form(parts[1])
    assert indecomposables(empty_biset(C2, S3)) == []


def test_canonical_forms(C2, C3, one):
    X = identity_biset(C2)
    assert canonical_form(X) == canonical_form(X)
    # C2 has no non-identity automorphism; its twist is the translation x -> r1 x
    Y = relabel(X, [1, 0])
    validate_biset_iso((1, 0), X, X)
    assert canonical_form(X) == canonical_form(Y)
    Z = identity_biset(C3)
    for s in group_automorphisms(C3):
        assert canonical_form(twist(Z, s, s)) == canonical_form(Z)
    two = transitive_biset(one, C2, 0, 0, {(0, 0)})
    assert canonical_form(two) != canonical_form(tensor(two, two))
    assert len(canonical_form(two).digest) == 16


def test_element_arithmetic(C2):
    X = identity_biset(C2)
    a = hom_monoid_element(X)
    assert hom_monoid_element(tensor(X, X)) == a + a == a.scale(2)
    assert (a - a).is_zero
    assert str(a.scale(2)).startswith("2*[")
    assert str(-a).startswith("-1*[")
    assert str(zero(C2, C2)) == "0"


def test_element_errors(C2, C3, one):
    with pytest.raises(BaseMismatch):
        hom_monoid_element(identity_biset(C2)) + hom_monoid_element(identity_biset(C3))
    assert t_of_functor(subgroup_inclusion(C2, [0])[1]).admissible
    with pytest.raises(NotAdmissible):
        hom_monoid_element(t_of_functor(constant_functor(C2, one, 0)))


def test_composition_of_elements(S3):
    K, inc = subgroup_inclusion(S3, [0, 2])
    T, S = hom_monoid_element(t_of_functor(inc)), hom_monoid_element(s_of_functor(inc))
    c = compose_elements(T, S)
    C2 = [(0, 1, 2), (1, 0, 2)]
    n = len(oracles.double_cosets(C2, oracles.sym(3), C2))
    assert sum(c.coefficients.values()) == n == 2
    assert compose_elements(identity_element(S3), S) == S == compose_elements(S, identity_element(K))
    assert compose_elements(identity_element(K), T) == T == compose_elements(T, identity_element(S3))


@pytest.mark.parametrize("name,H,G,bound,expected", [
    ("C2,1", cyclic(2), terminal_groupoid(), 8, 2),
    ("S3,1", symmetric(3), terminal_groupoid(), 12, 4),
    ("C3,1", cyclic(3), terminal_groupoid(), 9, 2),
    ("1,1", terminal_groupoid(), terminal_groupoid(), 1, 1),
    ("S3,1 bound 6", symmetric(3), terminal_groupoid(), 6, 4),
    ("S3,1 bound 2", symmetric(3), terminal_groupoid(), 2, 2),
    ("C2,S3", cyclic(2), symmetric(3), 12, 3),
    ("S3,S3", symmetric(3), symmetric(3), 36, 8),
    ("C4,C2", cyclic(4), cyclic(2), 8, 5),
])
def test_burnside_ranks(name, H, G, bound, expected):
    basis = burnside_group(H, G, bound)
    assert len(basis) == expected
    # independent count on permutation groups
    perm = {1: oracles.trivial(), 2: oracles.cyc(2), 3: oracles.cyc(3), 4: oracles.cyc(4), 6: oracles.sym(3)}
    ref = oracles.transitive_biset_classes(perm[H.n_morphisms], perm[G.n_morphisms], bound)
    assert sorted(sum(c.size_vector) for c, _ in basis) == ref


def test_basis_classes_are_ordered_and_distinct(S3, one):
    basis = burnside_group(S3, one, 12)
    classes = [c for c, _ in basis]
    assert classes == sorted(classes) and len(set(classes)) == len(classes)
    assert all(canonical_form(X) == c for c, X in basis)


def test_rank_counts_conjugacy_classes(S3, C2, C3, one):
    for G, P in ((C2, oracles.cyc(2)), (C3, oracles.cyc(3)), (S3, oracles.sym(3))):
        assert len(burnside_group(G, one, G.n_morphisms)) == len(oracles.conjugacy_classes_of_subgroups(P))


def test_additivity_for_points(one):
    A = structure_bisets(one, one)
    Y1 = A.Y[0]
    assert Y1.size_vector == (1, 0)


def test_additivity_c2_c3(C2, C3, one):
    D = disjoint_union(C2, C3)[0]
    rng = random.Random(7)
    zs = [random_biset(rng, one, D, max_size=8, max_orbits=3) for _ in range(5)]
    ws = [random_biset(rng, D, one, max_size=8, max_orbits=3) for _ in range(5)]
    r = additivity_witnesses(C2, C3, one, zs, ws)
    assert r and not r.failures
    assert y_matches_t(C2, C3)
    A = structure_bisets(C2, C3)
    assert find_isomorphism(compose_bisets(A.Y[0], A.X[0]), identity_biset(C2)) is not None
    for Z in zs:
        Z1, Z2 = split(Z, C2, C3)
        assert find_isomorphism(recombine(Z1, Z2, C2, C3), Z) is not None


def test_zero_object(E, one, C2, S3):
    assert is_zero_object(E, [one, C2, S3])
    assert not is_zero_object(one, [one])


def _composable(seed):
    return _chain(random.Random(seed), 3, 4)


@given(seeds)
def test_compose_elements_associative_and_unital(seed):
    X, Y, Z = _composable(seed)
    a, b, c = map(hom_monoid_element, (X, Y, Z))
    assert compose_elements(compose_elements(a, b), c) == compose_elements(a, compose_elements(b, c))
    assert compose_elements(identity_element(X.G), a) == a
    assert compose_elements(a, identity_element(X.H)) == a


@given(seeds)
def test_zero_and_negation(seed):
    X, Y = _chain(random.Random(seed), 2, 4)
    a, b = hom_monoid_element(X), hom_monoid_element(Y)
    assert compose_elements(zero(X.H, X.G), b).is_zero
    assert compose_elements(a, zero(Y.H, Y.G)).is_zero
    assert compose_elements(-a, b) == -compose_elements(a, b) == compose_elements(a, -b)


@given(seeds)
def test_bilinearity(seed):
    rng = random.Random(seed)
    X, Y = _chain(rng, 2, 4)
    X2 = random_biset(rng, X.H, X.G, max_size=4)
    a, a2, b = hom_monoid_element(X), hom_monoid_element(X2), hom_monoid_element(Y)
    assert compose_elements(a + a2, b) == compose_elements(a, b) + compose_elements(a2, b)
    assert hom_monoid_element(tensor(X, X2)) == a + a2
