import random

import pytest
from hypothesis import given

from burnside_bicat import bisets as bs
from burnside_bicat.bisets import (
    associator,
    coend,
    compose_bisets,
    compose_isos,
    empty_biset,
    find_isomorphism,
    identity_biset,
    invert_iso,
    relabel,
    s_composition_iso,
    s_of_functor,
    swap_iso,
    tensor,
    twist,
    unitor_left,
    unitor_right,
    validate_biset,
)
from burnside_bicat.burnside import canonical_form
from burnside_bicat.errors import NotAdmissible, NotAnIsomorphism, NotBifunctorial
from burnside_bicat.generators import subgroup_inclusion
from burnside_bicat.groupoids import constant_functor, identity_functor, validate_functor
from burnside_bicat.laws import group_automorphisms
from burnside_bicat.gsets import colimit, constant_gset, corepresentable, representable

from strategies import bisets


def sign_functor(S3, C2):
    perms = [tuple(int(c) for c in lab[1:]) for lab in S3.mor_labels]
    sign = [sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3)) % 2 for p in perms]
    return validate_functor((0,), sign, S3, C2)


def test_identity_bisets(C2, D2, E):
    X = identity_biset(C2)
    bs.check_biset(X)
    assert X.size_vector == (2,)
    assert identity_biset(D2).size_vector == (1, 0, 0, 1)
    assert identity_biset(E).size == 0


def test_rejections(C2, one):
    with pytest.raises(NotAdmissible):
        validate_biset(one, C2, {(0, 0): ["p"]}, {0: {"p": "p"}, 1: {"p": "p"}}, {0: {"p": "p"}})
    # left swap (a b) and right swap (b c) do not commute
    fib = {(0, 0): ["a", "b", "c"]}
    ident = {x: x for x in "abc"}
    with pytest.raises(NotBifunctorial):
        validate_biset(C2, C2, fib, {0: ident, 1: {"a": "b", "b": "a", "c": "c"}},
                       {0: ident, 1: {"a": "a", "b": "c", "c": "b"}}, require_admissible=False)


def test_coend_unit_laws(S3, C2):
    for g in S3.objects:
        S = representable(S3, g)
        assert len(coend(S, corepresentable(S3, g))) == S.size
    P = corepresentable(C2, 0)
    assert len(coend(constant_gset(C2, "right"), P)) == len(colimit(P))


def test_unitors_and_composites(C2, S3, one):
    X = identity_biset(C2)
    assert compose_bisets(X, X).size == 2
    lam, rho = unitor_left(X), unitor_right(X)
    assert lam.mapping == rho.mapping
    Z = empty_biset(C2, C2)
    assert unitor_left(Z).mapping == () and unitor_right(Z).mapping == ()
    # X = C2 as a right C2-set over 1, Y = C2 as a left C2-set under 1
    Xr = validate_biset(C2, one, {(0, 0): ["a", "b"]}, {0: {"a": "a", "b": "b"}},
                        {0: {"a": "a", "b": "b"}, 1: {"a": "b", "b": "a"}})
    Yl = validate_biset(one, C2, {(0, 0): ["a", "b"]}, {0: {"a": "a", "b": "b"}, 1: {"a": "b", "b": "a"}},
                        {0: {"a": "a", "b": "b"}})
    assert compose_bisets(Xr, Yl).size == 2


def test_s_of_functor(C2, S3, one):
    assert find_isomorphism(s_of_functor(identity_functor(S3)), identity_biset(S3)) is not None
    assert s_of_functor(constant_functor(C2, one, 0)).size_vector == (1,)
    sign = sign_functor(S3, C2)
    X = s_of_functor(sign)
    assert X.size_vector == (2,) and X.admissible
    _, inc = subgroup_inclusion(S3, [0, 2])
    # S(sign) x S(inc) = S(sign o inc), a bi-set of size |C2|
    iso = s_composition_iso(inc, sign)
    assert iso.source.size == iso.target.size == 2
    # S(j) x S(sign) = S(j o sign) for j: C2 -> S3, of size |S3|
    j = validate_functor((0,), (0, 2), C2, S3)
    iso = s_composition_iso(sign, j)
    assert iso.target.size == 6


def test_associator_edge_cases(C2):
    X = identity_biset(C2)
    a = associator(X, X, X)
    assert a.source.size == 2
    Z = empty_biset(C2, C2)
    assert associator(Z, X, X).mapping == ()
    assert associator(X, Z, X).mapping == ()
    assert associator(X, X, Z).mapping == ()


def test_tensor(C2, S3):
    X = s_of_functor(sign_functor(S3, C2))
    Z = empty_biset(S3, C2)
    assert find_isomorphism(tensor(X, Z), X) is not None
    Y = s_of_functor(constant_functor(S3, C2, 0))
    s = swap_iso(X, Y)
    assert s.source.size == s.target.size == 4
    assert find_isomorphism(tensor(X, Y), tensor(Y, X)) is not None
    assert tensor(X, X).size_vector == tuple(2 * n for n in X.size_vector)


def test_twist_of_identity_is_isomorphic(S3, C3):
    # the same automorphism on both sides: sigma itself is a natural bijection
    for G in (C3, S3):
        X = identity_biset(G)
        for sigma in group_automorphisms(G):
            Y = twist(X, sigma, sigma)
            assert find_isomorphism(X, Y) is not None
            bs.validate_biset_iso(sigma.mor_map, X, Y)


def test_central_translation_of_identity(C2):
    # x -> r1 x is a natural automorphism of 1_{C2} because C2 is abelian
    X = identity_biset(C2)
    bs.validate_biset_iso((1, 0), X, X)


def test_non_isomorphic_free_columns(C2, one):
    two = bs.transitive_biset(one, C2, 0, 0, {(0, 0)})
    four = tensor(two, two)
    assert find_isomorphism(two, two) is not None
    assert two.size != four.size
    assert canonical_form(two) != canonical_form(four)
    with pytest.raises(NotAnIsomorphism):
        bs.validate_biset_iso(tuple(range(2)), two, four)


@given(bisets())
def test_relabelled_copies_are_found(X):
    rng = random.Random(X.size)
    perm = list(range(X.size))
    rng.shuffle(perm)
    Y = relabel(X, perm)
    f = find_isomorphism(X, Y)
    assert f is not None


@given(bisets(max_size=5))
def test_unitors_are_isomorphisms(X):
    unitor_left(X)
    unitor_right(X)
    rho = unitor_right(X)
    assert compose_isos(invert_iso(rho), rho).mapping == tuple(range(rho.source.size))


@given(bisets(max_size=5))
def test_composite_is_admissible(X):
    Y = identity_biset(X.H)
    assert compose_bisets(X, Y).admissible
    assert compose_bisets(identity_biset(X.G), X).admissible
