import pytest
from hypothesis import given

from burnside_bicat.errors import MissingComposite, NoInverse, NotAFunctor, NotNatural, NotAGroup
from burnside_bicat.generators import connected_groupoid, contractible, cyclic, cyclic_table, symmetric
from burnside_bicat.groupoids import (
    check_laws,
    components,
    compose_functors,
    compose_nat_trans,
    constant_functor,
    discrete_groupoid,
    disjoint_union,
    from_group,
    identity_functor,
    identity_nat_trans,
    invert_nat_trans,
    is_equivalence,
    opposite,
    product,
    subgroups,
    validate_functor,
    validate_groupoid,
    validate_nat_trans,
)

from strategies import functors, groupoids


C2_RAW = dict(n_objects=1, morphisms=[("e", 0, 0), ("s", 0, 0)], identities={0: "e"},
              compose={("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"})


def test_c2_table_validates():
    G = validate_groupoid(**C2_RAW)
    assert (G.n_objects, G.n_morphisms) == (1, 2)
    assert G.inv == (0, 1)


def test_missing_composite():
    raw = dict(C2_RAW, compose={k: v for k, v in C2_RAW["compose"].items() if k != ("s", "s")})
    with pytest.raises(MissingComposite):
        validate_groupoid(**raw)


def test_monoid_is_not_a_groupoid():
    raw = dict(C2_RAW, morphisms=[("e", 0, 0), ("a", 0, 0)],
               compose={("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a", ("a", "a"): "a"})
    with pytest.raises(NoInverse):
        validate_groupoid(**raw)
    with pytest.raises(NotAGroup):
        from_group([[0, 1], [1, 1]])


def test_from_group_sizes():
    assert cyclic(2).n_morphisms == 2
    S3 = symmetric(3)
    assert (S3.n_objects, S3.n_morphisms) == (1, 6)


def test_z4_inverses_match_modular_arithmetic():
    Z4 = from_group(cyclic_table(4))
    assert Z4.inv[1] == 3
    assert all((a + Z4.inv[a]) % 4 == 0 for a in range(4))


def test_discrete():
    assert discrete_groupoid(0).n_objects == 0
    assert discrete_groupoid(1).n_morphisms == 1
    D2 = discrete_groupoid(2)
    assert len(components(D2)) == 2


def test_opposite(S3, I):
    assert opposite(opposite(S3)) == S3
    op = opposite(I)
    for m in I.morphisms:
        assert (op.src[m], op.tgt[m]) == (I.tgt[m], I.src[m])
    C2 = cyclic(2)
    assert opposite(C2).comp == C2.comp


def test_disjoint_union_and_product(C2, C3, S3, E, one):
    D, in1, in2 = disjoint_union(C2, C3)
    assert (D.n_objects, D.n_morphisms) == (2, 5)
    validate_functor(in1.obj_map, in1.mor_map, C2, D)
    validate_functor(in2.obj_map, in2.mor_map, C3, D)
    U = disjoint_union(E, S3)[0]
    assert (U.n_objects, U.n_morphisms) == (1, 6)
    assert disjoint_union(one, one)[0].n_objects == 2
    P = product(C2, C2)
    assert (P.n_objects, P.n_morphisms) == (1, 4)
    assert product(S3, C2).n_morphisms == 12
    assert product(one, S3).n_morphisms == 6
    check_laws(product(S3, C2))


def test_components(D2, I, C2, S3):
    assert len(components(D2)) == 2
    assert len(components(I)) == 1
    assert len(components(disjoint_union(C2, S3)[0])) == 2


def test_functors(S3, C2):
    validate_functor(*_maps(identity_functor(S3)), S3, S3)
    # sign of a permutation, computed from inversions
    perms = [tuple(int(c) for c in lab[1:]) for lab in S3.mor_labels]
    sign = [sum(p[i] > p[j] for i in range(3) for j in range(i + 1, 3)) % 2 for p in perms]
    F = validate_functor((0,), sign, S3, C2)
    for a in S3.morphisms:
        for b in S3.morphisms:
            assert F.mor_map[S3.compose(a, b)] == (sign[a] + sign[b]) % 2
    with pytest.raises(NotAFunctor):
        validate_functor((0,), [0, 1, 1, 1, 1, 1], S3, C2)


def _maps(F):
    return F.obj_map, F.mor_map


def test_nat_trans(S3):
    one_f = identity_functor(S3)
    validate_nat_trans(identity_nat_trans(one_f).components, one_f, one_f)
    for g in S3.morphisms:
        conj = validate_functor((0,), [S3.compose(S3.compose(g, x), S3.inv[g]) for x in S3.morphisms],
                                S3, S3)
        alpha = validate_nat_trans((g,), one_f, conj)
        back = invert_nat_trans(alpha)
        assert compose_nat_trans(back, alpha).components == (S3.ident[0],)
    with pytest.raises(NotNatural):
        validate_nat_trans((), one_f, one_f)


def test_equivalences(S3, I, D2, one):
    assert is_equivalence(identity_functor(S3))
    assert is_equivalence(constant_functor(I, one, 0))
    v = is_equivalence(constant_functor(D2, one, 0))
    assert not v and v.reason == "not full"


def test_subgroups_of_s3():
    S3 = symmetric(3)
    subs = subgroups(list(S3.morphisms), S3.compose, 0)
    assert sorted(len(s) for s in subs) == [1, 2, 2, 2, 3, 6]


@given(groupoids())
def test_random_groupoids_satisfy_axioms(G):
    check_laws(G)
    assert opposite(opposite(G)) == G
    assert sum(len(c) for c in components(G)) == G.n_objects


@given(functors())
def test_functor_composition_with_identity(F):
    assert compose_functors(identity_functor(F.target), F) == F
    assert compose_functors(F, identity_functor(F.source)) == F


def test_connected_groupoid_is_equivalent_to_its_group():
    G = connected_groupoid(cyclic(3), 3)
    inc = validate_functor((0,), [G.mor_index[(0, 0, k)] for k in range(3)], cyclic(3), G)
    assert is_equivalence(inc)
    assert is_equivalence(constant_functor(contractible(3), discrete_groupoid(1), 0))
