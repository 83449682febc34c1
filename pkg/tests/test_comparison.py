import pytest
from hypothesis import given

from burnside_bicat.bisets import (
    empty_biset,
    find_isomorphism,
    identity_biset,
    identity_iso,
    compose_isos,
    s_of_functor,
    validate_biset,
    validate_biset_iso,
)
from burnside_bicat.comparison import (
    alpha_equivalence,
    beta_iso,
    biset_to_span,
    double_translation,
    fiber_comparison,
    functoriality_on_morphisms,
    grothendieck,
    gx_functor,
    phi_equivalence,
    pi0_chain,
    span_morphism_to_biset_map,
    span_to_biset,
)
from burnside_bicat.errors import NotAdmissible
from burnside_bicat.generators import subgroup_inclusion, symmetric
from burnside_bicat.groupoids import (
    components,
    constant_functor,
    identity_functor,
    is_equivalence,
    is_isomorphism,
    terminal_groupoid,
    validate_functor,
)
from burnside_bicat.gsets import translation_groupoid
from burnside_bicat.bisets import column, row
from burnside_bicat.gsets import colimit
from burnside_bicat.spans import (
    compose_span_morphisms,
    empty_span,
    identity_span,
    identity_span_morphism,
    s_span,
    same_morphism,
    t_span,
    validate_span_morphism,
)

from strategies import bisets
from test_bisets import sign_functor


@pytest.fixture(scope="module")
def inc():
    return subgroup_inclusion(symmetric(3), [0, 2])[1]


def test_double_translation(C2, S3, inc):
    D = double_translation(identity_biset(C2))
    assert D.groupoid.n_objects == 2 and len(components(D.groupoid)) == 1
    assert is_equivalence(D.p) and is_equivalence(D.q)
    assert double_translation(empty_biset(C2, S3)).groupoid.n_objects == 0
    D = double_translation(s_of_functor(inc))
    assert D.groupoid.n_objects == 6 and len(components(D.groupoid)) == 1


def test_biset_to_span(C2, one):
    A = biset_to_span(identity_biset(C2))
    assert is_equivalence(A.left) and is_equivalence(A.right)
    p = constant_functor(C2, one, 0)
    A = biset_to_span(s_of_functor(p))
    assert is_equivalence(A.left) and A.left.target == s_span(p).apex
    bad = validate_biset(one, C2, {(0, 0): ["p"]}, {0: {"p": "p"}, 1: {"p": "p"}}, {0: {"p": "p"}},
                         require_admissible=False)
    with pytest.raises(NotAdmissible):
        biset_to_span(bad)


def test_functoriality_on_morphisms(C2):
    X = identity_biset(C2)
    m = functoriality_on_morphisms(identity_iso(X))
    assert same_morphism(m, identity_span_morphism(m.target))
    twist = validate_biset_iso((1, 0), X, X)
    m = functoriality_on_morphisms(twist)
    assert m.t.obj_map == (1, 0) and is_isomorphism(m.t)
    both = functoriality_on_morphisms(compose_isos(twist, twist))
    assert same_morphism(compose_span_morphisms(m, m), both)


def test_span_to_biset(C2, S3, one, inc):
    p = constant_functor(C2, one, 0)
    assert find_isomorphism(span_to_biset(s_span(p)), s_of_functor(p)) is not None
    X = span_to_biset(identity_span(C2))
    assert X.size == 2 and find_isomorphism(X, identity_biset(C2)) is not None
    X = span_to_biset(t_span(inc))
    # the column is S3 itself (6 elements), free over C2 with |S3/C2| = 3 orbits
    assert X.H == S3 and X.size_vector == (6,)
    assert len(colimit(column(X, 0)[0])) == 3


def test_span_morphisms_to_maps(S3):
    A = identity_span(S3)
    f = span_morphism_to_biset_map(identity_span_morphism(A))
    assert f.mapping == tuple(range(f.source.size))
    for g in S3.morphisms:
        conj = validate_functor((0,), [S3.compose(S3.compose(g, x), S3.inv[g]) for x in S3.morphisms],
                                S3, S3)
        A1 = s_span(conj)
        m = validate_span_morphism(identity_functor(S3), (S3.inv[g],), (S3.ident[0],), A1, A)
        f = span_morphism_to_biset_map(m)
        validate_biset_iso(f.mapping, f.source, f.target)


def test_beta(C2, S3):
    b = beta_iso(identity_biset(C2))
    assert len(b.mapping) == 2
    b = beta_iso(s_of_functor(sign_functor(S3, C2)))
    assert b.source.size_vector == b.target.size_vector == (2,)
    assert beta_iso(empty_biset(C2, S3)).mapping == ()


def test_alpha(C2, S3, inc):
    r = alpha_equivalence(identity_span(C2))
    assert r and r.morphism.target.apex.n_objects == 2
    assert alpha_equivalence(s_span(inc))
    assert alpha_equivalence(empty_span(C2, S3))


def test_phi(C2, S3):
    X = identity_biset(C2)
    r = phi_equivalence(X, X)
    assert r and r.morphism.target.apex.n_objects == 2
    Y = s_of_functor(sign_functor(S3, C2))
    assert phi_equivalence(Y, identity_biset(S3))
    assert phi_equivalence(X, empty_biset(S3, C2))
    assert phi_equivalence(empty_biset(C2, C2), X)


def test_grothendieck_of_constant_point(S3, C2):
    for H in (S3, C2):
        one = terminal_groupoid()
        GC = grothendieck(H, [one] * H.n_objects, [identity_functor(one)] * H.n_morphisms)
        assert is_isomorphism(GC.projection)


def test_grothendieck_of_discrete_values_is_translation(S3, one):
    # a right S3-set presented as an (S3, 1)-bi-set: S3 acting on the cosets of C2
    X = s_of_functor(constant_functor(S3, one, 0))
    from burnside_bicat.bisets import tensor, transitive_biset
    X = tensor(X, transitive_biset(S3, one, 0, 0, {(0, 0), (2, 0)}))
    groupoids, maps = gx_functor(X)
    assert all(G.n_morphisms == G.n_objects for G in groupoids)
    GC = grothendieck(S3, groupoids, maps)
    T, _ = row(X, 0)
    GX, _ = translation_groupoid(T)
    assert (GC.groupoid.n_objects, GC.groupoid.n_morphisms) == (GX.n_objects, GX.n_morphisms)
    assert len(components(GC.groupoid)) == len(components(GX)) == 2
    assert is_equivalence(fiber_comparison(GC, 0))


@given(bisets(max_size=6))
def test_beta_is_natural_iso(X):
    beta_iso(X)


@given(bisets(max_size=6))
def test_pi0_chain(X):
    for eta0 in X.H.objects:
        assert pi0_chain(X, eta0)


@given(bisets(max_size=6))
def test_span_round_trip_size(X):
    assert span_to_biset(biset_to_span(X)).size == X.size
