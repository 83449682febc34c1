import pytest

from burnside_bicat import bisets as bs
from burnside_bicat import laws
from burnside_bicat.generators import cyclic
from burnside_bicat.laws import SUITES, case_rng, pentagon_holds, run_suites, triangle_holds


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_small_run(name):
    r = SUITES[name](seed=1, cases=3)
    assert r.name == name
    assert r.cases == 3
    assert r.failures == []
    assert r.passed == 3 and bool(r)


def test_case_rng_is_stable_and_separate():
    a = [case_rng(4, "beta", i).random() for i in range(3)]
    assert a == [case_rng(4, "beta", i).random() for i in range(3)]
    assert len(set(a)) == 3
    assert case_rng(4, "beta", 0).random() != case_rng(4, "alpha", 0).random()
    assert case_rng(4, "beta", 0).random() != case_rng(5, "beta", 0).random()


def test_runs_are_reproducible():
    r1 = run_suites(["canon", "gsets"], 9, 6)
    r2 = run_suites(["canon", "gsets"], 9, 6)
    assert [(r.cases, r.failures, r.notes) for r in r1] == [(r.cases, r.failures, r.notes) for r in r2]


def test_crashing_case_is_a_failure():
    def body(rng, res):
        if res.cases == 2:
            raise ValueError("boom")
        return "bad" if res.cases == 3 else None
    r = laws._run("demo", 0, 4, body)
    assert [i for i, _ in r.failures] == [1, 2]
    assert "boom" in r.failures[0][1]
    assert r.failures[1][1] == "bad"
    assert not r


# the coherence checks must be able to fail


def _central_twist(f):
    """Post-compose an iso over C2 with the natural automorphism x -> r1 x."""
    T = f.target
    r1 = next(m for m in T.G.morphisms if m != T.G.ident[0])
    return bs.BiSetIso(f.source, T, tuple(T.lact[r1][y] for y in f.mapping))


def test_coherence_checks_detect_a_wrong_associator(monkeypatch):
    C2 = cyclic(2)
    one = bs.identity_biset(C2)
    assert pentagon_holds(one, one, one, one) is None
    assert triangle_holds(one, one) is None
    real = bs.associator
    monkeypatch.setattr(bs, "associator", lambda *a: _central_twist(real(*a)))
    assert pentagon_holds(one, one, one, one) == "pentagon does not commute"
    assert triangle_holds(one, one) == "triangle does not commute"


def test_canon_suite_sees_both_verdicts():
    r = SUITES["canon"](seed=2, cases=40)
    assert r and r.notes["isomorphic"] > 0 and r.notes["non-isomorphic"] > 0


def test_canon_suite_catches_a_coarse_invariant(monkeypatch):
    # a code that forgets the stabilizer cannot separate near misses
    monkeypatch.setattr(laws, "canonical_form", lambda X: (X.H.n_morphisms, X.G.n_morphisms, X.size))
    r = SUITES["canon"](seed=2, cases=40)
    assert not r
    assert all("search says False" in msg for _, msg in r.failures)
