"""The nine acceptance criteria, one test each.

Every test prints a single ``criterion N ... PASS|FAIL`` line and must
finish in under a minute.  The lines are repeated in the terminal summary.
"""

import time

import oracles
from burnside_bicat.bisets import compose_bisets, s_of_functor, t_of_functor
from burnside_bicat.burnside import burnside_group, indecomposables
from burnside_bicat.comparison import pi0_chain
from burnside_bicat.generators import cyclic, subgroup_inclusion, symmetric
from burnside_bicat.groupoids import components, terminal_groupoid
from burnside_bicat.laws import SUITES, _chain, case_rng, some_biset
from burnside_bicat.spans import double_coset_equivalence, validate_span_morphism

SEED = 2026
BUDGET = 60.0
VERDICTS = []   # repeated in the terminal summary by conftest


class Line:
    """Prints the verdict line whatever happens inside the block."""

    def __init__(self, n, title):
        self.n, self.title = n, title
        self.ok = False
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.start
        ok = self.ok and exc_type is None and dt < BUDGET
        detail = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}"
        text = f"criterion {self.n} {self.title}: {'PASS' if ok else 'FAIL'} ({detail}; {dt:.1f}s)"
        VERDICTS.append(text)
        print("\n" + text)
        if exc_type is None:
            assert dt < BUDGET, f"criterion {self.n} took {dt:.1f}s"
        return False


def _suite(line, name, cases):
    r = SUITES[name](SEED, cases)
    notes = "".join(f", {k}={v}" for k, v in sorted(r.notes.items()))
    line.detail += f"{name} {r.passed}/{r.cases}{notes} "
    return r


def test_criterion_1_burnside_ranks():
    with Line(1, "Burnside basis ranks") as line:
        one = terminal_groupoid()
        cases = [("C2", cyclic(2), oracles.cyc(2), 8, 2),
                 ("S3", symmetric(3), oracles.sym(3), 12, 4),
                 ("C3", cyclic(3), oracles.cyc(3), 9, 2)]
        got = []
        for name, G, P, bound, expected in cases:
            basis = burnside_group(G, one, bound)
            oracle = oracles.transitive_biset_classes(P, oracles.trivial(), bound)
            sizes = sorted(sum(c.size_vector) for c, _ in basis)
            got.append((len(basis), len(oracle), expected, sizes == oracle))
            line.detail += f"{name}: {len(basis)} (oracle {len(oracle)}) "
        line.ok = all(a == b == c and s for a, b, c, s in got)
        assert line.ok, got


def test_criterion_2_double_coset_formula():
    with Line(2, "double coset formula") as line:
        S3 = symmetric(3)
        _, inc = subgroup_inclusion(S3, [0, 2])
        d = double_coset_equivalence(inc, inc)
        n_apex = len(components(d.lhs.apex))
        m = d.morphism
        validate_span_morphism(m.t, m.theta, m.phi, d.lhs, d.rhs)
        C2 = [(0, 1, 2), (1, 0, 2)]
        n_oracle = len(oracles.double_cosets(C2, oracles.sym(3), C2))
        X = compose_bisets(t_of_functor(inc), s_of_functor(inc))
        n_ind = len(indecomposables(X))
        line.detail = f"pi0(apex)={n_apex}, oracle={n_oracle}, equivalence={bool(d)}, indecomposables={n_ind}"
        line.ok = n_apex == n_oracle == 2 and bool(d) and n_ind == 2
        assert line.ok


def test_criterion_3_pentagon_and_triangle():
    with Line(3, "pentagon and triangle") as line:
        p = _suite(line, "pentagon", 100)
        t = _suite(line, "triangle", 100)
        line.ok = bool(p) and bool(t)
        assert line.ok, p.failures + t.failures


def test_criterion_4_model_round_trips():
    with Line(4, "beta and alpha round trips") as line:
        b = _suite(line, "beta", 60)
        a = _suite(line, "alpha", 60)
        line.ok = bool(a) and bool(b)
        assert line.ok, b.failures + a.failures


def test_criterion_5_composition_compatibility():
    with Line(5, "phi on composable pairs") as line:
        r = _suite(line, "phi", 40)
        line.ok = bool(r)
        assert line.ok, r.failures


def test_criterion_6_gset_equivalences():
    with Line(6, "free, cover and colimit checks on G-sets") as line:
        r = _suite(line, "gsets", 120)
        # every case also runs both cover round trips
        line.detail += f"covers {r.passed}"
        line.ok = bool(r) and r.passed >= 100 and r.notes.get("free", 0) > 0
        assert line.ok, r.failures


def _suite_bisets():
    """The bi-sets drawn by the other suites, replayed from their case seeds."""
    for i in range(60):
        yield some_biset(case_rng(SEED, "beta", i), 8)
    for i in range(40):
        yield from _chain(case_rng(SEED, "phi", i), 2, 4)
    for i in range(100):
        yield from _chain(case_rng(SEED, "triangle", i), 2, 5)


def test_criterion_7_pi0_chain():
    with Line(7, "pi0 chain by three routes") as line:
        r = _suite(line, "pi0", 100)
        bad, count = [], 0
        for X in _suite_bisets():
            count += 1
            broken = [str(c) for c in (pi0_chain(X, eta0) for eta0 in X.H.objects) if not c]
            if broken:
                bad.append(broken)
        line.detail += f"replayed {count - len(bad)}/{count}"
        line.ok = bool(r) and not bad
        assert line.ok, r.failures + bad


def test_criterion_8_additivity():
    with Line(8, "additivity and the zero object") as line:
        r = _suite(line, "additivity", 25)
        line.ok = bool(r)
        assert line.ok, r.failures


def test_criterion_9_canonicalization():
    with Line(9, "canonical form against isomorphism search") as line:
        r = _suite(line, "canon", 250)
        line.ok = bool(r) and r.notes.get("isomorphic", 0) > 0 and r.notes.get("non-isomorphic", 0) > 0
        assert line.ok, r.failures
