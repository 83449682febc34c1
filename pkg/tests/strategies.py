"""Hypothesis strategies built on the seeded generators."""

import random

from hypothesis import strategies as st

from burnside_bicat.generators import random_biset, random_functor, random_groupoid, random_gset

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def groupoids(draw, max_morphisms=8):
    rng = random.Random(draw(seeds))
    return random_groupoid(rng, max_objects=3, max_morphisms=max_morphisms)


@st.composite
def gsets(draw):
    rng = random.Random(draw(seeds))
    G = random_groupoid(rng, max_objects=3, max_morphisms=8)
    return random_gset(rng, G, free=rng.choice([True, False, None]))


@st.composite
def functors(draw, faithful=False):
    rng = random.Random(draw(seeds))
    for _ in range(50):
        H = random_groupoid(rng, max_morphisms=6)
        G = random_groupoid(rng, max_morphisms=8)
        try:
            return random_functor(rng, H, G, faithful=faithful)
        except Exception:
            continue
    raise AssertionError("no functor drawn")


@st.composite
def bisets(draw, max_size=6):
    rng = random.Random(draw(seeds))
    while True:
        H = random_groupoid(rng, max_morphisms=8)
        G = random_groupoid(rng, max_morphisms=8)
        X = random_biset(rng, H, G, max_size=max_size)
        if X is not None:
            return X
