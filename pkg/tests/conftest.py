import random
from itertools import combinations

import pytest


def naive_boundary(terms, p):
    """Boundary written out from the alternating-sign rule, as a plain dict."""
    out = {}
    for face, c in terms.items():
        for i in range(len(face)):
            facet = face[:i] + face[i + 1:]
            out[facet] = (out.get(facet, 0) + (-1) ** i * c) % p
    return {f: c for f, c in out.items() if c}


def random_terms(rng, verts, size, count, p):
    pool = list(combinations(verts, size))
    return {f: rng.randrange(1, p) for f in rng.sample(pool, min(count, len(pool)))}


@pytest.fixture
def rng():
    return random.Random(20240611)
