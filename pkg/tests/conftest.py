import random
from pathlib import Path

import pytest

from matroid_greedy import (
    SetFunction,
    build_matroid,
    canonical_sp2,
    canonical_t3,
    gen_modular,
)
from matroid_greedy.instances import random_matroid_spec

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def t3():
    return canonical_t3()


@pytest.fixture
def t3_function(t3):
    return t3.function


@pytest.fixture
def t3_matroid(t3):
    return t3.matroid()


@pytest.fixture
def sp2():
    return canonical_sp2()


@pytest.fixture
def modular123():
    return gen_modular(3, [1, 2, 3])


def random_modular_instances(count, seed, n_min=3, n_max=7):
    """Deterministic (function, matroid, cardinality) triples with additive f."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        weights = [rng.uniform(0.5, 5.0) for _ in range(n)]
        spec = random_matroid_spec(n, rng)
        matroid = build_matroid(spec, n)
        cardinality = rng.randint(1, matroid.rank_full)
        out.append((gen_modular(n, weights), matroid, cardinality))
    return out


def constant_function(n, level=1.0):
    return SetFunction(n, [level] * (1 << n))
