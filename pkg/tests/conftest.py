import numpy as np
import pytest

from apland.de import Archive, initialize_population
from apland.functions import EvaluationCounter, make_function


@pytest.fixture
def sphere2():
    return make_function("sphere", 2, seed=0)


@pytest.fixture
def sphere10():
    return make_function("sphere", 10, seed=0)


def small_state(func, n=6, seed=3):
    """Population + empty archive + counter, deterministically seeded."""
    rng = np.random.default_rng(seed)
    counter = EvaluationCounter()
    pop = initialize_population(n, func, rng, counter)
    return pop, Archive(n), counter
