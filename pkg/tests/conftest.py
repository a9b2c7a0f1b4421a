import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from util import ideal


@pytest.fixture(scope="session")
def example_ideal():
    """The 5-variable product-of-primes example used throughout."""
    return ideal("{type:lp, alpha:[1,3], beta:[4,5]}")


@pytest.fixture(scope="session")
def trio_ideal():
    """Three quadrics whose second shift ideal vanishes."""
    return ideal("[x2*x4, x1*x2, x1*x3] n=4")


@pytest.fixture(scope="session")
def fuzz_corpus():
    """Deterministic corpus of 500 random polymatroidal ideals (n <= 5,
    degree <= 4, at most 120 generators), shared across property suites."""
    from polyshift import GenBudget, random_polymatroidal
    from polyshift.fuzzlab import instance_seed

    budget = GenBudget(n_max=5, degree_max=4, gen_max=120)
    corpus = []
    for index in range(500):
        corpus.append(random_polymatroidal(instance_seed(0xC0FFEE, index), budget))
    return corpus
