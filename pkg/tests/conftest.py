import random

import pytest
from hypothesis import strategies as st

from heegaardtubes import BridgeParams, IndexSet


def random_index(rng: random.Random, n: int) -> IndexSet:
    return IndexSet(tuple(sorted(rng.sample(range(1, 2 * n + 1), n))))


@st.composite
def indexed_params(draw, min_n=2, max_n=6):
    """An (IndexSet, BridgeParams) pair with n in [min_n, max_n]."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    members = draw(
        st.sets(st.integers(min_value=1, max_value=2 * n), min_size=n, max_size=n)
    )
    return IndexSet(tuple(sorted(members))), BridgeParams(n)


@pytest.fixture
def rng():
    return random.Random(0xBEEF)
