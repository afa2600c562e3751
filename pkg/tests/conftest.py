from functools import lru_cache

import pytest

from nakayama.classify import census, enumerate_concave, enumerate_kupisch


@lru_cache(maxsize=None)
def all_series(max_n):
    return tuple(A for n in range(1, max_n + 1) for A in enumerate_kupisch(n))


@lru_cache(maxsize=None)
def concave_series(max_n):
    return tuple(A for n in range(1, max_n + 1) for A in enumerate_concave(n))


@lru_cache(maxsize=None)
def census_records(max_n):
    return tuple(census(max_n))


@pytest.fixture(scope="session")
def census12():
    return census_records(12)
