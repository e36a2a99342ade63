"""Shared fixtures."""

from itertools import combinations

import numpy as np
import pytest

from exactlin.scalars import PrimeField
from terracini.config import MatroidComputationConfig
from terracini.service import TerraciniService
from geometry.sampler import Sampler


@pytest.fixture
def field():
    return PrimeField()


@pytest.fixture
def small_field():
    return PrimeField(101)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def cfg():
    return MatroidComputationConfig(sampler=Sampler.generic(0), trials=3, workers=1, enumeration_cap=24)


@pytest.fixture
def service(cfg):
    return TerraciniService(cfg)


def _check_rank_axioms(m):
    """Exhaustive check of normalization, unit increase and (local) submodularity."""
    n = m.size
    ranks = {
        frozenset(s): m.rank(frozenset(s))
        for k in range(n + 1)
        for s in combinations(range(n), k)
    }
    assert ranks[frozenset()] == 0
    for s, r in ranks.items():
        assert 0 <= r <= len(s)
        outside = [e for e in range(n) if e not in s]
        for e in outside:
            assert r <= ranks[s | {e}] <= r + 1
        for e, f in combinations(outside, 2):
            assert ranks[s | {e}] + ranks[s | {f}] >= ranks[s | {e, f}] + r


@pytest.fixture
def rank_axioms():
    return _check_rank_axioms
