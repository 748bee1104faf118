"""Shared fixtures: seeded random distribution corpora."""

import numpy as np
import pytest

from twentyq import validate_distribution

CORPUS_SEED = 20260822


def dirichlet_distribution(rng, n, prefix="x"):
    """One flat-Dirichlet draw as a validated distribution."""
    probs = rng.dirichlet(np.ones(n))
    labels = tuple(f"{prefix}{i + 1}" for i in range(n))
    return validate_distribution(labels, (float(p) for p in probs))


@pytest.fixture
def make_dist():
    return dirichlet_distribution


@pytest.fixture(scope="session")
def theorem_corpus():
    """1000 random distributions for every object count from 2 to 10.

    Seed is fixed so the corpus (and any failure it surfaces) is
    reproducible run to run.
    """
    rng = np.random.default_rng(CORPUS_SEED)
    return {
        n: [dirichlet_distribution(rng, n) for _ in range(1000)]
        for n in range(2, 11)
    }
