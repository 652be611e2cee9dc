"""Shared fixtures: the seeded random population used across suites."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import pytest

import spiralcover as sc

MASTER_SEED = 20260809
POPULATION_SIZE = 100


def draw_params(rng: np.random.Generator, real: bool = False) -> sc.ClassParams:
    """Random admissible class parameters.

    General draws cover the full parameter disk (rejecting a small
    neighborhood of 0 where the class is defined but numerically wild);
    real draws cover (0.05, 2] for the starlike-only statements.
    """
    if real:
        mu = complex(rng.uniform(0.05, 2.0), 0.0)
    else:
        while True:
            mu = 1.0 + np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
            if abs(mu) >= 0.05:
                break
    return sc.ClassParams(mu, rng.uniform(0.0, 0.95))


@dataclass(frozen=True)
class PopulationEntry:
    measure: sc.AtomicCircleMeasure
    params: sc.ClassParams
    f: sc.ProductForm
    real_params: sc.ClassParams
    real_f: sc.ProductForm


def build_population(count: int = POPULATION_SIZE, seed: int = MASTER_SEED) -> list[PopulationEntry]:
    rng = np.random.default_rng(seed)
    entries = []
    for i in range(count):
        n = int(rng.integers(1, 9))
        sigma = sc.random_measure(n, seed + 1000 + i)
        params = draw_params(rng)
        real_params = draw_params(rng, real=True)
        entries.append(
            PopulationEntry(
                measure=sigma,
                params=params,
                f=sc.construct(params, sigma),
                real_params=real_params,
                real_f=sc.construct(real_params, sigma),
            )
        )
    return entries


@pytest.fixture(scope="session")
def population() -> list[PopulationEntry]:
    return build_population()


@pytest.fixture(scope="session")
def worked_example() -> tuple[sc.ProductForm, sc.ClassParams]:
    """The interior-node showcase map with mu = 1, beta = 0.6."""
    f = sc.ProductForm(1.0, (((0.9 + 0.4j), 0.2), ((0.9 - 0.4j), 0.2)))
    return f, sc.ClassParams(1.0, 0.6)


@pytest.fixture()
def grid() -> sc.GridSpec:
    return sc.DEFAULT_GRID
