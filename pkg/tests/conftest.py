from __future__ import annotations

import pytest

from ksets import catalog
from ksets.model import KSSet, Projector, Ray
from ksets.cyclo import CycNum


@pytest.fixture(scope="session")
def s18() -> KSSet:
    return catalog.seed_set("d4-18-9")


@pytest.fixture(scope="session")
def s21() -> KSSet:
    return catalog.seed_set("d6-21-7")


@pytest.fixture(scope="session")
def basis21() -> KSSet:
    return catalog.seed_set("d6-21-7-basis")


def make_ray(*values) -> Ray:
    return Ray(tuple(CycNum.from_rational(v) if isinstance(v, int) else v
                     for v in values))


def basis_set(d: int) -> KSSet:
    """Single standard-basis context in dimension d."""
    projs = {
        str(i + 1): Projector((make_ray(*(1 if j == i else 0 for j in range(d))),))
        for i in range(d)
    }
    return KSSet(d, projs, [tuple(str(i + 1) for i in range(d))], name=f"basis{d}")
