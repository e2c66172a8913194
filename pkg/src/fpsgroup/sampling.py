"""Random ring values, series and vector fields for property checks."""

from __future__ import annotations

import random
from typing import Any

from gmpy2 import mpq

from .lie import VectorField
from .rings import Erdos, ErdosElement, Integers, Modular, PadicFixed, Rationals, Ring
from .series import TruncatedSeries

__all__ = ["random_value", "random_series", "random_field"]

ERDOS_INDICES = (1, 2, 3)


def random_value(ring: Ring, rng: random.Random, height: int = 3) -> Any:
    if isinstance(ring, (Modular, PadicFixed)):
        return rng.randrange(ring.modulus)
    if isinstance(ring, Integers):
        return rng.randint(-height, height)
    if isinstance(ring, Rationals):
        return mpq(rng.randint(-height, height), rng.randint(1, height + 1))
    if isinstance(ring, Erdos):
        k = rng.randint(0, 2)
        tail = tuple(
            (i, mpq(rng.randint(-height, height), rng.randint(1, 2)))
            for i in rng.sample(ERDOS_INDICES, k)
        )
        return ErdosElement(mpq(rng.randint(-height, height), rng.randint(1, 2)), tail)
    raise TypeError(f"no sampler for {ring}")


def random_series(
    ring: Ring,
    m: int,
    rng: random.Random,
    *,
    depth: int = 0,
    grid: int = 1,
    height: int = 3,
    nonidentity: bool = False,
) -> TruncatedSeries:
    """Random element of precision ``m`` with ``alpha_1..alpha_depth = 0``.

    ``grid`` restricts support to indices divisible by it.  ``nonidentity``
    redraws until some coefficient is nonzero (requires a free slot).
    """
    while True:
        coeffs = [
            random_value(ring, rng, height) if i > depth and i % grid == 0 else ring.zero
            for i in range(1, m + 1)
        ]
        f = TruncatedSeries(ring, tuple(coeffs))
        if not nonidentity or not f.is_identity():
            return f


def random_field(
    ring: Ring, M: int, rng: random.Random, *, support: tuple[int, ...] | None = None, height: int = 3
) -> VectorField:
    idx = set(range(1, M + 1) if support is None else support)
    return VectorField(
        ring, tuple(random_value(ring, rng, height) if n in idx else ring.zero for n in range(1, M + 1))
    )
