"""Group-theoretic operations on truncated series.

Powers, commutators, the graded coefficient map on the filtration, finite
quotients over residue rings and residual-finiteness witnesses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Any, Iterator

from .rings import DomainError, Integers, Modular, PadicFixed, Ring
from .series import (
    TruncatedSeries,
    compose,
    depth,
    format_series,
    identity,
    invert,
    project,
    reduce_coefficients,
)

__all__ = [
    "power",
    "commutator",
    "conjugate",
    "abelian_coefficient",
    "commutator_level_witness",
    "enumerate_quotient",
    "iter_quotient",
    "element_order",
    "separating_quotient",
    "QuotientWitness",
    "ENUMERATION_BOUND",
]

ENUMERATION_BOUND = 10**6


def power(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """``k``-fold composition of ``f`` with itself; negative ``k`` uses the inverse."""
    if k < 0:
        f, k = invert(f), -k
    result = identity(f.ring, f.precision)
    base = f
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def commutator(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f o g o f^-1 o g^-1``."""
    return compose(compose(f, g), compose(invert(f), invert(g)))


def conjugate(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``g o f o g^-1``."""
    return compose(compose(g, f), invert(g))


def abelian_coefficient(f: TruncatedSeries, n: int) -> Any:
    """``alpha_{n+1}`` of ``f`` in the n-th filtration subgroup.

    On that subgroup modulo the next one, this is an isomorphism onto the
    additive group of the ring.
    """
    if n < 0:
        raise DomainError("level must be non-negative")
    if f.precision < n + 1:
        raise DomainError(f"need precision >= {n + 1}, got {f.precision}")
    d, _ = depth(f)
    if d < n:
        raise DomainError(f"series has depth {d} < {n}; not in the level-{n} subgroup")
    return f[n + 1]


def commutator_level_witness(
    n: int, c: Any, prec: int, ring: Ring | None = None
) -> tuple[TruncatedSeries, TruncatedSeries, TruncatedSeries]:
    """Commutator in level ``2n+2`` whose ``alpha_{2n+3}`` equals ``c``.

    Returns ``(f, g, com)`` with ``f = x + x^{n+2}``, ``g = x + c x^{n+3}`` and
    ``com = commutator(g, f)``.  The leading term of ``commutator(f, g)`` is
    ``-c x^{2n+4}``, hence the order.
    """
    if ring is None:
        ring = Integers()
    if n < 0:
        raise DomainError("level must be non-negative")
    if prec < 2 * n + 3:
        raise DomainError(f"need precision >= {2 * n + 3}, got {prec}")
    c = ring.coerce(c)
    zero = ring.zero
    fc = [zero] * prec
    fc[n] = ring.one
    gc = [zero] * prec
    gc[n + 1] = c
    f = TruncatedSeries(ring, tuple(fc))
    g = TruncatedSeries(ring, tuple(gc))
    return f, g, commutator(g, f)


def _finite_modulus(ring: Ring) -> int:
    if isinstance(ring, (Modular, PadicFixed)):
        return ring.modulus
    raise DomainError(f"{ring} is not a finite residue ring")


def iter_quotient(ring: Ring, m: int, bound: int = ENUMERATION_BOUND) -> Iterator[TruncatedSeries]:
    """Lazily yield every element of the level-``m`` quotient, lexicographically."""
    q = _finite_modulus(ring)
    if m < 0:
        raise DomainError("level must be non-negative")
    if q**m > bound:
        raise DomainError(f"{q}^{m} elements exceed the enumeration bound {bound}")
    for coeffs in itertools.product(range(q), repeat=m):
        yield TruncatedSeries(ring, coeffs)


def enumerate_quotient(ring: Ring, m: int, bound: int = ENUMERATION_BOUND) -> list[TruncatedSeries]:
    return list(iter_quotient(ring, m, bound))


def element_order(f: TruncatedSeries, max_iter: int | None = None) -> int | None:
    """Least ``k >= 1`` with ``f^k = id``, or ``None`` if not found within ``max_iter``.

    The default cap is ``q^(2m)`` for the residue ring ``Z/q``, which is at
    least the order of the whole quotient group.
    """
    if max_iter is None:
        max_iter = _finite_modulus(f.ring) ** (2 * f.precision)
    g = f
    for k in range(1, max_iter + 1):
        if g.is_identity():
            return k
        g = compose(g, f)
    return None


@dataclass(frozen=True)
class QuotientWitness:
    p: int
    j: int
    m: int
    image: TruncatedSeries

    def __post_init__(self) -> None:
        if self.image.is_identity():
            raise DomainError("witness image must differ from the identity")

    def __str__(self) -> str:
        return f"p={self.p} j={self.j} m={self.m} image={format_series(self.image, as_list=True)}"


def _valuation(a: int, p: int) -> int:
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def separating_quotient(f: TruncatedSeries, p: int) -> QuotientWitness:
    """Finite p-group quotient in which ``f`` survives.

    With ``alpha_n`` the first nonzero coefficient, take level ``m = n`` and
    modulus ``p^(v+1)`` where ``v`` is the p-adic valuation of ``alpha_n``.
    """
    if not isinstance(f.ring, Integers):
        raise DomainError("separating quotients are defined for integer series")
    if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
        raise DomainError(f"{p} is not prime")
    d, saturated = depth(f)
    if saturated:
        raise DomainError("the identity has no separating quotient")
    n = d + 1
    j = _valuation(f[n], p) + 1
    image = reduce_coefficients(project(f, n), p, j)
    return QuotientWitness(p, j, n, image)
