"""Dilations and compressions of the substitution group.

``dilate(f, t)`` sends ``alpha_i`` to ``t^i alpha_i``.  ``compress(f, s)`` is
``x (1 + s^2 x^s h(s^2 x^s))^(1/s)`` with ``f = x(1 + x h(x))``.  It is
evaluated as ``x u(X)`` with ``X = x^s h(s^2 x^s)`` and ``u(z) =
(1 + s^2 z)^(1/s)``, whose coefficients are integers divisible by ``s``, so
the map is defined over every ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

from gmpy2 import mpq

from .rings import DomainError, NotDivisible, Ring
from .series import (
    TruncatedSeries,
    identity,
    in_grid_subgroup,
    lanewise,
    mul_for,
)

__all__ = [
    "LemmaViolation",
    "BinomialRootTable",
    "binomial_root_table",
    "binomial_root_oracle",
    "root_binomial_coefficients",
    "dilate",
    "compress",
    "theta_only",
    "decompress",
    "EndomorphismDescriptor",
    "compression_into",
]


class LemmaViolation(ArithmeticError):
    """An integrality or divisibility fact about ``(1 + s^2 z)^(1/s)`` failed.

    This is a defect in the implementation, never an input error.
    """


# ---------------------------------------------------------------------------
# the integer series (1 + s^2 z)^(1/s)


@dataclass(frozen=True)
class BinomialRootTable:
    """``betas[i-1]`` is the coefficient of ``z^i`` in ``(1 + s^2 z)^(1/s)``."""

    s: int
    N: int
    betas: tuple[int, ...]

    def series(self) -> list[int]:
        return [1, *self.betas]

    def lines(self) -> str:
        return "\n".join(str(b) for b in self.betas)


def root_binomial_coefficients(s: int, N: int) -> list[mpq]:
    """``binom(1/s, k)`` for ``k = 0..N`` as exact rationals."""
    e = mpq(1, s)
    out = [mpq(1)]
    for k in range(1, N + 1):
        out.append(out[-1] * (e - (k - 1)) / k)
    return out


def binomial_root_oracle(s: int, N: int) -> list[int]:
    """``beta_1..beta_N`` from the generalized binomial theorem over the rationals."""
    _check_s(s)
    out = []
    for k, c in enumerate(root_binomial_coefficients(s, N)[1:], 1):
        b = c * s ** (2 * k)
        if b.denominator != 1:
            raise LemmaViolation(f"beta_{k} = {b} is not an integer for s={s}")
        out.append(int(b))
    return out


def _recurrence(s: int, N: int) -> list[int]:
    # Solve (1 + w)^s = 1 + s^2 z for w = sum beta_i z^i one degree at a time.
    # wp[k][d] = coefficient of z^d in w^k; only k <= s enters the binomial sum.
    binom = [1]
    for k in range(1, s + 1):
        binom.append(binom[-1] * (s - k + 1) // k)
    wp: list[list[int]] = [[0] * (N + 1) for _ in range(s + 1)]
    betas = [0] * (N + 1)
    for n in range(1, N + 1):
        for k in range(2, min(s, n) + 1):
            prev = wp[k - 1]
            wp[k][n] = sum(betas[e] * prev[n - e] for e in range(1, n - k + 2))
        rest = sum(binom[k] * wp[k][n] for k in range(2, min(s, n) + 1))
        target = s * s if n == 1 else 0
        s_beta = target - rest
        if s_beta % (s * s):
            raise LemmaViolation(f"s*beta_{n} = {s_beta} is not divisible by s^2 = {s * s}")
        betas[n] = s_beta // s
        wp[1][n] = betas[n]
    return betas[1:]


def _check_s(s: int) -> None:
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"s must be a positive integer, got {s!r}")


@lru_cache(maxsize=None)
def binomial_root_table(s: int, N: int, check: bool = True) -> BinomialRootTable:
    """Integer coefficients of ``(1 + s^2 z)^(1/s)`` up to ``z^N``.

    Computed by the degree-by-degree recurrence with exact division; with
    ``check`` the result is compared against :func:`binomial_root_oracle`.
    """
    _check_s(s)
    if N < 0:
        raise DomainError("N must be non-negative")
    betas = _recurrence(s, N)
    for i, b in enumerate(betas, 1):
        if b % s:
            raise LemmaViolation(f"beta_{i} = {b} is not divisible by s={s}")
    if check and betas != binomial_root_oracle(s, N):
        raise LemmaViolation(f"recurrence and binomial expansion disagree for s={s}")
    return BinomialRootTable(s, N, tuple(betas))


# ---------------------------------------------------------------------------
# endomorphisms


def dilate(f: TruncatedSeries, t: Any) -> TruncatedSeries:
    """``(1/t) f(tx)``: ``alpha_i -> t^i alpha_i``."""
    ring = f.ring
    t = ring.coerce(t)
    out = []
    tp = ring.one
    for c in f.coeffs:
        tp = ring.mul(tp, t)
        out.append(ring.mul(tp, c))
    return TruncatedSeries(ring, tuple(out))


def _substitute(table: Sequence[Any], y: Sequence[Any], m: int, ring: Ring) -> list:
    """``sum table[k] * y^k`` modulo ``z^(m+1)`` for ``y`` without constant term."""
    mul_ = mul_for(ring)
    norm = ring.normalize
    # Horner; the partial at step k is multiplied by y^k, so trim to z^(m+1-k).
    acc = [table[m]]
    for k in range(m - 1, -1, -1):
        tail = mul_(y[1:], acc, m - k)
        acc = [norm(table[k]), *(norm(c) for c in tail)]
    return acc


def _spread(w: Sequence[Any], s: int, ring: Ring, length: int) -> TruncatedSeries:
    coeffs = [ring.zero] * length
    for j in range(1, len(w)):
        if j * s <= length:
            coeffs[j * s - 1] = w[j]
    return TruncatedSeries(ring, tuple(coeffs))


@lanewise
def compress(f: TruncatedSeries, s: int) -> TruncatedSeries:
    """The compression ``Theta_s``; output precision ``s*m + s - 1``.

    The image lies in the grid subgroup (only ``alpha_{js}`` nonzero).
    """
    _check_s(s)
    ring = f.ring
    m = f.precision
    out_len = s * m + s - 1
    if m == 0:
        return identity(ring, out_len)
    table = binomial_root_table(s, m).series()
    # X = x^s h(s^2 x^s) in the variable y = x^s: coefficient of y^i is alpha_i s^(2(i-1))
    y = [ring.zero, *(ring.mul(ring.from_int(s ** (2 * (i - 1))), c) for i, c in enumerate(f.coeffs, 1))]
    w = _substitute([ring.from_int(b) for b in table], y, m, ring)
    return _spread(w, s, ring, out_len)


@lanewise
def theta_only(f: TruncatedSeries, s: int) -> TruncatedSeries:
    """``f(x^s)^(1/s)`` by the rational binomial series; needs a ring containing Q."""
    _check_s(s)
    ring = f.ring
    if not ring.contains_rationals:
        raise DomainError(f"theta_only needs a ring containing the rationals, got {ring}")
    m = f.precision
    out_len = s * m + s - 1
    if m == 0:
        return identity(ring, out_len)
    table = [ring.coerce(c) for c in root_binomial_coefficients(s, m)]
    w = _substitute(table, [ring.zero, *f.coeffs], m, ring)
    return _spread(w, s, ring, out_len)


def _inverse_of(ring: Ring, s: int) -> Any:
    try:
        return ring.try_invert(ring.from_int(s))
    except (NotDivisible, DomainError):
        raise DomainError(f"s={s} is not invertible in {ring}") from None


@lanewise
def decompress(f: TruncatedSeries, s: int) -> TruncatedSeries:
    """Inverse of :func:`compress` on the grid subgroup; needs ``s`` invertible.

    Takes ``h_j = alpha_{js}``, forms ``x (1 + sum h_j x^j)^s`` and dilates
    by ``s^-2``.  Output precision is ``floor(m / s)``.
    """
    _check_s(s)
    ring = f.ring
    if not in_grid_subgroup(f, s):
        raise DomainError(f"series is not in the grid subgroup for s={s}")
    inv = _inverse_of(ring, s)
    M = f.precision // s
    h = [ring.one, *(f.coeffs[j * s - 1] for j in range(1, M + 1))]
    mul_ = mul_for(ring)
    p = [ring.one]
    for _ in range(s):
        p = [ring.normalize(c) for c in mul_(p, h, M + 1)]
    raised = TruncatedSeries(ring, tuple(p[1:]))
    return dilate(raised, ring.mul(inv, inv))


@dataclass(frozen=True)
class EndomorphismDescriptor:
    """One of the named endomorphisms, with its parameter."""

    kind: str  # "dilation" | "compression" | "theta" | "decompression"
    param: Any

    def __post_init__(self) -> None:
        if self.kind not in ("dilation", "compression", "theta", "decompression"):
            raise ValueError(f"unknown endomorphism kind {self.kind!r}")
        if self.kind != "dilation":
            _check_s(self.param)

    def __call__(self, f: TruncatedSeries) -> TruncatedSeries:
        if self.kind == "dilation":
            return dilate(f, self.param)
        if self.kind == "compression":
            return compress(f, self.param)
        if self.kind == "theta":
            return theta_only(f, self.param)
        return decompress(f, self.param)


def compression_into(n: int) -> EndomorphismDescriptor:
    """A self-embedding whose image lies in the level-``n`` subgroup: ``Theta_{n+1}``."""
    if n < 0:
        raise DomainError("level must be non-negative")
    return EndomorphismDescriptor("compression", n + 1)
