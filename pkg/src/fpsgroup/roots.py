"""Unique k-th roots in the substitution group over rings containing Q."""

from __future__ import annotations

from gmpy2 import mpq

from .groups import power
from .lie import exp_field, log_series
from .rings import DomainError, Rationals
from .series import TruncatedSeries, identity

__all__ = ["kth_root", "root_by_solve", "root_by_exp"]


def _check(f: TruncatedSeries, k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not f.ring.contains_rationals:
        raise DomainError(f"roots need a ring containing the rationals, got {f.ring}")


def root_by_solve(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """Solve ``h^k = f`` coefficient by coefficient.

    ``alpha_j(h^k) = k * alpha_j(h) + (terms in lower coefficients of h)``,
    so each step is one division by ``k``.
    """
    _check(f, k)
    ring = f.ring
    inv_k = ring.coerce(mpq(1, k))
    h: list = []
    for j in range(1, f.precision + 1):
        trial = power(TruncatedSeries(ring, (*h, ring.zero)), k)
        h.append(ring.mul(inv_k, ring.sub(f[j], trial[j])))
    return TruncatedSeries(ring, tuple(h))


def root_by_exp(f: TruncatedSeries, k: int) -> TruncatedSeries:
    """``exp(log(f) / k)``."""
    _check(f, k)
    return exp_field(log_series(f).scale(mpq(1, k)))


def kth_root(f: TruncatedSeries, k: int, method: str = "auto") -> TruncatedSeries:
    """The unique ``h`` with ``power(h, k) == f``.

    ``method="auto"`` runs both algorithms over the rationals and insists they
    agree; over other rings containing Q (which may have zero divisors) only
    the coefficient solve is used.
    """
    _check(f, k)
    if f.precision == 0:
        return identity(f.ring, 0)
    if method == "solve":
        return root_by_solve(f, k)
    if method == "exp":
        return root_by_exp(f, k)
    if method != "auto":
        raise ValueError(f"unknown root method {method!r}")
    h = root_by_solve(f, k)
    if isinstance(f.ring, Rationals) and root_by_exp(f, k) != h:
        raise ArithmeticError("root algorithms disagree")
    return h
