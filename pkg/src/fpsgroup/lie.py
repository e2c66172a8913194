"""Truncated polynomial vector fields and the exponential map.

``e_n`` stands for ``x^(n+1) d/dx``, ``n >= 1``, with ``[e_n, e_m] = (m-n) e_(n+m)``.
A :class:`VectorField` keeps components ``c_1..c_M``; anything of higher
index is dropped.  ``exp_field`` is the time-one flow, which lands in the
substitution group at precision ``M``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Sequence

from gmpy2 import mpq

from .rings import DomainError, Ring
from .series import (
    TruncatedSeries,
    parse_sum,
    format_terms,
    split_top_level,
    SeriesSyntaxError,
)

__all__ = [
    "VectorField",
    "basis",
    "witt_bracket",
    "theta_star",
    "exp_field",
    "log_series",
    "parse_field",
    "format_field",
]


@dataclass(frozen=True)
class VectorField:
    ring: Ring
    coeffs: tuple

    def __post_init__(self) -> None:
        norm = self.ring.normalize
        object.__setattr__(self, "coeffs", tuple(norm(c) for c in self.coeffs))

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Any:
        return self.coeffs[n - 1]

    def __add__(self, other: "VectorField") -> "VectorField":
        _check(self, other)
        return VectorField(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        _check(self, other)
        return VectorField(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Any) -> "VectorField":
        c = self.ring.coerce(c)
        return VectorField(self.ring, tuple(self.ring.mul(c, a) for a in self.coeffs))

    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(c == z for c in self.coeffs)

    def __str__(self) -> str:
        return format_field(self)


def basis(ring: Ring, n: int, M: int) -> VectorField:
    """``e_n`` with degree bound ``M``."""
    if not 1 <= n <= M:
        raise DomainError(f"e_{n} outside degree bound {M}")
    coeffs = [ring.zero] * M
    coeffs[n - 1] = ring.one
    return VectorField(ring, tuple(coeffs))


def _check(v: VectorField, w: VectorField) -> None:
    if v.ring != w.ring or v.degree_bound != w.degree_bound:
        raise DomainError("vector fields must share ring and degree bound")


def _need_rationals(ring: Ring, what: str) -> None:
    if not ring.contains_rationals:
        raise DomainError(f"{what} needs a ring containing the rationals, got {ring}")


def witt_bracket(v: VectorField, w: VectorField) -> VectorField:
    _check(v, w)
    ring = v.ring
    M = v.degree_bound
    z = ring.zero
    out: list = [0] * (M + 1)
    for n, a in enumerate(v.coeffs, 1):
        if a == z:
            continue
        for m, b in enumerate(w.coeffs[: M - n], 1):
            if b != z and m != n:
                out[n + m] = out[n + m] + (m - n) * a * b
    return VectorField(ring, tuple(out[1:]))


def theta_star(v: VectorField, s: int) -> VectorField:
    """``e_n -> (1/s) e_(sn)``, dropping indices beyond the bound."""
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"s must be a positive integer, got {s!r}")
    ring = v.ring
    _need_rationals(ring, "theta_star")
    M = v.degree_bound
    inv = ring.coerce(mpq(1, s))
    out = [ring.zero] * M
    for n, c in enumerate(v.coeffs, 1):
        if s * n <= M:
            out[s * n - 1] = ring.mul(inv, c)
    return VectorField(ring, tuple(out))


def _apply(v: VectorField, p: list, top: int) -> list:
    # v(x) p'(x) truncated to degree <= top; p indexed by degree
    ring = v.ring
    z = ring.zero
    dp = [k * p[k] for k in range(1, len(p))]  # dp[d] = coefficient of x^d in p'
    out: list = [0] * (top + 1)
    for n, c in enumerate(v.coeffs, 1):
        if c == z:
            continue
        for d, b in enumerate(dp[: top - n], 0):
            out[d + n + 1] = out[d + n + 1] + c * b
    return [ring.normalize(a) for a in out]


def exp_field(v: VectorField) -> TruncatedSeries:
    """Time-one flow ``sum_i D^i(x) / i!`` of ``D = v(x) d/dx``, at precision ``M``."""
    ring = v.ring
    _need_rationals(ring, "exp_field")
    M = v.degree_bound
    top = M + 1
    term = [ring.zero] * (top + 1)
    term[1] = ring.one
    total = list(term)
    for i in range(1, M + 1):
        term = _apply(v, term, top)
        inv = ring.coerce(mpq(1, i))
        term = [ring.mul(inv, a) for a in term]
        if all(a == ring.zero for a in term):
            break
        total = [a + b for a, b in zip(total, term)]
    return TruncatedSeries(ring, tuple(total[2:]))


def log_series(f: TruncatedSeries) -> VectorField:
    """The field whose time-one flow is ``f``, solved one component at a time.

    ``c_j`` enters the degree-``j`` coefficient of the flow with multiplier 1;
    every other contribution comes from lower components.
    """
    ring = f.ring
    _need_rationals(ring, "log_series")
    M = f.precision
    c: list = []
    for j in range(1, M + 1):
        trial = exp_field(VectorField(ring, tuple(c) + (ring.zero,)))
        c.append(ring.sub(f[j], trial[j]))
    return VectorField(ring, tuple(c))


# ---------------------------------------------------------------------------
# literals

_FIELD_TERM = re.compile(
    r"(?:(?P<coeff>\([^()]*\)|[^\s*+\-()][^\s*+()]*)\s*\*\s*)?e\s*(?P<idx>\d+)"
)


def parse_field(text: str, ring: Ring, M: int | None = None) -> VectorField:
    """Parse ``"c1*e1 + c2*e2"``, ``"0"`` or ``"[c1, c2, ...]"``."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise SeriesSyntaxError("unterminated list", text, len(text))
        body = s[1:-1]
        coeffs = []
        if body.strip():
            for off, piece in split_top_level(body):
                try:
                    coeffs.append(ring.parse(piece))
                except ValueError as exc:
                    raise SeriesSyntaxError(f"bad coefficient ({exc})", text, off + 1) from None
        if M is not None:
            coeffs = coeffs[:M] + [ring.zero] * (M - len(coeffs))
        return VectorField(ring, tuple(coeffs))
    if M is None:
        raise DomainError("vector field literal needs an explicit degree bound")
    coeffs = [ring.zero] * M
    if s == "0":
        return VectorField(ring, tuple(coeffs))
    for n, c, pos in parse_sum(s, ring, "", _FIELD_TERM):
        if n < 1:
            raise SeriesSyntaxError("basis index must be at least 1", s, pos)
        if n <= M:
            coeffs[n - 1] = ring.add(coeffs[n - 1], c)
    return VectorField(ring, tuple(coeffs))


def format_field(v: VectorField, as_list: bool = False) -> str:
    if as_list:
        return "[" + ", ".join(v.ring.format(c) for c in v.coeffs) + "]"
    z = v.ring.zero
    return format_terms([(v.ring.format(c), f"e{n}") for n, c in enumerate(v.coeffs, 1) if c != z])
