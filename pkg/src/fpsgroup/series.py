"""Truncated substitution series and the composition kernel.

A :class:`TruncatedSeries` of precision ``m`` stores ``alpha_1..alpha_m`` of
``x + alpha_1 x^2 + ... + alpha_m x^{m+1}``, i.e. an element of the quotient
of the substitution group by the series agreeing with ``x`` to order
``x^{m+1}``.  Binary operations work at the smaller of the two precisions;
composition is triangular, so this is exact.

Internally the kernels work on the *unit part* ``[1, alpha_1, ..., alpha_m]``
of ``f(x)/x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import wraps
from math import gcd, lcm
from operator import mul
from typing import Any, Callable, Sequence

from gmpy2 import mpq

from .rings import QQ, DomainError, Erdos, ErdosElement, Integers, Modular, PadicFixed, Rationals, Ring

__all__ = [
    "TruncatedSeries",
    "identity",
    "compose",
    "compose_horner",
    "compose_power_table",
    "invert",
    "depth",
    "project",
    "in_grid_subgroup",
    "reduce_coefficients",
    "parse_series",
    "format_series",
    "SeriesSyntaxError",
    "KERNELS",
]


@dataclass(frozen=True)
class TruncatedSeries:
    ring: Ring
    coeffs: tuple

    def __post_init__(self) -> None:
        norm = self.ring.normalize
        object.__setattr__(self, "coeffs", tuple(norm(c) for c in self.coeffs))

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs: Sequence[Any]) -> "TruncatedSeries":
        return cls(ring, tuple(ring.coerce(c) for c in coeffs))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Any:
        """``f[i]`` is the coefficient ``alpha_i`` (1-based, matching ``x^{i+1}``)."""
        if not 1 <= i <= len(self.coeffs):
            raise IndexError(f"alpha_{i} outside precision {len(self.coeffs)}")
        return self.coeffs[i - 1]

    def unit_part(self) -> list:
        return [self.ring.one, *self.coeffs]

    def is_identity(self) -> bool:
        z = self.ring.zero
        return all(c == z for c in self.coeffs)

    def __matmul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return compose(self, other)

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        body = ", ".join(self.ring.format(c) for c in self.coeffs)
        return f"TruncatedSeries({self.ring.selector}, [{body}])"


def identity(ring: Ring, m: int) -> TruncatedSeries:
    if m < 0:
        raise DomainError("precision must be non-negative")
    return TruncatedSeries(ring, (ring.zero,) * m)


# ---------------------------------------------------------------------------
# polynomial helpers on raw coefficient lists


def _modulus(ring: Ring) -> int | None:
    # Reducing as we go keeps intermediate integers bounded.
    if isinstance(ring, (Modular, PadicFixed)):
        return ring.modulus
    return None


def mul_trunc(a: Sequence, b: Sequence, n: int) -> list:
    """First ``n`` coefficients of the product of two coefficient lists."""
    la, lb = len(a), len(b)
    out = []
    for d in range(n):
        lo = max(0, d - lb + 1)
        hi = min(d, la - 1)
        if lo > hi:
            out.append(0)
        else:
            out.append(sum(map(mul, a[lo : hi + 1], b[d - hi : d - lo + 1][::-1])))
    return out


def kron_mul_trunc(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Same as :func:`mul_trunc` for integer lists, via one big-integer product.

    Coefficients are packed as digits in base ``2^k`` with ``k`` wide enough
    that no product coefficient overflows its slot, then unpacked with signed
    digits.
    """
    a = a[:n]
    b = b[:n]
    if not a or not b:
        return [0] * n
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if bound == 0:
        return [0] * n
    k = bound.bit_length() + 1
    packed_a = 0
    for c in reversed(a):
        packed_a = (packed_a << k) + c
    packed_b = 0
    for c in reversed(b):
        packed_b = (packed_b << k) + c
    prod = packed_a * packed_b
    mask = (1 << k) - 1
    half = 1 << (k - 1)
    full = 1 << k
    out = []
    for _ in range(n):
        r = prod & mask
        if r >= half:
            r -= full
        out.append(r)
        prod = (prod - r) >> k
    return out


def rat_mul_trunc(a: Sequence, b: Sequence, n: int) -> list:
    """Same as :func:`mul_trunc` for rationals: one common denominator per operand."""
    ia, da = _clear(a[:n])
    ib, db = _clear(b[:n])
    d = da * db
    return [mpq(c, d) for c in kron_mul_trunc(ia, ib, n)]


def mul_for(ring: Ring) -> Callable[[Sequence, Sequence, int], list]:
    if isinstance(ring, (Integers, Modular, PadicFixed)):
        return kron_mul_trunc
    if isinstance(ring, Rationals):
        return rat_mul_trunc
    return mul_trunc


def _check_rings(fs: Sequence[TruncatedSeries]) -> Ring:
    ring = fs[0].ring
    for g in fs[1:]:
        if g.ring != ring:
            raise DomainError(f"ring mismatch: {ring} vs {g.ring}")
    return ring


def _check_pair(f: TruncatedSeries, g: TruncatedSeries) -> int:
    _check_rings((f, g))
    return min(f.precision, g.precision)


def lanewise(kernel: Callable[..., TruncatedSeries]) -> Callable[..., TruncatedSeries]:
    """Run Erdos-ring series kernels one rational lane at a time.

    The coordinates ``x0`` and ``x0 + x_i`` of an Erdos element multiply
    independently, so a ring-polynomial computation on finitely supported
    inputs splits into one rational computation per coordinate of the joint
    support.  Leading positional arguments that are series get split; the
    rest are passed through unchanged.
    """

    @wraps(kernel)
    def run(*args: Any, **kwargs: Any) -> TruncatedSeries:
        nser = 0
        while nser < len(args) and isinstance(args[nser], TruncatedSeries):
            nser += 1
        fs, rest = args[:nser], args[nser:]
        ring = _check_rings(fs)
        if not isinstance(ring, Erdos):
            return kernel(*args, **kwargs)
        support = sorted({i for f in fs for c in f.coeffs for i, _ in c.tail})
        lanes = []
        for lane in [0, *support]:
            lane_fs = [
                TruncatedSeries(QQ, tuple(c.head + c.coordinate(lane) if lane else c.head for c in f.coeffs))
                for f in fs
            ]
            lanes.append(kernel(*lane_fs, *rest, **kwargs).coeffs)
        heads = lanes[0]
        coeffs = tuple(
            ErdosElement(h, tuple((i, lanes[li][k] - h) for li, i in enumerate(support, 1)))
            for k, h in enumerate(heads)
        )
        return TruncatedSeries(ring, coeffs)

    return run


@lanewise
def compose_horner(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(x))`` by Horner's rule, trimming each partial to the order it can affect."""
    m = _check_pair(f, g)
    ring = f.ring
    if m == 0:
        return identity(ring, 0)
    a = f.unit_part()[: m + 1]
    u = g.unit_part()[: m + 1]
    if isinstance(ring, Rationals):
        return TruncatedSeries(ring, tuple(_horner_rational(a, u, m)[1:]))
    mod = _modulus(ring)
    mul_ = mul_for(ring)
    # f(g)/x = u * (a0 + g*(a1 + g*(a2 + ...))); the partial at level i is
    # multiplied by g^i and so only matters modulo x^(m+1-i).
    q = [a[m]]
    for i in range(m - 1, -1, -1):
        q = [a[i], *mul_(u, q, m - i)]
        if mod:
            q = [c % mod for c in q]
    r = mul_(u, q, m + 1)
    return TruncatedSeries(ring, tuple(r[1:]))


def _clear(a: Sequence) -> tuple[list[int], int]:
    d = lcm(*(int(c.denominator) for c in a))
    return [int(c.numerator) * (d // int(c.denominator)) for c in a], d


def _horner_rational(a: Sequence, u: Sequence, m: int) -> list:
    # Horner over integer numerators.  With u = U/D and a = A/E the scaled
    # partial E*q_i is P_i/c_i, P_i = A_i (D c_(i+1)) + x U P_(i+1); the
    # content is divided out each step so the integers stay reduced.
    A, E = _clear(a)
    U, D = _clear(u)
    P, c = [A[m]], 1
    for i in range(m - 1, -1, -1):
        c *= D
        P = [A[i] * c, *kron_mul_trunc(U, P, m - i)]
        g = gcd(c, *P)
        if g > 1:
            c //= g
            P = [x // g for x in P]
    den = E * D * c
    return [mpq(x, den) for x in kron_mul_trunc(U, P, m + 1)]


@lanewise
def compose_power_table(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """``f(g(x))`` as ``sum alpha_i g^(i+1)`` from a table of truncated powers of ``g``."""
    m = _check_pair(f, g)
    ring = f.ring
    if m == 0:
        return identity(ring, 0)
    mod = _modulus(ring)
    mul_ = mul_for(ring)
    a = f.unit_part()[: m + 1]
    u = g.unit_part()[: m + 1]
    r: list = [0] * (m + 1)
    power = u  # (g/x)^(i+1), needed modulo x^(m+1-i)
    for i in range(m + 1):
        ai = a[i]
        for k in range(i, m + 1):
            r[k] = r[k] + ai * power[k - i]
        if i < m:
            power = mul_(power, u, m - i)
            if mod:
                power = [c % mod for c in power]
    return TruncatedSeries(ring, tuple(r[1:]))


KERNELS: dict[str, Callable[[TruncatedSeries, TruncatedSeries], TruncatedSeries]] = {
    "horner": compose_horner,
    "power-table": compose_power_table,
}


def compose(f: TruncatedSeries, g: TruncatedSeries, kernel: str = "horner") -> TruncatedSeries:
    """The group law ``(f o g)(x) = f(g(x))`` at ``min(precision)``."""
    try:
        impl = KERNELS[kernel]
    except KeyError:
        raise ValueError(f"unknown kernel {kernel!r}; choose from {sorted(KERNELS)}") from None
    return impl(f, g)


@lanewise
def invert(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse, solved one coefficient at a time from ``f(g(x)) = x``.

    With ``v = g/x`` the degree-``k`` condition is
    ``v_k + sum_{i=1..k} alpha_i (v^(i+1))_{k-i} = 0``.  Every term except
    ``v_k`` uses only lower coefficients of ``v``, so no division occurs.
    """
    ring = f.ring
    a = f.unit_part()
    if isinstance(ring, Rationals):
        # conjugate by x -> D x so every coefficient is an integer
        D = lcm(*(int(c.denominator) for c in a))
        ints = [int(c.numerator) * (D**i // int(c.denominator)) for i, c in enumerate(a)]
        v = _invert_unit(ints, 1, None)
        return TruncatedSeries(ring, tuple(mpq(c, D**k) for k, c in enumerate(v[1:], 1)))
    return TruncatedSeries(ring, tuple(_invert_unit(a, ring.one, _modulus(ring))[1:]))


def _invert_unit(a: Sequence, one: Any, mod: int | None) -> list:
    m = len(a) - 1
    # cols[j][d] = coefficient of z^d in v^j, extended one degree per step
    cols: list[list] = [[]] + [[one] for _ in range(m + 1)]
    v = cols[1]
    for k in range(1, m + 1):
        vk = -sum(a[i] * cols[i + 1][k - i] for i in range(1, k + 1))
        v.append(vk % mod if mod else vk)
        # only (v^j)_d with d <= m+1-j is ever read
        for j in range(2, m + 2 - k):
            s = sum(map(mul, v[: k + 1], cols[j - 1][k::-1]))
            cols[j].append(s % mod if mod else s)
    return v


def depth(f: TruncatedSeries) -> tuple[int, bool]:
    """``(n, saturated)``: ``alpha_1..alpha_n`` vanish; ``saturated`` if all known ones do."""
    z = f.ring.zero
    for i, c in enumerate(f.coeffs):
        if c != z:
            return i, False
    return f.precision, True


def project(f: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0 or n > f.precision:
        raise DomainError(f"cannot project precision {f.precision} to {n}")
    return TruncatedSeries(f.ring, f.coeffs[:n])


def in_grid_subgroup(f: TruncatedSeries, s: int) -> bool:
    """True iff every nonzero ``alpha_i`` has ``s | i``."""
    if s < 1:
        raise DomainError("s must be a positive integer")
    z = f.ring.zero
    return all(c == z for i, c in enumerate(f.coeffs, start=1) if i % s)


def reduce_coefficients(f: TruncatedSeries, p: int, j: int) -> TruncatedSeries:
    """Coefficient-wise reduction of an integer series modulo ``p**j``."""
    if not isinstance(f.ring, Integers):
        raise DomainError("reduction modulo p^j expects an integer series")
    if j < 1:
        raise DomainError("j must be positive")
    return TruncatedSeries(Modular(p**j), f.coeffs)


# ---------------------------------------------------------------------------
# literals


class SeriesSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def split_top_level(body: str, sep: str = ",") -> list[tuple[int, str]]:
    """Split on ``sep`` outside parentheses; returns ``(offset, piece)`` pairs."""
    out, depth_, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth_ += 1
        elif ch == ")":
            depth_ -= 1
        elif ch == sep and depth_ == 0:
            out.append((start, body[start:i]))
            start = i + 1
    out.append((start, body[start:]))
    return out


def parse_sum(text: str, ring: Ring, head: str, term_re: re.Pattern) -> list[tuple[int, Any, int]]:
    """Parse ``head (sign term)*`` where each term matches ``term_re``."""
    terms = []
    n = len(text)

    def skip(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    pos = skip(0)
    if head:
        if not text.startswith(head, pos) or (
            pos + len(head) < n and text[pos + len(head)] in "^*0123456789"
        ):
            raise SeriesSyntaxError(f"leading term must be exactly {head!r}", text, pos)
        pos = skip(pos + len(head))
    first = not head
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise SeriesSyntaxError("expected '+' or '-'", text, pos)
        m = term_re.match(text, pos)
        if m is None:
            raise SeriesSyntaxError("malformed term", text, pos)
        coeff_text, idx = m.group("coeff"), int(m.group("idx"))
        try:
            c = ring.parse(coeff_text) if coeff_text else ring.one
        except ValueError as exc:
            raise SeriesSyntaxError(f"bad coefficient ({exc})", text, m.start("coeff")) from None
        terms.append((idx, c if sign > 0 else ring.neg(c), m.start()))
        pos = skip(m.end())
        first = False
    return terms


_SERIES_TERM = re.compile(
    r"(?:(?P<coeff>\([^()]*\)|[^\s*+\-()][^\s*+()]*)\s*\*\s*)?x\s*\^\s*(?P<idx>\d+)"
)


def parse_series(text: str, ring: Ring, m: int | None = None) -> TruncatedSeries:
    """Parse ``"x + 2*x^2 - x^4"`` or ``"[2, 0, -1]"``.

    Polynomial form needs ``m``; terms beyond ``x^(m+1)`` are projected away.
    A bracketed list gives its own precision; with ``m`` larger it is padded
    with zeros, with ``m`` smaller it is projected.
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise SeriesSyntaxError("unterminated list", text, len(text))
        body = s[1:-1]
        coeffs = []
        if body.strip():
            for off, piece in split_top_level(body):
                if not piece.strip():
                    raise SeriesSyntaxError("empty coefficient", text, off + 1)
                try:
                    coeffs.append(ring.parse(piece))
                except ValueError as exc:
                    raise SeriesSyntaxError(f"bad coefficient ({exc})", text, off + 1) from None
        if m is not None:
            coeffs = coeffs[:m] + [ring.zero] * (m - len(coeffs))
        return TruncatedSeries(ring, tuple(coeffs))
    if m is None:
        raise DomainError("polynomial series literal needs an explicit precision")
    terms = parse_sum(s, ring, "x", _SERIES_TERM)
    coeffs = [ring.zero] * m
    seen = set()
    for k, c, pos in terms:
        if k < 2:
            raise SeriesSyntaxError("exponent must be at least 2", s, pos)
        if k in seen:
            raise SeriesSyntaxError(f"duplicate exponent {k}", s, pos)
        seen.add(k)
        if k - 1 <= m:
            coeffs[k - 2] = c
    return TruncatedSeries(ring, tuple(coeffs))


def format_terms(pairs: Sequence[tuple[str, str]], head: str = "") -> str:
    """Join ``(coefficient text, monomial)`` pairs as ``head + c*mono - ...``."""
    out = head
    for ctext, mono in pairs:
        neg = ctext.startswith("-")
        if neg:
            ctext = ctext[1:]
        body = mono if ctext == "1" else f"{ctext}*{mono}"
        if out:
            out += (" - " if neg else " + ") + body
        else:
            out = ("-" if neg else "") + body
    return out or "0"


def format_series(f: TruncatedSeries, as_list: bool = False) -> str:
    if as_list:
        return "[" + ", ".join(f.ring.format(c) for c in f.coeffs) + "]"
    z = f.ring.zero
    pairs = [(f.ring.format(c), f"x^{i + 1}") for i, c in enumerate(f.coeffs, 1) if c != z]
    return format_terms(pairs, head="x")
