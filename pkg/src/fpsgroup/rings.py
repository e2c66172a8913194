"""Coefficient rings.

Every ring value is a plain Python object supporting ``+``, ``-`` and ``*``
(``int``, ``gmpy2.mpq`` or :class:`ErdosElement`).  A :class:`Ring` knows how
to bring such a value into canonical form, so kernels can do raw arithmetic
and call :meth:`Ring.normalize` at the end.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

from gmpy2 import mpq

__all__ = [
    "DomainError",
    "NotDivisible",
    "Ring",
    "Integers",
    "Rationals",
    "Modular",
    "PadicFixed",
    "Erdos",
    "ErdosElement",
    "erdos_multiply",
    "ring_from_selector",
    "ZZ",
    "QQ",
    "EE",
]


class DomainError(ValueError):
    """A precondition of an operation is violated."""


class NotDivisible(ArithmeticError):
    """No unique exact quotient exists in the ring."""


def _to_mpq(v: Any) -> mpq:
    if isinstance(v, str):
        return mpq(v.strip())
    return mpq(v)


def _format_mpq(v: mpq) -> str:
    return str(v)


# ---------------------------------------------------------------------------
# Erdos sequence ring


@dataclass(frozen=True)
class ErdosElement:
    """Finitely supported rational sequence ``(x0; x1, x2, ...)``.

    Multiplication is ``(x0*y0, x0*ybar + y0*xbar + xbar*ybar)`` with
    ``xbar*ybar`` taken coordinate-wise.  ``tail`` is a tuple of
    ``(index, value)`` pairs, indices strictly increasing, no zero values.
    """

    head: mpq
    tail: tuple[tuple[int, mpq], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "head", _to_mpq(self.head))
        items: dict[int, mpq] = {}
        for i, v in self.tail:
            i = int(i)
            if i < 1:
                raise ValueError(f"tail index must be positive, got {i}")
            items[i] = items.get(i, mpq(0)) + _to_mpq(v)
        object.__setattr__(
            self, "tail", tuple((i, items[i]) for i in sorted(items) if items[i] != 0)
        )

    @classmethod
    def scalar(cls, c: Any) -> "ErdosElement":
        return cls(_to_mpq(c), ())

    @classmethod
    def _lift(cls, other: Any) -> "ErdosElement | None":
        if isinstance(other, ErdosElement):
            return other
        if isinstance(other, (int, type(mpq(0)))):
            return cls.scalar(other)
        if isinstance(other, Fraction):
            return cls.scalar(mpq(other.numerator, other.denominator))
        return None

    def __add__(self, other: Any) -> "ErdosElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = dict(self.tail)
        for i, v in o.tail:
            d[i] = d.get(i, 0) + v
        return ErdosElement(self.head + o.head, tuple(d.items()))

    __radd__ = __add__

    def __neg__(self) -> "ErdosElement":
        return ErdosElement(-self.head, tuple((i, -v) for i, v in self.tail))

    def __sub__(self, other: Any) -> "ErdosElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "ErdosElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "ErdosElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        x0, y0 = self.head, o.head
        xs, ys = dict(self.tail), dict(o.tail)
        d: dict[int, mpq] = {}
        for i, v in xs.items():
            d[i] = y0 * v + v * ys.get(i, 0)
        for i, v in ys.items():
            d[i] = d.get(i, 0) + x0 * v
        return ErdosElement(x0 * y0, tuple(d.items()))

    __rmul__ = __mul__

    def coordinate(self, i: int) -> mpq:
        if i == 0:
            return self.head
        return dict(self.tail).get(i, mpq(0))

    def __str__(self) -> str:
        if not self.tail:
            return f"({_format_mpq(self.head)})"
        body = ", ".join(f"{i}:{_format_mpq(v)}" for i, v in self.tail)
        return f"({_format_mpq(self.head)}; {body})"


def erdos_multiply(x: ErdosElement, y: ErdosElement) -> ErdosElement:
    return x * y


_ERDOS_RE = re.compile(r"^\(\s*([^;()]+?)\s*(?:;\s*(.*?)\s*)?\)$")


def parse_erdos(text: str) -> ErdosElement:
    """Parse ``"(h; i1:v1, i2:v2)"``; a bare rational is the constant ``(h)``."""
    s = text.strip()
    m = _ERDOS_RE.match(s)
    if m is None:
        try:
            return ErdosElement.scalar(_parse_rational(s))
        except ValueError:
            raise ValueError(f"bad Erdos literal {text!r}") from None
    head = _parse_rational(m.group(1))
    tail = []
    body = m.group(2)
    if body:
        for item in body.split(","):
            if not item.strip():
                continue
            idx, sep, val = item.partition(":")
            if not sep:
                raise ValueError(f"bad Erdos tail entry {item!r}")
            tail.append((int(idx), _parse_rational(val)))
    return ErdosElement(head, tuple(tail))


_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_int(text: str) -> int:
    s = text.strip()
    if not _INT_RE.match(s):
        raise ValueError(f"bad integer literal {text!r}")
    return int(s)


def _parse_rational(text: str) -> mpq:
    s = text.strip().replace(" ", "")
    if not _RAT_RE.match(s):
        raise ValueError(f"bad rational literal {text!r}")
    num, _, den = s.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den else 1)


# ---------------------------------------------------------------------------
# Ring descriptors


class Ring:
    """Commutative unital ring with exact equality."""

    contains_rationals: bool = False
    selector: str = ""

    @property
    def zero(self) -> Any:
        return self.normalize(0)

    @property
    def one(self) -> Any:
        return self.normalize(1)

    def normalize(self, v: Any) -> Any:
        raise NotImplementedError

    def from_int(self, k: int) -> Any:
        return self.normalize(k)

    def coerce(self, v: Any) -> Any:
        """Bring ``v`` (a value, an int, or a literal string) into the ring."""
        if isinstance(v, str):
            return self.parse(v)
        return self.normalize(v)

    def add(self, a: Any, b: Any) -> Any:
        return self.normalize(a + b)

    def sub(self, a: Any, b: Any) -> Any:
        return self.normalize(a - b)

    def neg(self, a: Any) -> Any:
        return self.normalize(-a)

    def mul(self, a: Any, b: Any) -> Any:
        return self.normalize(a * b)

    def binary(self, op: str, a: Any, b: Any) -> Any:
        """Apply ``add``, ``sub`` or ``mul`` by name (case-insensitive)."""
        fn = {"add": self.add, "sub": self.sub, "mul": self.mul}.get(op.lower())
        if fn is None:
            raise ValueError(f"unknown ring operation {op!r}")
        return fn(a, b)

    def pow(self, a: Any, k: int) -> Any:
        if k < 0:
            return self.pow(self.try_invert(a), -k)
        r = self.one
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def eq(self, a: Any, b: Any) -> bool:
        return self.normalize(a) == self.normalize(b)

    def is_zero(self, a: Any) -> bool:
        return self.normalize(a) == self.zero

    def try_exact_divide(self, a: Any, b: Any) -> Any:
        """Return the unique ``q`` with ``q*b == a``; raise :class:`NotDivisible` otherwise."""
        raise NotImplementedError

    def try_invert(self, a: Any) -> Any:
        if self.is_zero(a):
            raise NotDivisible("zero is not invertible")
        return self.try_exact_divide(self.one, a)

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, v: Any) -> str:
        return str(self.normalize(v))

    def __str__(self) -> str:
        return self.selector


@dataclass(frozen=True)
class Integers(Ring):
    selector = "int"

    def normalize(self, v: Any) -> int:
        if isinstance(v, bool) or not isinstance(v, int):
            if hasattr(v, "denominator") and v.denominator == 1:
                return int(v.numerator)
            raise TypeError(f"not an integer: {v!r}")
        return v

    def try_exact_divide(self, a: int, b: int) -> int:
        if b == 0:
            raise NotDivisible("division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        return q

    def parse(self, text: str) -> int:
        return _parse_int(text)


@dataclass(frozen=True)
class Rationals(Ring):
    selector = "rat"
    contains_rationals = True

    def normalize(self, v: Any) -> mpq:
        if isinstance(v, ErdosElement):
            raise TypeError("Erdos element is not a rational")
        return _to_mpq(v)

    def try_exact_divide(self, a: Any, b: Any) -> mpq:
        if b == 0:
            raise NotDivisible("division by zero")
        return mpq(a) / mpq(b)

    def parse(self, text: str) -> mpq:
        return _parse_rational(text)


def _modular_divide(a: int, b: int, n: int) -> int:
    a %= n
    b %= n
    if b == 0:
        raise NotDivisible("division by zero")
    if math.gcd(b, n) != 1:
        raise NotDivisible(f"{b} is not a unit mod {n}; quotient not unique")
    return a * pow(b, -1, n) % n


@dataclass(frozen=True)
class Modular(Ring):
    """The residue ring Z/nZ, values in ``0..n-1``."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("modulus must be at least 2")

    @property
    def selector(self) -> str:  # type: ignore[override]
        return f"mod:{self.n}"

    @property
    def modulus(self) -> int:
        return self.n

    def normalize(self, v: Any) -> int:
        if isinstance(v, int):
            return v % self.n
        if hasattr(v, "denominator"):
            return int(v.numerator) * pow(int(v.denominator), -1, self.n) % self.n
        raise TypeError(f"not a residue: {v!r}")

    def try_exact_divide(self, a: int, b: int) -> int:
        return _modular_divide(a, b, self.n)

    def parse(self, text: str) -> int:
        return _parse_int(text) % self.n

    def elements(self) -> Iterator[int]:
        return iter(range(self.n))


@dataclass(frozen=True)
class PadicFixed(Ring):
    """p-adic integers at working precision N, i.e. arithmetic mod p**N."""

    p: int
    N: int

    def __post_init__(self) -> None:
        if self.p < 2 or any(self.p % d == 0 for d in range(2, math.isqrt(self.p) + 1)):
            raise ValueError(f"{self.p} is not prime")
        if self.N < 1:
            raise ValueError("precision must be positive")

    @property
    def selector(self) -> str:  # type: ignore[override]
        return f"padic:{self.p}:{self.N}"

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def normalize(self, v: Any) -> int:
        if isinstance(v, int):
            return v % self.modulus
        if hasattr(v, "denominator"):
            return int(v.numerator) * pow(int(v.denominator), -1, self.modulus) % self.modulus
        raise TypeError(f"not a p-adic residue: {v!r}")

    def try_exact_divide(self, a: int, b: int) -> int:
        return _modular_divide(a, b, self.modulus)

    def parse(self, text: str) -> int:
        return _parse_int(text) % self.modulus

    def elements(self) -> Iterator[int]:
        return iter(range(self.modulus))


@dataclass(frozen=True)
class Erdos(Ring):
    selector = "erdos"
    contains_rationals = True

    def normalize(self, v: Any) -> ErdosElement:
        if isinstance(v, ErdosElement):
            return v
        return ErdosElement.scalar(v)

    def try_exact_divide(self, a: Any, b: Any) -> ErdosElement:
        a, b = self.normalize(a), self.normalize(b)
        if b == self.zero:
            raise NotDivisible("division by zero")
        # Coordinates x0 + x_i multiply independently, so divide lane by lane.
        if b.head == 0:
            raise NotDivisible("zero divisor: head coordinate vanishes")
        q0 = a.head / b.head
        idx = sorted({i for i, _ in a.tail} | {i for i, _ in b.tail})
        tail = []
        for i in idx:
            bl = b.head + b.coordinate(i)
            if bl == 0:
                raise NotDivisible(f"zero divisor: coordinate {i} vanishes")
            tail.append((i, (a.head + a.coordinate(i)) / bl - q0))
        return ErdosElement(q0, tuple(tail))

    def parse(self, text: str) -> ErdosElement:
        return parse_erdos(text)

    def format(self, v: Any) -> str:
        return str(self.normalize(v))


ZZ = Integers()
QQ = Rationals()
EE = Erdos()


def ring_from_selector(text: str) -> Ring:
    """Build a ring from ``int``, ``rat``, ``mod:<n>``, ``padic:<p>:<N>`` or ``erdos``."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "int" and len(parts) == 1:
            return ZZ
        if kind == "rat" and len(parts) == 1:
            return QQ
        if kind == "erdos" and len(parts) == 1:
            return EE
        if kind == "mod" and len(parts) == 2:
            return Modular(int(parts[1]))
        if kind == "padic" and len(parts) == 3:
            return PadicFixed(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise ValueError(f"bad ring selector {text!r}: {exc}") from None
    raise ValueError(f"bad ring selector {text!r}")
