"""Randomized property suites behind the ``verify`` command.

Each check draws its own inputs from a seeded generator and raises
``AssertionError`` on the first counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from gmpy2 import mpq

from . import endomorphisms as endo
from .groups import (
    abelian_coefficient,
    commutator,
    commutator_level_witness,
    element_order,
    enumerate_quotient,
    power,
    separating_quotient,
)
from .lie import basis, exp_field, log_series, theta_star, witt_bracket
from .rings import EE, QQ, ZZ, Modular, PadicFixed, Ring
from .roots import root_by_exp, root_by_solve
from .sampling import random_field, random_series, random_value
from .series import (
    compose,
    compose_power_table,
    depth,
    identity,
    in_grid_subgroup,
    invert,
    project,
    reduce_coefficients,
)

__all__ = ["SUITES", "CheckResult", "run_suites"]

RINGS: tuple[Ring, ...] = (ZZ, QQ, Modular(7), PadicFixed(2, 16), EE)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    cases: int
    ok: bool
    detail: str = ""


def _ring_axioms(rng: random.Random, n: int) -> None:
    for ring in RINGS:
        for _ in range(n):
            a, b, c = (random_value(ring, rng) for _ in range(3))
            assert ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)), ring
            assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c)), ring
            assert ring.mul(a, b) == ring.mul(b, a), ring
            assert ring.parse(ring.format(a)) == a, ring


def _reduction_homomorphism(rng: random.Random, n: int) -> None:
    for _ in range(n):
        p, j = rng.choice([2, 3, 5]), rng.randint(1, 3)
        f = random_series(ZZ, 4, rng, height=50)
        g = random_series(ZZ, 4, rng, height=50)
        assert reduce_coefficients(compose(f, g), p, j) == compose(
            reduce_coefficients(f, p, j), reduce_coefficients(g, p, j)
        )


def _group_axioms(rng: random.Random, n: int) -> None:
    for ring in RINGS:
        for _ in range(n):
            f, g, h = (random_series(ring, 8, rng) for _ in range(3))
            assert compose(compose(f, g), h) == compose(f, compose(g, h)), ring
            assert compose(f, invert(f)).is_identity(), ring
            assert compose(f, identity(ring, 8)) == f, ring


def _kernels_agree(rng: random.Random, n: int) -> None:
    for ring in RINGS:
        for _ in range(n):
            f, g = random_series(ring, 10, rng), random_series(ring, 10, rng)
            assert compose(f, g) == compose_power_table(f, g), ring


def _normality(rng: random.Random, n: int) -> None:
    for _ in range(n):
        d = rng.randint(0, 5)
        f = random_series(QQ, 8, rng, depth=d)
        g = random_series(QQ, 8, rng)
        assert depth(compose(compose(g, f), invert(g)))[0] >= d


def _prop1(rng: random.Random, n: int) -> None:
    for ring in (QQ, Modular(5)):
        for _ in range(n):
            d = rng.randint(0, 8)
            f, g = random_series(ring, d + 2, rng, depth=d), random_series(ring, d + 2, rng, depth=d)
            lhs = abelian_coefficient(compose(f, g), d)
            assert lhs == ring.add(abelian_coefficient(f, d), abelian_coefficient(g, d))


def _commutators(rng: random.Random, n: int) -> None:
    for ring in (QQ, Modular(3)):
        for _ in range(n):
            d = rng.randint(0, 5)
            f = random_series(ring, 2 * d + 6, rng, depth=d)
            g = random_series(ring, 2 * d + 6, rng, depth=d)
            assert depth(commutator(f, g))[0] >= 2 * d + 2
            c = random_value(ring, rng)
            assert commutator_level_witness(d, c, 2 * d + 3, ring)[2][2 * d + 3] == c


def _quotients(rng: random.Random, n: int) -> None:
    for p, m in ((2, 3), (3, 2)):
        elems = enumerate_quotient(Modular(p), m)
        assert len(elems) == p**m
        for f in elems:
            order = element_order(f)
            assert order is not None and _is_power(order, p)
    for _ in range(n):
        f = random_series(ZZ, 5, rng, nonidentity=True, height=40)
        w = separating_quotient(f, rng.choice([2, 3, 5]))
        assert not reduce_coefficients(project(f, w.m), w.p, w.j).is_identity()


def _is_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def _binomial_table(rng: random.Random, n: int) -> None:
    for s in range(1, 9):
        t = endo.binomial_root_table(s, 32)
        assert t.betas[0] == s and all(b % s == 0 for b in t.betas)


def _compression(rng: random.Random, n: int) -> None:
    for ring in (ZZ, QQ, Modular(2), Modular(3)):
        for _ in range(n):
            s, m = rng.randint(1, 5), rng.randint(1, 6)
            f, g = random_series(ring, m, rng), random_series(ring, m, rng)
            cf = endo.compress(f, s)
            assert cf.precision == s * m + s - 1 and in_grid_subgroup(cf, s)
            assert endo.compress(compose(f, g), s) == compose(cf, endo.compress(g, s))


def _round_trip(rng: random.Random, n: int) -> None:
    for _ in range(n):
        s = rng.randint(1, 4)
        f = random_series(QQ, 6, rng)
        assert endo.decompress(endo.compress(f, s), s) == f
        assert endo.theta_only(endo.dilate(f, s * s), s) == endo.compress(f, s)


def _dilation(rng: random.Random, n: int) -> None:
    for ring in RINGS:
        for _ in range(n):
            f, g = random_series(ring, 6, rng), random_series(ring, 6, rng)
            t, r = random_value(ring, rng), random_value(ring, rng)
            assert endo.dilate(endo.dilate(f, t), r) == endo.dilate(f, ring.mul(t, r))
            assert endo.dilate(compose(f, g), t) == compose(endo.dilate(f, t), endo.dilate(g, t))


def _exp_log(rng: random.Random, n: int) -> None:
    for _ in range(n):
        v = random_field(QQ, 8, rng)
        assert log_series(exp_field(v)) == v
        f = random_series(QQ, 8, rng)
        assert exp_field(log_series(f)) == f


def _roots(rng: random.Random, n: int) -> None:
    for _ in range(n):
        k = rng.randint(1, 5)
        f = random_series(QQ, 8, rng)
        h = root_by_solve(f, k)
        assert h == root_by_exp(f, k)
        assert power(h, k) == f


def _witt(rng: random.Random, n: int) -> None:
    M = 12
    for a in range(1, M + 1):
        for b in range(1, M + 1 - a):
            br = witt_bracket(basis(QQ, a, M), basis(QQ, b, M))
            assert br == (basis(QQ, a + b, M).scale(b - a))
    for s in range(1, 5):
        for a in range(1, 4):
            for b in range(1, 4):
                if s * (a + b) <= M:
                    ea, eb = basis(QQ, a, M), basis(QQ, b, M)
                    lhs = witt_bracket(theta_star(ea, s), theta_star(eb, s))
                    assert lhs == theta_star(witt_bracket(ea, eb), s)
    assert theta_star(basis(QQ, 1, M), 2) == basis(QQ, 2, M).scale(mpq(1, 2))


Check = Callable[[random.Random, int], None]

SUITES: dict[str, list[tuple[str, Check]]] = {
    "rings": [("ring axioms and literals", _ring_axioms), ("reduction mod p^j", _reduction_homomorphism)],
    "series": [
        ("group axioms", _group_axioms),
        ("kernels agree", _kernels_agree),
        ("normality of filtration", _normality),
    ],
    "groups": [
        ("graded coefficient additivity", _prop1),
        ("commutator filtration", _commutators),
        ("finite quotients and witnesses", _quotients),
    ],
    "endomorphisms": [
        ("binomial root lemma", _binomial_table),
        ("compression homomorphism", _compression),
        ("decompression round trip", _round_trip),
        ("dilation laws", _dilation),
    ],
    "char0": [("exp/log inverse", _exp_log), ("roots agree", _roots), ("Witt bracket", _witt)],
}


def run_suites(names: list[str], count: int = 20, seed: int = 0) -> list[CheckResult]:
    results = []
    for suite in names:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
        for name, check in SUITES[suite]:
            rng = random.Random(f"{seed}:{suite}:{name}")
            try:
                check(rng, count)
            except AssertionError as exc:
                results.append(CheckResult(suite, name, count, False, str(exc) or "assertion failed"))
            else:
                results.append(CheckResult(suite, name, count, True))
    return results
