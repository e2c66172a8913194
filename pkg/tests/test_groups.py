import random

import pytest
from gmpy2 import mpq

from frozen_values import FROZEN
from fpsgroup.groups import (
    QuotientWitness,
    abelian_coefficient,
    commutator,
    commutator_level_witness,
    conjugate,
    element_order,
    enumerate_quotient,
    iter_quotient,
    power,
    separating_quotient,
)
from fpsgroup.rings import QQ, ZZ, DomainError, Modular
from fpsgroup.sampling import random_series
from fpsgroup.series import (
    TruncatedSeries,
    compose,
    depth,
    identity,
    invert,
    project,
    reduce_coefficients,
)


def S(ring, coeffs):
    return TruncatedSeries.from_coeffs(ring, coeffs)


def test_power():
    f = S(ZZ, [1, 0, 0])
    assert power(f, 0).is_identity() and power(f, 1) == f
    assert power(f, 2) == S(ZZ, FROZEN["compose x+x^2 twice"])
    assert power(f, -1) == invert(f)
    rng = random.Random(0)
    for _ in range(10):
        g = random_series(QQ, 7, rng)
        assert power(power(g, 2), 3) == power(g, 6)
        assert compose(power(g, 5), power(g, -3)) == power(g, 2)


def test_commutator_examples():
    f = S(ZZ, [1, 0, 0, 0])
    g = S(ZZ, [0, 1, 0, 0])
    assert commutator(f, g) == S(ZZ, FROZEN["commutator x+x^2, x+x^3 m4"])
    assert commutator(f, identity(ZZ, 4)).is_identity()
    a = S(ZZ, [0, 1, 0, 0, 0, 0])
    b = S(ZZ, [0, 0, 1, 0, 0, 0])
    com = commutator(a, b)
    assert com == S(ZZ, FROZEN["commutator x+x^3, x+x^4 m6"])
    assert depth(com)[0] >= 4


def test_conjugate():
    rng = random.Random(3)
    e = identity(QQ, 6)
    for _ in range(10):
        n = rng.randint(0, 5)
        f = random_series(QQ, 6, rng, depth=n)
        g = random_series(QQ, 6, rng)
        assert conjugate(f, e) == f
        assert conjugate(e, g).is_identity()
        assert depth(conjugate(f, g))[0] >= n


def test_abelian_coefficient():
    assert abelian_coefficient(S(ZZ, [0, 2, 0]), 1) == 2
    f, g = S(ZZ, [0, 2, 0]), S(ZZ, [0, 3, 0])
    assert abelian_coefficient(compose(f, g), 1) == 5
    assert abelian_coefficient(identity(ZZ, 4), 2) == 0
    with pytest.raises(DomainError):
        abelian_coefficient(S(ZZ, [1, 2]), 1)
    with pytest.raises(DomainError):
        abelian_coefficient(S(ZZ, [0]), 1)


@pytest.mark.parametrize("n,c", [(0, 1), (1, 5), (2, -3), (0, 0)])
def test_commutator_level_witness(n, c):
    f, g, com = commutator_level_witness(n, c, 2 * n + 4, QQ)
    assert depth(com)[0] >= 2 * n + 2
    assert com[2 * n + 3] == c
    assert f[n + 1] == 1 and g[n + 2] == c


def test_witness_against_oracle():
    _, _, com = commutator_level_witness(1, 1, 6)
    assert com == S(ZZ, FROZEN["commutator x+x^4, x+x^3 m6"])
    _, _, com = commutator_level_witness(1, 5, 5)
    assert com == S(ZZ, FROZEN["commutator x+x^4, x+5x^3 m5"])


def test_witness_preconditions():
    with pytest.raises(DomainError):
        commutator_level_witness(2, 1, 6)
    with pytest.raises(DomainError):
        commutator_level_witness(-1, 1, 6)


def test_enumerate_quotient():
    elems = enumerate_quotient(Modular(2), 2)
    assert [f.coeffs for f in elems] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(enumerate_quotient(Modular(3), 1)) == 3
    assert len(list(iter_quotient(Modular(2), 0))) == 1
    sixteen = enumerate_quotient(Modular(2), 4)
    assert len(set(sixteen)) == 16
    members = set(sixteen)
    for f in sixteen:
        assert invert(f) in members
        for g in sixteen:
            assert compose(f, g) in members
    with pytest.raises(DomainError):
        enumerate_quotient(ZZ, 2)
    with pytest.raises(DomainError):
        enumerate_quotient(Modular(10), 7)


def test_element_order():
    assert element_order(identity(Modular(2), 3)) == 1
    assert element_order(S(Modular(2), [1, 0])) == 2
    for f in enumerate_quotient(Modular(2), 4):
        order = element_order(f)
        assert order & (order - 1) == 0
    assert element_order(S(Modular(2), [1, 0, 0]), max_iter=1) is None


@pytest.mark.parametrize(
    "coeffs,p,expected",
    [([1, 0], 2, (2, 1, 1)), ([4, 0], 2, (2, 3, 1)), ([0, 6], 5, (5, 1, 2)), ([0, 0, 9], 3, (3, 3, 3))],
)
def test_separating_quotient(coeffs, p, expected):
    f = S(ZZ, coeffs)
    w = separating_quotient(f, p)
    assert (w.p, w.j, w.m) == expected
    assert w.image == reduce_coefficients(project(f, w.m), p, w.j)
    assert not w.image.is_identity()


def test_separating_quotient_errors():
    with pytest.raises(DomainError):
        separating_quotient(identity(ZZ, 3), 2)
    with pytest.raises(DomainError):
        separating_quotient(S(QQ, [mpq(1, 2)]), 2)
    with pytest.raises(DomainError):
        separating_quotient(S(ZZ, [1]), 4)
    with pytest.raises(DomainError):
        QuotientWitness(2, 1, 1, identity(Modular(2), 1))


def test_witness_text():
    assert str(separating_quotient(S(ZZ, [4]), 2)) == "p=2 j=3 m=1 image=[4]"


@pytest.mark.parametrize("n_mod", [4, 8, 9])
def test_commutator_depth_over_composite_moduli_is_recorded(n_mod, capsys):
    # Observation only: containment is not asserted for non-prime moduli.
    from collections import Counter

    ring = Modular(n_mod)
    rng = random.Random(n_mod)
    excess = Counter()
    for n in range(0, 4):
        for _ in range(50):
            f = random_series(ring, 2 * n + 6, rng, depth=n)
            g = random_series(ring, 2 * n + 6, rng, depth=n)
            excess[depth(commutator(f, g))[0] - (2 * n + 2)] += 1
    with capsys.disabled():
        print(f"\nZ/{n_mod}: depth([f,g]) - (2n+2) histogram {sorted(excess.items())}")
