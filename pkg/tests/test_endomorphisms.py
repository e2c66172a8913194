import random

import pytest
from gmpy2 import mpq

from frozen_values import FROZEN
from fpsgroup.endomorphisms import (
    EndomorphismDescriptor,
    binomial_root_oracle,
    binomial_root_table,
    compress,
    compression_into,
    decompress,
    dilate,
    theta_only,
)
from fpsgroup.rings import EE, QQ, ZZ, DomainError, Modular, PadicFixed
from fpsgroup.sampling import random_series, random_value
from fpsgroup.series import (
    TruncatedSeries,
    compose,
    depth,
    identity,
    in_grid_subgroup,
    parse_series,
    project,
)


def S(ring, coeffs):
    return TruncatedSeries.from_coeffs(ring, coeffs)


def test_dilation_examples():
    assert dilate(identity(ZZ, 4), 5).is_identity()
    assert dilate(S(ZZ, [1, 1]), 2).coeffs == (2, 4)
    f = S(QQ, ["1/2", 3, -1])
    assert dilate(dilate(f, 2), 3) == dilate(f, 6)
    assert dilate(f, "1/2") == S(QQ, ["1/4", "3/4", "-1/8"])


@pytest.mark.parametrize("ring", [ZZ, QQ, Modular(6), PadicFixed(3, 5), EE], ids=str)
def test_dilation_laws(ring):
    rng = random.Random(str(ring))
    for _ in range(20):
        f, g = random_series(ring, 6, rng), random_series(ring, 6, rng)
        t, r = random_value(ring, rng), random_value(ring, rng)
        assert dilate(dilate(f, t), r) == dilate(f, ring.mul(t, r))
        assert dilate(compose(f, g), t) == compose(dilate(f, t), dilate(g, t))


def test_binomial_root_tables():
    assert list(binomial_root_table(2, 8).betas) == [int(b) for b in FROZEN["beta s2 N8"]]
    assert list(binomial_root_table(3, 6).betas) == [int(b) for b in FROZEN["beta s3 N6"]]
    assert binomial_root_table(1, 5).betas == (1, 0, 0, 0, 0)
    for s in range(1, 9):
        t = binomial_root_table(s, 20)
        assert t.betas[0] == s
        assert all(b % s == 0 for b in t.betas)
        assert list(t.betas) == binomial_root_oracle(s, 20)
    assert binomial_root_table(2, 4).lines() == "2\n-2\n4\n-10"
    with pytest.raises(DomainError):
        binomial_root_table(0, 4)


def test_compress_examples():
    f = S(ZZ, [1])
    assert compress(f, 2) == S(ZZ, FROZEN["compress x+x^2 s2"])
    g = S(ZZ, [1, 0, 0])
    assert compress(g, 3) == S(ZZ, FROZEN["compress x+x^2 s3 m3"])
    assert compress(identity(ZZ, 3), 4) == identity(ZZ, 15)
    assert compress(g, 1) == g


def test_theta_only_examples():
    f = S(QQ, [1, 0, 0])
    assert theta_only(f, 2) == S(QQ, FROZEN["theta_only x+x^2 s2 m3"])
    assert theta_only(dilate(f, 4), 2) == compress(f, 2)
    assert theta_only(identity(QQ, 2), 3).is_identity()
    with pytest.raises(DomainError, match="rationals"):
        theta_only(S(ZZ, [1]), 2)


def test_decompress():
    f = S(QQ, [1])
    assert decompress(compress(f, 2), 2) == f
    assert decompress(identity(QQ, 7), 3).is_identity()
    with pytest.raises(DomainError, match="not invertible"):
        decompress(S(ZZ, [0, 2, 0]), 2)
    with pytest.raises(DomainError, match="grid"):
        decompress(S(QQ, [1, 2, 0]), 2)
    # Z/5 has 2 invertible
    g = S(Modular(5), [3, 1])
    assert decompress(compress(g, 2), 2) == g


@pytest.mark.parametrize("ring", [ZZ, QQ, Modular(2), Modular(3), EE], ids=str)
def test_compression_properties(ring):
    rng = random.Random(str(ring))
    for _ in range(12):
        s, m = rng.randint(1, 4), rng.randint(1, 6)
        f, g = random_series(ring, m, rng), random_series(ring, m, rng)
        cf = compress(f, s)
        assert cf.precision == s * m + s - 1
        assert in_grid_subgroup(cf, s)
        assert depth(cf)[0] >= s - 1
        assert compress(compose(f, g), s) == compose(cf, compress(g, s))
        n = rng.randint(1, m)
        assert project(cf, s * n + s - 1) == compress(project(f, n), s)


def test_leading_term_law():
    rng = random.Random(9)
    for _ in range(30):
        s, n = rng.randint(1, 5), rng.randint(1, 4)
        f = random_series(ZZ, n + 2, rng, depth=n - 1)
        cf = compress(f, s)
        assert all(cf[i] == 0 for i in range(1, n * s))
        assert cf[n * s] == s ** (2 * n - 1) * f[n]


def test_round_trip_rationals():
    rng = random.Random(4)
    for _ in range(20):
        s = rng.randint(1, 4)
        f = random_series(QQ, 6, rng)
        assert decompress(compress(f, s), s) == f
        assert theta_only(dilate(f, s * s), s) == compress(f, s)


def test_descriptors():
    f = parse_series("x + x^2", ZZ, 3)
    assert EndomorphismDescriptor("compression", 3)(f) == compress(f, 3)
    assert EndomorphismDescriptor("dilation", 2)(f) == dilate(f, 2)
    assert compression_into(0)(f) == f
    emb = compression_into(2)
    assert emb.param == 3 and depth(emb(f))[0] >= 2
    with pytest.raises(ValueError):
        EndomorphismDescriptor("shift", 1)
    with pytest.raises(DomainError):
        EndomorphismDescriptor("compression", 0)
    with pytest.raises(DomainError):
        compression_into(-1)


def test_erdos_compression_is_lanewise():
    x1 = EE.parse("(1; 1:1)")
    f = TruncatedSeries(EE, (x1, EE.zero))
    cf = compress(f, 2)
    head = compress(S(QQ, [1, 0]), 2)
    lane = compress(S(QQ, [2, 0]), 2)
    for i in range(1, cf.precision + 1):
        assert cf[i].head == head[i]
        assert cf[i].head + cf[i].coordinate(1) == lane[i]
    assert cf[2] == EE.parse("(2; 1:2)") and lane[2] == mpq(4)
