"""Independent reference values computed with sympy.

Nothing here imports the package.  Series are plain coefficient lists
``[a1, ..., am]`` standing for ``x + a1 x^2 + ... + am x^(m+1)``.  Running the
module prints every value that the tests freeze.
"""

from __future__ import annotations

import sympy as sp

x = sp.Symbol("x")


def to_poly(coeffs):
    return x + sum(sp.Rational(c) * x ** (i + 1) for i, c in enumerate(coeffs, 1))


def trunc(expr, m):
    """Drop every power of ``x`` above ``x^(m+1)`` from a polynomial."""
    p = sp.Poly(sp.expand(expr), x)
    return sum(c * x**e for (e,), c in p.terms() if e <= m + 1)


def from_expr(expr, m):
    p = sp.Poly(sp.expand(expr), x)
    return [p.coeff_monomial(x ** (i + 1)) for i in range(1, m + 1)]


def from_series(expr, m):
    return from_expr(sp.series(expr, x, 0, m + 2).removeO(), m)


def compose(f, g, m=None):
    m = len(f) if m is None else m
    return from_expr(trunc(to_poly(f).subs(x, to_poly(g)), m), m)


def invert(f):
    """Lagrange inversion: ``[x^n] g = (1/n) [z^(n-1)] (z / f(z))^n``."""
    m = len(f)
    z = sp.Symbol("z")
    q = sp.series(z / to_poly(f).subs(x, z), z, 0, m + 1).removeO()
    out = []
    for n in range(2, m + 2):
        pn = sp.series(q**n, z, 0, n).removeO()
        out.append(sp.Poly(pn, z).coeff_monomial(z ** (n - 1)) / n)
    return out


def commutator(f, g):
    """``f o g o f^-1 o g^-1``."""
    return compose(compose(compose(f, g), invert(f)), invert(g))


def binomial_root(s, N):
    """``beta_k = C(1/s, k) s^(2k)``, the coefficients of ``(1+s^2 z)^(1/s)``."""
    return [sp.binomial(sp.Rational(1, s), k) * s ** (2 * k) for k in range(1, N + 1)]


def theta_only(f, s):
    """``x (1 + x^s h(x^s))^(1/s)`` with ``f = x (1 + x h(x))``."""
    m = len(f)
    h = sum(sp.Rational(c) * x ** (i - 1) for i, c in enumerate(f, 1))
    inner = 1 + x**s * h.subs(x, x**s)
    return from_series(x * inner ** sp.Rational(1, s), s * m + s - 1)


def compress(f, s):
    m = len(f)
    h = sum(sp.Rational(c) * x ** (i - 1) for i, c in enumerate(f, 1))
    inner = 1 + s**2 * x**s * h.subs(x, s**2 * x**s)
    return from_series(x * inner ** sp.Rational(1, s), s * m + s - 1)


def flow(v, m):
    """Time-one flow of ``v(x) d/dx`` by the Lie series, ``v`` a sympy expression."""
    term, total = x, x
    for i in range(1, m + 2):
        term = trunc(v * sp.diff(term, x) / i, m)
        total += term
    return from_expr(total, m)


def _solve_triangular(build, f):
    # coefficient i of build(unknowns) is (unknown i) + (terms in lower unknowns)
    m = len(f)
    known: list = []
    for i in range(1, m + 1):
        c = sp.Symbol("c")
        got = build(known + [c] + [0] * (m - i), i)[i - 1]
        (val,) = sp.solve(sp.Eq(got, sp.Rational(f[i - 1])), c)
        known.append(val)
    return known


def log(f):
    """Solve ``flow(sum c_j x^(j+1)) = f`` one unknown component at a time."""
    def build(cs, i):
        return flow(sum(c * x ** (j + 1) for j, c in enumerate(cs[:i], 1)), i)
    return _solve_triangular(build, f)


def root(f, k):
    """Solve ``h^k = f`` (k-fold composition) one unknown coefficient at a time."""
    def build(hs, i):
        h = x + sum(c * x ** (j + 1) for j, c in enumerate(hs[:i], 1))
        acc = x
        for _ in range(k):
            acc = trunc(h.subs(x, acc), i)
        return from_expr(acc, i)
    return _solve_triangular(build, f)


def values():
    return {
        "compose x+x^2 twice": compose([1, 0, 0], [1, 0, 0]),
        "invert x+x^2 m5": invert([1, 0, 0, 0, 0]),
        "commutator x+x^2, x+x^3 m4": commutator([1, 0, 0, 0], [0, 1, 0, 0]),
        "commutator x+x^3, x+x^4 m6": commutator([0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]),
        "commutator x+x^4, x+x^3 m6": commutator([0, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 0]),
        "commutator x+x^4, x+5x^3 m5": commutator([0, 0, 5, 0, 0], [0, 1, 0, 0, 0]),
        "beta s2 N8": binomial_root(2, 8),
        "beta s3 N6": binomial_root(3, 6),
        "compress x+x^2 s2": compress([1], 2),
        "compress x+x^2 s3 m3": compress([1, 0, 0], 3),
        "theta_only x+x^2 s2 m3": theta_only([1, 0, 0], 2),
        "root2 x+x^2 m5": root([1, 0, 0, 0, 0], 2),
        "root3 x+x^2 m4": root([1, 0, 0, 0], 3),
        "flow e1 m6": flow(x**2, 6),
        "flow 3e1 m5": flow(3 * x**2, 5),
        "flow e2 m6": flow(x**3, 6),
        "log x+x^2 m4": log([1, 0, 0, 0]),
    }


if __name__ == "__main__":
    for name, v in values().items():
        print(f"{name}: {[str(c) for c in v]}")
