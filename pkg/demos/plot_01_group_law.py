"""
Composing truncated series
==========================

A series ``x + a1 x^2 + a2 x^3 + ...`` kept to precision ``m`` stores
``a1..am``.  Composition of two such series only ever needs coefficients up
to the same precision, so the truncations form a group of their own.
"""
# %%
# Building series
# ---------------
# Literals come in two forms.  The polynomial form needs an explicit
# precision; the bracket form lists the coefficients.
from fpsgroup import QQ, ZZ, Modular, compose, invert, parse_series

f = parse_series("x + x^2", ZZ, 5)
g = parse_series("[0, 3, -1, 0, 2]", ZZ)
print(f, "|", g)

# %%
# The group law and inverses
# --------------------------
fg = compose(f, g)
print("f o g =", fg)
finv = invert(f)
print("f^-1  =", finv)  # signed Catalan numbers
assert compose(f, finv).is_identity()

# %%
# Two kernels, one answer
# -----------------------
# Horner's rule and a table of powers give the same series; the benchmark
# harness relies on that.
from fpsgroup.series import compose_horner, compose_power_table

assert compose_horner(f, g) == compose_power_table(f, g)

# %%
# Other coefficient rings
# -----------------------
# Over Z/2 the square of x + x^2 is already the identity at precision 2.
h = parse_series("[1, 0]", Modular(2))
print(compose(h, h).is_identity())

q = parse_series("[1/2, -2/3, 5]", QQ)
print(invert(q))
