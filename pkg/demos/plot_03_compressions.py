"""
Compressions
============

``compress(f, s)`` embeds the group into the subgroup of series supported on
every ``s``-th coefficient.  The construction takes an ``s``-th root, yet it
works over the integers because every coefficient of ``(1 + s^2 z)^(1/s)`` is
an integer divisible by ``s``.
"""
# %%
# The integer root series
# -----------------------
from fpsgroup import QQ, ZZ, binomial_root_table, compress, decompress, depth, dilate, parse_series, theta_only

for s in (2, 3, 5):
    print(s, binomial_root_table(s, 6).betas)

# %%
# Compressing x + x^2
# -------------------
f = parse_series("x + x^2", ZZ, 3)
for s in (2, 3):
    cf = compress(f, s)
    print(s, cf, "depth", depth(cf)[0])

# %%
# Compression is a homomorphism, so deep images of the whole group exist:
# ``compress(., n+1)`` lands in depth ``n``.
from fpsgroup import compose

g = parse_series("[2, -1, 4]", ZZ)
assert compress(compose(f, g), 3) == compose(compress(f, 3), compress(g, 3))

# %%
# Undoing it over the rationals
# -----------------------------
fq = parse_series("[1, 0, 0]", QQ)
print(decompress(compress(fq, 2), 2))
# The rational map x (1 + x^s h(x^s))^(1/s) after a dilation by s^2 is the same thing.
assert theta_only(dilate(fq, 4), 2) == compress(fq, 2)
