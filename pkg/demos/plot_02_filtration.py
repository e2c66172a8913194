"""
The filtration and commutators
==============================

``depth(f)`` counts the leading coefficients that vanish.  Series of depth at
least ``n`` form a normal subgroup, and on it the first surviving coefficient
adds under composition.  Commutators of depth-``n`` elements are much deeper.
"""
# %%
import random

from fpsgroup import QQ, abelian_coefficient, commutator, commutator_level_witness, compose, depth
from fpsgroup.sampling import random_series

rng = random.Random(0)
n = 3
f = random_series(QQ, 10, rng, depth=n)
g = random_series(QQ, 10, rng, depth=n)
print("depths:", depth(f), depth(g))

# %%
# The first surviving coefficient is additive
# -------------------------------------------
print(abelian_coefficient(compose(f, g), n), "=", f[n + 1] + g[n + 1])

# %%
# Commutators jump to depth 2n+2
# ------------------------------
print("depth of [f, g]:", depth(commutator(f, g))[0], ">=", 2 * n + 2)

# %%
# A commutator whose coefficient at index 2n+3 is any chosen value
a, b, com = commutator_level_witness(n, 7, 2 * n + 4, QQ)
print(com)
