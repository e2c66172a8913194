"""
Finite quotients
================

Over ``Z/p`` the truncations are finite p-groups.  Every non-identity integer
series survives in one of them, which is what residual finiteness means here.
"""
# %%
from collections import Counter

from fpsgroup import ZZ, Modular, element_order, enumerate_quotient, parse_series, separating_quotient

elems = enumerate_quotient(Modular(2), 4)
print(len(elems), "elements")
print(sorted(Counter(element_order(f) for f in elems).items()))

# %%
# Separating a series from the identity
# -------------------------------------
for text, p in (("x + 4*x^2", 2), ("x + 6*x^3", 5), ("x + 27*x^4", 3)):
    f = parse_series(text, ZZ, 4)
    print(text, "->", separating_quotient(f, p))
