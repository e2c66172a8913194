"""
Flows, logarithms and roots
===========================

Over the rationals every element is the time-one flow of a unique truncated
vector field ``sum c_n e_n`` with ``e_n = x^(n+1) d/dx``.  Dividing the field
by ``k`` gives the unique ``k``-th root.
"""
# %%
from gmpy2 import mpq

from fpsgroup import QQ, basis, exp_field, kth_root, log_series, parse_series, power, witt_bracket

e1 = basis(QQ, 1, 6)
print(exp_field(e1))  # x/(1-x)
print(exp_field(e1.scale(mpq(-1, 2))))

# %%
# The logarithm of x + x^2
# ------------------------
f = parse_series("x + x^2", QQ, 5)
v = log_series(f)
print(v)
assert exp_field(v) == f

# %%
# Square roots
# ------------
h = kth_root(f, 2)
print(h)
assert power(h, 2) == f

# %%
# The bracket of the basis fields
# -------------------------------
print(witt_bracket(basis(QQ, 1, 6), basis(QQ, 2, 6)))
