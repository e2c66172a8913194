"""Exact arithmetic in the group of formal power series ``x + a1 x^2 + ...``
under substitution, truncated at a chosen precision.

The coefficient rings, the group law and its kernels, compression
endomorphisms and the characteristic-zero exponential map live in the
submodules; the most used names are re-exported here.
"""

from .endomorphisms import (
    BinomialRootTable,
    EndomorphismDescriptor,
    binomial_root_table,
    compress,
    compression_into,
    decompress,
    dilate,
    theta_only,
)
from .groups import (
    QuotientWitness,
    abelian_coefficient,
    commutator,
    commutator_level_witness,
    conjugate,
    element_order,
    enumerate_quotient,
    power,
    separating_quotient,
)
from .lie import VectorField, basis, exp_field, log_series, parse_field, theta_star, witt_bracket
from .rings import (
    EE,
    QQ,
    ZZ,
    DomainError,
    Erdos,
    ErdosElement,
    Integers,
    Modular,
    NotDivisible,
    PadicFixed,
    Rationals,
    Ring,
    ring_from_selector,
)
from .roots import kth_root
from .series import (
    TruncatedSeries,
    compose,
    depth,
    format_series,
    identity,
    in_grid_subgroup,
    invert,
    parse_series,
    project,
    reduce_coefficients,
)

__version__ = "0.1.0"
