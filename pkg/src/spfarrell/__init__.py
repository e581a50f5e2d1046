"""Exact computation of the p-primary Farrell cohomology of Sp(p-1, Z[1/n]).

The group splits into one factor per odd j | y (p - 1 = 2^r y).  For each
factor we compute the cycle data of the Galois action, the invariant
dimensions in every degree, the isomorphism step b_j, and from those the
global step b and the p-period 2y.
"""

from .cohomology import (
    DimTable,
    FactorReport,
    GlobalReport,
    InternalInconsistencyError,
    b_j,
    centralizer_cohomology,
    invariant_dims,
    invariant_dims_from_pairs,
    iso_step,
    p_period,
    report,
)
from .splitting import PrimeContext, PrimeFactor, factorize, orbit_data, parse_factors

__version__ = "0.1.0"
