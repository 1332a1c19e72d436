"""Exact reduced numerator/denominator pairs of partition reciprocal sums.

The library enumerates ordinary, odd, binary and ternary partitions,
accumulates the rational function sum of 1/sp(lambda, x) exactly over
the integers, cancels the common divisor of the summands, and machine-
checks the coprimality, special-value and recurrence theorems plus the
open coefficient-shape conjectures at desk scale.
"""

from .intpoly import IntPoly, IrreducibilityStatus
from .partitions import (
    Partition,
    PartitionClass,
    allowed_parts,
    count,
    enumerate_partitions,
    multiplicities,
)
from .reduction import (
    ReducedPair,
    big_g,
    den_star,
    h_factored,
    num_star,
    reduced_pair,
    spol,
    sr_eval_rational,
    t_direct,
)
from .verify import ConjectureReport, legendre_valuation, odd_part

__version__ = "0.1.0"

__all__ = [
    "ConjectureReport",
    "IntPoly",
    "IrreducibilityStatus",
    "Partition",
    "PartitionClass",
    "ReducedPair",
    "allowed_parts",
    "big_g",
    "count",
    "den_star",
    "enumerate_partitions",
    "h_factored",
    "legendre_valuation",
    "multiplicities",
    "num_star",
    "odd_part",
    "reduced_pair",
    "spol",
    "sr_eval_rational",
    "t_direct",
    "__version__",
]
