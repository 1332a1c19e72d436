"""Reduced numerator/denominator pairs of partition reciprocal sums.

For each partition class the rational function sum of 1/sp(lambda, x)
over partitions of n has the unreduced form num*/den* with

    den*(n,x) = prod over allowed i <= n of (1+x^i)^floor(n/i),
    num*(n,x) = sum over partitions of the cofactors h_lambda,
    h_lambda  = prod (1+x^i)^(floor(n/i) - m_lambda(i)).

The common divisor G of all the h_lambda is then cancelled:
num = num*/G, den = den*/G.  G is NOT gcd(num*, den*); it is the gcd of
the individual summands, and whether anything further cancels is
exactly what the verification module checks.

Two interchangeable engines accumulate num*: a dynamic program over the
allowed parts (production) and a streaming fold over the enumerated
partitions (oracle).  Integer addition is exact, so both are
bit-deterministic and must agree coefficient for coefficient.

G itself is computed from closed-form exponent formulas (fast path)
with the entrywise-minimum oracle available for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import cyclotomic, intpoly
from .intpoly import IntPoly
from .partitions import (
    Partition,
    PartitionClass,
    allowed_parts,
    enumerate_partitions,
    multiplicities,
)


class InvalidPartitionError(ValueError):
    """The multiplicity map is not a class-valid partition of n."""


class PoleAtX0Error(ZeroDivisionError):
    """Some subsum polynomial vanishes at the evaluation point."""


def spol(p: Partition) -> IntPoly:
    """Subsum polynomial prod_j (1 + x^(lambda_j)); 1 for the empty partition."""
    result = intpoly.ONE
    for part, m in multiplicities(p).items():
        result = intpoly.mul(result, cyclotomic.binomial_power(part, m))
    return result


def den_star(n: int, pclass: PartitionClass) -> dict[int, int]:
    """Unreduced common denominator as a binomial product {i: floor(n/i)}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return {i: n // i for i in allowed_parts(pclass, n)}


def h_factored(n: int, pclass: PartitionClass, m: Mapping[int, int]) -> dict[int, int]:
    """Cofactor den*/sp(lambda) as a binomial product {i: floor(n/i) - m_i}.

    The exponents are nonnegative for any genuine partition of n, since
    at most floor(n/i) parts can equal i; anything else is rejected.
    """
    weight = 0
    for part, mult in m.items():
        if mult < 1 or not pclass.allows(part):
            raise InvalidPartitionError(f"part {part} with multiplicity {mult}")
        weight += part * mult
    if weight != n:
        raise InvalidPartitionError(f"parts sum to {weight}, not {n}")
    out = {}
    for i in allowed_parts(pclass, n):
        e = n // i - m.get(i, 0)
        if e < 0:
            raise InvalidPartitionError(f"multiplicity of {i} exceeds floor(n/i)")
        if e:
            out[i] = e
    return out


def g_exponent_ordinary(n: int, d: int) -> int:
    """Exponent of Phi_{2d} in G(n,x): sum of floor(n/(d*j)) over odd j > 1."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    total = 0
    j = 3
    while d * j <= n:
        total += n // (d * j)
        j += 2
    return total


def big_g(n: int, pclass: PartitionClass, engine: str = "closed") -> dict[int, int]:
    """Common divisor of all cofactors, as a cyclotomic exponent vector.

    engine="closed" uses per-class exponent formulas: for ordinary and
    odd partitions the exponent of Phi_{2d} is sum_{j>1 odd} floor(n/dj)
    (d odd in the odd class); for ternary the exponent of Phi_{2*3^a} is
    sum_{k>a} floor(n/3^k); the binary G is identically 1 because the
    factors 1+x^(2^k) are pairwise coprime irreducibles and each has a
    partition avoiding it.  engine="oracle" takes the entrywise minimum
    over every enumerated cofactor instead.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return {}
    if engine == "oracle":
        return cyclotomic.min_exponents(
            h_factored(n, pclass, multiplicities(p))
            for p in enumerate_partitions(n, pclass)
        )
    if engine != "closed":
        raise ValueError(f"unknown engine {engine!r}")
    out: dict[int, int] = {}
    if pclass in (PartitionClass.ORDINARY, PartitionClass.ODD):
        step = 2 if pclass is PartitionClass.ODD else 1
        for d in range(1, n + 1, step):
            e = g_exponent_ordinary(n, d)
            if e:
                out[d] = e
    elif pclass is PartitionClass.TERNARY:
        d = 1
        while 3 * d <= n:
            e = 0
            k = 3 * d
            while k <= n:
                e += n // k
                k *= 3
            if e:
                out[d] = e
            d *= 3
    # binary: empty vector, G = 1
    return out


def num_star(n: int, pclass: PartitionClass, engine: str = "dp") -> IntPoly:
    """Unreduced numerator sum of the cofactors h_lambda."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return intpoly.ONE
    if engine == "dp":
        return _num_star_dp(n, pclass)
    if engine == "enumerate":
        return _num_star_enumerate(n, pclass)
    raise ValueError(f"unknown engine {engine!r}")


def _num_star_dp(n: int, pclass: PartitionClass) -> IntPoly:
    """Dynamic program sharing subsums across partitions.

    Processing allowed parts one at a time, table[r] is the sum of
    prod (1+x^i)^(e_i - m_i) over multiplicity choices for the parts
    seen so far with total weight r.  A part of size i at multiplicity
    m contributes the factor (1+x^i)^(e_i - m), including m = 0, so the
    untouched-part case needs no special handling.  After all parts,
    table[n] is num*.
    """
    table: list[IntPoly | None] = [intpoly.ONE] + [None] * n
    for i in allowed_parts(pclass, n):
        cap = n // i
        new: list[IntPoly | None] = [None] * (n + 1)
        for r in range(n + 1):
            acc: IntPoly | None = None
            for m in range(0, min(cap, r // i) + 1):
                prev = table[r - i * m]
                if prev is None:
                    continue
                term = intpoly.mul(cyclotomic.binomial_power(i, cap - m), prev)
                acc = term if acc is None else intpoly.add(acc, term)
            new[r] = acc
        table = new
    result = table[n]
    assert result is not None  # part 1 is allowed in every class
    return result


def _num_star_enumerate(n: int, pclass: PartitionClass) -> IntPoly:
    """Streaming fold over the partition stream; the oracle engine."""
    total = intpoly.ZERO
    for p in enumerate_partitions(n, pclass):
        h = h_factored(n, pclass, multiplicities(p))
        total = intpoly.add(total, cyclotomic.expand_binomials(h))
    return total


@dataclass(frozen=True)
class ReducedPair:
    """num, den and G for one (n, class), den and G kept as Phi-products.

    Invariants: expand(g_cyclo) * num == num*, and g_cyclo + den_cyclo
    equals den* converted to cyclotomic exponents.  Treat the mappings
    as read-only; instances are shared through a cache.
    """

    n: int
    pclass: PartitionClass
    num: IntPoly
    den_cyclo: Mapping[int, int]
    g_cyclo: Mapping[int, int]

    def den_expanded(self) -> IntPoly:
        return cyclotomic.expand_cyclotomics(self.den_cyclo)

    def g_expanded(self) -> IntPoly:
        return cyclotomic.expand_cyclotomics(self.g_cyclo)


@lru_cache(maxsize=None)
def reduced_pair(n: int, pclass: PartitionClass, engine: str = "dp") -> ReducedPair:
    """The reduced pair num/den with the summand gcd G cancelled.

    num = num*/expand(G) by exact division (a nonzero remainder would be
    a pipeline bug and raises), den = den* minus G in exponent space.
    n = 0 returns the identity pair num 1, den 1, G 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ReducedPair(0, pclass, intpoly.ONE, {}, {})
    g = big_g(n, pclass)
    num = intpoly.exact_div(num_star(n, pclass, engine), cyclotomic.expand_cyclotomics(g))
    den = cyclotomic.sub_exponents(cyclotomic.to_cyclo_exponents(den_star(n, pclass)), g)
    return ReducedPair(n, pclass, num, den, g)


def sr_eval_rational(n: int, pclass: PartitionClass, x0) -> Fraction:
    """Exact value of sum over partitions of 1/sp(lambda, x0).

    Independent of the polynomial pipeline: each sp(lambda, x0) is
    evaluated as a Fraction and the reciprocals are summed directly.
    Must equal num(x0)/den(x0) of the reduced pair.
    """
    x0 = Fraction(x0)
    powers: dict[int, Fraction] = {}
    total = Fraction(0)
    for p in enumerate_partitions(n, pclass):
        value = Fraction(1)
        for part, m in multiplicities(p).items():
            if part not in powers:
                powers[part] = 1 + x0**part
            value *= powers[part] ** m
        if value == 0:
            raise PoleAtX0Error(f"sp({p}, {x0}) = 0")
        total += 1 / value
    return total


def t_direct(n: int) -> int:
    """Ternary numerator at x=1 as the direct sum of 2^(n - length).

    t(0) = 1 by the empty-partition convention.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(1 << (n - len(p)) for p in enumerate_partitions(n, PartitionClass.TERNARY))
