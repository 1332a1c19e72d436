"""Cyclotomic polynomials and the exponent bookkeeping built on them.

Everything here trades on one divisibility fact: Phi_{2d} divides
1 + x^i exactly when i = d*j for odd j, and then exactly once.  Products
of binomials 1 + x^i therefore factor completely into polynomials
Phi_{2d}, and two structured representations carry the pipeline:

* a binomial product, a map i -> e_i standing for prod (1+x^i)^e_i;
* a cyclotomic exponent vector, a map d -> exponent of Phi_{2d}.

Root-of-unity reasoning stays symbolic throughout: divisibility by
Phi_{2d} is decided by exact integer remainders, never by evaluating at
complex points.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from typing import Iterable, Mapping

from . import intpoly
from .intpoly import IntPoly

BinomialProduct = Mapping[int, int]
CycloExponents = Mapping[int, int]


@lru_cache(maxsize=None)
def phi(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial.

    Built by exact division of x^m - 1 by Phi_d over the proper divisors
    d of m.  Memoized per process; the cache is safe under concurrent
    readers (lru_cache takes its own lock, and entries are immutable).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    num = (-1,) + (0,) * (m - 1) + (1,)
    for d in range(1, m):
        if m % d == 0:
            num = intpoly.exact_div(num, phi(d))
    return num


def binomial_cyclo_divides(d: int, i: int) -> bool:
    """Whether Phi_{2d} divides 1 + x^i (then always with multiplicity 1)."""
    if d < 1 or i < 1:
        raise ValueError("d and i must be >= 1")
    return i % d == 0 and (i // d) % 2 == 1


def phi_at_one(m: int) -> int:
    """Phi_m(1): p when m is a power of the prime p, else 1."""
    if m <= 1:
        raise ValueError("m must be > 1")
    p = _smallest_prime_factor(m)
    while m % p == 0:
        m //= p
    return p if m == 1 else 1


def phi_at_minus_one(m: int) -> int:
    """Phi_m(-1) for m > 2, by direct exact evaluation."""
    if m <= 2:
        raise ValueError("m must be > 2")
    return intpoly.eval_at_int(phi(m), -1)


def _smallest_prime_factor(m: int) -> int:
    if m % 2 == 0:
        return 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return f
        f += 2
    return m


@lru_cache(maxsize=None)
def binomial_power(i: int, e: int) -> IntPoly:
    """(1 + x^i)^e, cached; the expansion workhorse."""
    return intpoly.power(intpoly.binomial(i), e)


def expand_binomials(f: BinomialProduct) -> IntPoly:
    """Expand prod (1+x^i)^e_i; the empty product is 1."""
    result = intpoly.ONE
    for i in sorted(f):
        e = f[i]
        if e < 0:
            raise ValueError("negative exponent in binomial product")
        if e:
            result = intpoly.mul(result, binomial_power(i, e))
    return result


def expand_cyclotomics(c: CycloExponents) -> IntPoly:
    """Expand prod Phi_{2d}^e_d; the empty product is 1."""
    result = intpoly.ONE
    for d in sorted(c):
        e = c[d]
        if e < 0:
            raise ValueError("negative exponent in cyclotomic product")
        if e:
            result = intpoly.mul(result, intpoly.power(phi(2 * d), e))
    return result


def to_cyclo_exponents(f: BinomialProduct) -> dict[int, int]:
    """Full cyclotomic factorization of a binomial product.

    Each factor (1+x^i)^e contributes e to the exponent of Phi_{2d} for
    every divisor d of i with i/d odd; zero entries are omitted.
    """
    out: dict[int, int] = {}
    for i, e in f.items():
        if e == 0:
            continue
        for d in _divisors(i):
            if (i // d) % 2 == 1:
                out[d] = out.get(d, 0) + e
    return {d: e for d, e in out.items() if e}


def _divisors(i: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= i:
        if i % d == 0:
            small.append(d)
            if d != i // d:
                large.append(i // d)
        d += 1
    return small + large[::-1]


def min_exponents(fs: Iterable[BinomialProduct]) -> dict[int, int]:
    """Entrywise-minimum cyclotomic exponent vector: the gcd of the products.

    Because every input factors into the pairwise-coprime irreducibles
    Phi_{2d}, their gcd is exactly the minimum exponent per d.  The
    result stays in cyclotomic form; expand on demand.
    """
    vectors = [to_cyclo_exponents(f) for f in fs]
    if not vectors:
        raise ValueError("min_exponents of an empty collection")
    acc = vectors[0]
    for v in vectors[1:]:
        acc = {d: min(e, v[d]) for d, e in acc.items() if d in v}
        if not acc:
            break
    return {d: e for d, e in acc.items() if e}


def cyclo_degree(c: CycloExponents) -> int:
    """Degree of the expansion, via deg Phi_{2d} = totient(2d)."""
    return sum(e * _totient(2 * d) for d, e in c.items())


@lru_cache(maxsize=None)
def _totient(m: int) -> int:
    out = m
    for p in _prime_factors(m):
        out -= out // p
    return out


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def sub_exponents(a: CycloExponents, b: CycloExponents) -> dict[int, int]:
    """Entrywise a - b, dropping zeros; negative results are a pipeline bug."""
    out = dict(a)
    for d, e in b.items():
        r = out.get(d, 0) - e
        if r < 0:
            raise ArithmeticError(f"negative exponent at d={d}")
        if r == 0:
            out.pop(d, None)
        else:
            out[d] = r
    return out


def gcd_binomial_products_expanded(fs: Iterable[BinomialProduct]) -> IntPoly:
    """Oracle: fold intpoly.gcd_primitive over the expansions."""
    polys = [expand_binomials(f) for f in fs]
    if not polys:
        raise ValueError("gcd of an empty collection")
    return reduce(intpoly.gcd_primitive, polys)
