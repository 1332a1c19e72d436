"""Exact univariate polynomial arithmetic over Python's arbitrary-precision ints.

A polynomial is a tuple of coefficients, index k holding the coefficient
of x^k, with no trailing zero; the zero polynomial is the empty tuple.
All operations are pure and exact.  Multiplication uses Kronecker
substitution (pack into one big integer, multiply, unpack balanced
digits), which is bit-identical to schoolbook convolution and much
faster once Python's integer multiplication kicks in.

The shape predicates (`is_unimodal`, `is_log_concave`) and the mod-p
irreducibility certificate live here as well because they are plain
coefficient-sequence checks.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

IntPoly = tuple[int, ...]

ZERO: IntPoly = ()
ONE: IntPoly = (1,)


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the remainder is nonzero."""


class NotMonicError(ValueError):
    """The modulus of a remainder computation is not monic."""


class NegativeCoefficientError(ValueError):
    """Log-concavity is only defined for nonnegative coefficient sequences."""


class BadPrimeError(ValueError):
    """The chosen prime divides the leading coefficient."""


def normalize(coeffs: Iterable[int]) -> IntPoly:
    """Strip trailing zeros; the zero polynomial becomes ()."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(a: Sequence[int]) -> int:
    """Degree of `a`; -1 marks the zero polynomial."""
    return len(a) - 1


def binomial(i: int) -> IntPoly:
    """The binomial 1 + x^i."""
    if i < 1:
        raise ValueError("exponent must be >= 1")
    return (1,) + (0,) * (i - 1) + (1,)


def add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return normalize(out)


def neg(a: Sequence[int]) -> IntPoly:
    return tuple(-c for c in a)


def sub(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    return add(a, neg(b))


def mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Exact product of two coefficient sequences."""
    if not a or not b:
        return ZERO
    if len(a) == 1:
        return normalize(a[0] * c for c in b)
    if len(b) == 1:
        return normalize(b[0] * c for c in a)
    # Kronecker substitution: evaluate at 2^bits with bits wide enough
    # that every product coefficient fits in a balanced digit.
    bound = max(abs(c) for c in a) * max(abs(c) for c in b) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    pa = _pack(a, bits)
    pb = _pack(b, bits)
    return _unpack(pa * pb, bits, len(a) + len(b) - 1)


def _pack(a: Sequence[int], bits: int) -> int:
    total = 0
    for k, c in enumerate(a):
        total += c << (bits * k)
    return total


def _unpack(packed: int, bits: int, ncoeffs: int) -> IntPoly:
    # Balanced digit extraction: digits d with |d| < 2^(bits-1) are
    # recovered exactly even when coefficients are negative.
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(ncoeffs):
        d = packed & mask
        if d >= half:
            d -= 1 << bits
        out.append(d)
        packed = (packed - d) >> bits
    return normalize(out)


def mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Reference O(n*m) convolution; `mul` must agree with it bit for bit."""
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return normalize(out)


def power(a: Sequence[int], e: int) -> IntPoly:
    """a**e by repeated squaring; a**0 is the constant 1."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    result = ONE
    base = normalize(a)
    while e:
        if e & 1:
            result = mul(result, base)
        base = mul(base, base)
        e >>= 1
    return result


def eval_at_int(a: Sequence[int], x0: int) -> int:
    """Exact Horner evaluation."""
    acc = 0
    for c in reversed(a):
        acc = acc * x0 + c
    return acc


def eval_at_rational(a: Sequence[int], x0: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x0 + c
    return acc


def exact_div(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """Quotient q with q*b == a, or NotDivisibleError.

    A nonzero remainder here always indicates a pipeline bug upstream:
    the callers only divide by factors they know divide exactly.
    """
    b = normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(normalize(a))
    if not a:
        return ZERO
    if len(a) < len(b):
        raise NotDivisibleError("degree of dividend below divisor")
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        if c == 0:
            continue
        if c % lead != 0:
            raise NotDivisibleError(f"coefficient {c} not divisible by leading {lead}")
        q[k] = c // lead
        for j, bj in enumerate(b):
            a[k + j] -= q[k] * bj
    if any(a):
        raise NotDivisibleError("nonzero remainder")
    return normalize(q)


def remainder_mod_monic(a: Sequence[int], m: Sequence[int]) -> IntPoly:
    """a mod m for monic m of degree >= 1, over the integers."""
    m = normalize(m)
    if len(m) < 2 or m[-1] != 1:
        raise NotMonicError("modulus must be monic of degree >= 1")
    r = list(normalize(a))
    dm = len(m) - 1
    for k in range(len(r) - 1, dm - 1, -1):
        c = r[k]
        if c == 0:
            continue
        r[k] = 0
        for j in range(dm):
            r[k - dm + j] -= c * m[j]
    return normalize(r[:dm])


def content(a: Sequence[int]) -> int:
    """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def primitive_part(a: Sequence[int]) -> IntPoly:
    """a divided by its content, leading coefficient made positive."""
    a = normalize(a)
    if not a:
        return ZERO
    g = content(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def _pseudo_rem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # Fraction-free remainder: repeatedly replace a by lc(b)*a - c*x^s*b.
    # Scaling per step differs from the textbook prem by an integer
    # factor, which the primitive-part step absorbs anyway.
    db = len(b) - 1
    lead = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        c = r[-1]
        r = [lead * x for x in r]
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def gcd_primitive(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    """gcd in Z[x] via content splitting and pseudo-remainder Euclid.

    The result has positive leading coefficient and carries the gcd of
    the input contents, so gcd of content-1 inputs has content 1.  This
    is the brute-force oracle against which the structured minimum-
    exponent gcd is validated; it is never on the production path.
    """
    a = normalize(a)
    b = normalize(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if not a:
        return _with_content(b)
    if not b:
        return _with_content(a)
    c = math.gcd(content(a), content(b))
    pa, pb = list(primitive_part(a)), list(primitive_part(b))
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _pseudo_rem(pa, pb)
        pa, pb = pb, list(primitive_part(r))
    return tuple(c * x for x in primitive_part(pa))


def _with_content(a: Sequence[int]) -> IntPoly:
    a = normalize(a)
    return tuple(-c for c in a) if a[-1] < 0 else a


def is_unimodal(a: Sequence[int]) -> bool:
    """True when the coefficients weakly rise and then weakly fall."""
    i = 0
    while i + 1 < len(a) and a[i] <= a[i + 1]:
        i += 1
    while i + 1 < len(a) and a[i] >= a[i + 1]:
        i += 1
    return i + 1 >= len(a)


def is_log_concave(a: Sequence[int]) -> tuple[bool, int | None]:
    """(True, None) or (False, i) at the first internal index with a_i^2 < a_{i-1}a_{i+1}.

    Only defined for nonnegative sequences; signed input is a hard error
    rather than False, so a bug upstream cannot masquerade as a shape
    counterexample.
    """
    if any(c < 0 for c in a):
        raise NegativeCoefficientError("log-concavity needs nonnegative coefficients")
    for i in range(1, len(a) - 1):
        if a[i] * a[i] < a[i - 1] * a[i + 1]:
            return False, i
    return True, None


def even_odd_split(a: Sequence[int]) -> tuple[IntPoly, IntPoly]:
    """Split into even-exponent and odd-exponent parts; they sum back to a."""
    even = [c if k % 2 == 0 else 0 for k, c in enumerate(a)]
    odd = [c if k % 2 == 1 else 0 for k, c in enumerate(a)]
    return normalize(even), normalize(odd)


class IrreducibilityStatus(Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    INCONCLUSIVE = "inconclusive"


def irreducible_mod_p(a: Sequence[int], p: int) -> IrreducibilityStatus:
    """Rabin irreducibility certificate for the primitive part of a, mod p.

    IRREDUCIBLE proves the primitive part is irreducible over the
    rationals (the reduction keeps the degree because p does not divide
    the leading coefficient).  REDUCIBLE only speaks about the
    reduction mod p and proves nothing over the integers.
    """
    pp = primitive_part(a)
    if pp and pp[-1] % p == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient")
    if len(pp) <= 1:
        return IrreducibilityStatus.INCONCLUSIVE
    f = [c % p for c in pp]
    k = len(f) - 1
    if k == 0:
        return IrreducibilityStatus.INCONCLUSIVE
    x = [0, 1]
    # x^(p^k) == x mod f, and gcd(x^(p^(k/q)) - x, f) == 1 for prime q | k.
    if _gf_powmod(x, p**k, f, p) != _gf_mod(x, f, p):
        return IrreducibilityStatus.REDUCIBLE
    for q in _prime_divisors(k):
        w = _gf_sub(_gf_powmod(x, p ** (k // q), f, p), _gf_mod(x, f, p), p)
        if len(_gf_gcd(w, f, p)) != 1:
            return IrreducibilityStatus.REDUCIBLE
    return IrreducibilityStatus.IRREDUCIBLE


def _prime_divisors(k: int) -> list[int]:
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


# Minimal GF(p)[x] kit for the Rabin test: lists of ints in [0, p),
# trailing zeros stripped, [] the zero polynomial.


def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    r = [c % p for c in a]
    inv_lead = pow(f[-1], p - 2, p)
    df = len(f) - 1
    for k in range(len(r) - 1, df - 1, -1):
        c = r[k] * inv_lead % p
        if c == 0:
            continue
        for j in range(df + 1):
            r[k - df + j] = (r[k - df + j] - c * f[j]) % p
    return _gf_trim(r[:df])


def _gf_mulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    return _gf_mod(mul(a, b), f, p)


def _gf_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _gf_mod(a, f, p)
    while e:
        if e & 1:
            result = _gf_mulmod(result, base, f, p)
        base = _gf_mulmod(base, base, f, p)
        e >>= 1
    return result


def _gf_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for k, c in enumerate(a):
        out[k] = c
    for k, c in enumerate(b):
        out[k] = (out[k] - c) % p
    return _gf_trim(out)


def _gf_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _gf_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a
