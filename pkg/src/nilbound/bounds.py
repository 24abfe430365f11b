"""Exact integer arithmetic for the order bounds.

Everything here is pure big-integer / exact-rational arithmetic.  The central
object is the composition score: a composition (a_1, ..., a_c) of k scores

    T(a) = sum_i  a_i * (1 + s_i + s_i^2 + ... + s_i^(i-1)),   s_i = a_1 + ... + a_{i-1},

always evaluated as the geometric *sum* so that s_i = 0 contributes 1 and
s_i = 1 contributes i.  The maximum of T over all compositions of k into c
non-negative parts is the upper bound on the log_p-order of a nilpotent
transitive group of degree p^k and class at most c.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of non-negative integers with their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.parts):
            raise ValueError("parts must be non-negative")

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)


def _geometric_sum(s: int, length: int) -> int:
    """1 + s + ... + s^(length-1), with the empty sum equal to 0."""
    if s == 0:
        return 1 if length >= 1 else 0
    if s == 1:
        return length
    return (s**length - 1) // (s - 1)


def composition_value(a: Composition | tuple[int, ...]) -> int:
    """The composition score T(a)."""
    parts = a.parts if isinstance(a, Composition) else tuple(a)
    total = 0
    prefix = 0
    for i, part in enumerate(parts, start=1):
        total += part * _geometric_sum(prefix, i)
        prefix += part
    return total


def compositions(k: int, c: int) -> Iterator[tuple[int, ...]]:
    """All compositions of k into c non-negative parts, lexicographically."""
    if c == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, c - 1):
            yield (first, *rest)


@functools.lru_cache(maxsize=None)
def _maximize(k: int, c: int) -> tuple[int, tuple[int, ...]]:
    best = -1
    best_parts: tuple[int, ...] = ()
    for parts in compositions(k, c):
        value = composition_value(parts)
        if value > best:
            best = value
            best_parts = parts
    return best, best_parts


def f_upper(k: int, c: int) -> int:
    """Exact maximum of the composition score over compositions of k into c
    non-negative parts."""
    if k < 1 or c < 1:
        raise ValueError("k and c must be positive")
    return _maximize(k, c)[0]


def best_composition(k: int, c: int) -> Composition:
    """The lexicographically least composition achieving f_upper(k, c)."""
    if k < 1 or c < 1:
        raise ValueError("k and c must be positive")
    return Composition(_maximize(k, c)[1])


def f_upper_dp(k: int, c: int) -> int:
    """Prefix-sum dynamic program for f_upper; value only.

    State (i, s) is the best score over the first i parts summing to s; the
    transition adds part t with score t * geometric_sum(s - t, i).
    """
    if k < 1 or c < 1:
        raise ValueError("k and c must be positive")
    neg = -1
    prev = [0] + [neg] * k
    for i in range(1, c + 1):
        cur = [neg] * (k + 1)
        for s in range(k + 1):
            best = neg
            for t in range(s + 1):
                base = prev[s - t]
                if base < 0:
                    continue
                value = base + t * _geometric_sum(s - t, i)
                if value > best:
                    best = value
            cur[s] = best
        prev = cur
    return prev[k]


_TABLE1 = {
    # c -> residue -> polynomial coefficients (constant first), exact rationals
    3: {
        0: (Fraction(0), Fraction(1), Fraction(1, 3), Fraction(4, 27)),
        1: (Fraction(-10, 27), Fraction(8, 9), Fraction(1, 3), Fraction(4, 27)),
        2: (Fraction(-8, 27), Fraction(8, 9), Fraction(1, 3), Fraction(4, 27)),
    },
    4: {
        0: (Fraction(0), Fraction(1), Fraction(3, 8), Fraction(13, 64), Fraction(27, 256)),
        1: (Fraction(-117, 256), Fraction(53, 64), Fraction(41, 128), Fraction(13, 64), Fraction(27, 256)),
        2: (Fraction(-11, 16), Fraction(7, 16), Fraction(1, 8), Fraction(13, 64), Fraction(27, 256)),
        3: (Fraction(-77, 256), Fraction(57, 64), Fraction(37, 128), Fraction(13, 64), Fraction(27, 256)),
    },
}

# the two k values where the generic degree-4 polynomial does not apply
_TABLE1_EXCEPTIONS = {(4, 2): 5, (4, 6): 188}


def f_closed(k: int, c: int) -> int:
    """Closed-form value of the composition maximum for c <= 4."""
    if not 1 <= c <= 4:
        raise ValueError("closed forms cover 1 <= c <= 4 only")
    if k < 1:
        raise ValueError("k must be positive")
    if c == 1:
        return k
    if c == 2:
        return (k // 2) * ((k + 1) // 2) + k
    if (c, k) in _TABLE1_EXCEPTIONS:
        return _TABLE1_EXCEPTIONS[(c, k)]
    coeffs = _TABLE1[c][k % c]
    value = sum(coef * k**power for power, coef in enumerate(coeffs))
    if value.denominator != 1:
        raise ArithmeticError(f"table formula mismatch at k={k}, c={c}: {value}")
    return int(value)


def elementary_bound(k: int, c: int) -> int:
    """k * (1 + k + ... + k^(c-1)); equals c at k = 1."""
    if k < 1 or c < 1:
        raise ValueError("k and c must be positive")
    return k * _geometric_sum(k, c)


def class2_exponent(k: int) -> int:
    """Exact log_p of the maximum order at class <= 2: k + floor(k/2)*ceil(k/2)."""
    if k < 1:
        raise ValueError("k must be positive")
    return k + (k // 2) * ((k + 1) // 2)


def binomial_lower(k: int, c: int) -> int:
    """Wreath-witness lower bound (k/c) * C(k(c-1)/c, c-1); needs c | k."""
    if k < 1 or c < 1:
        raise ValueError("k and c must be positive")
    if k % c != 0:
        raise ValueError("divisibility required: c must divide k")
    return (k // c) * math.comb(k * (c - 1) // c, c - 1)


def asymptotic_coefficient(c: int) -> Fraction:
    """Leading coefficient (c-1)^(c-1) / c^c of the composition maximum,
    with 0^0 = 1 at c = 1."""
    if c < 1:
        raise ValueError("c must be positive")
    numerator = 1 if c == 1 else (c - 1) ** (c - 1)
    return Fraction(numerator, c**c)


def monomial_count(v: int, i: int, p: int) -> int:
    """Monomials in v variables of total degree i with every exponent <= p-1.

    Equals the coefficient of x^i in (1 + x + ... + x^(p-1))^v.
    """
    if v < 0 or i < 0:
        raise ValueError("v and i must be non-negative")
    coeffs = [1]
    for _ in range(v):
        nxt = [0] * (i + 1)
        for d, cur in enumerate(coeffs):
            if cur == 0:
                continue
            for e in range(min(p - 1, i - d) + 1):
                nxt[d + e] += cur
        coeffs = nxt[: i + 1]
    return coeffs[i] if i < len(coeffs) else 0


def prime_base(q: int) -> int:
    """The prime p with q = p^a, or raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            n = q
            while n % p == 0:
                n //= p
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p
    raise ValueError(f"{q} is not a prime power")


def combine_multiplicative(factors: Mapping[int, int]) -> int:
    """Combine per-prime-power exponents into one order.

    factors maps a prime power p^a to the exponent e = log_p of the maximal
    order at that degree; the result is the product of p^e over all factors.
    """
    total = 1
    seen_bases = set()
    for q in sorted(factors):
        p = prime_base(q)
        if p in seen_bases:
            raise ValueError(f"repeated prime base {p}")
        seen_bases.add(p)
        total *= p ** factors[q]
    return total


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one (p, k, c) triple."""

    p: int
    k: int
    c: int
    f_upper: int
    elementary: int
    class2_exact: int | None
    binomial_lower: int | None
    witness: Composition

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "c": self.c,
            "f_upper": self.f_upper,
            "elementary": self.elementary,
            "class2_exact": self.class2_exact,
            "binomial_lower": self.binomial_lower,
            "witness_composition": list(self.witness.parts),
            "provenance": {
                "f_upper": "composition maximum",
                "elementary": "point-stabilizer intersection bound",
                "class2_exact": "exact value for class <= 2",
                "binomial_lower": "wreath/polynomial witness",
            },
        }


def bound_report(p: int, k: int, c: int) -> BoundReport:
    """Assemble every applicable bound exponent for degree p^k, class <= c."""
    return BoundReport(
        p=p,
        k=k,
        c=c,
        f_upper=f_upper(k, c),
        elementary=elementary_bound(k, c),
        class2_exact=class2_exponent(k) if c >= 2 else None,
        binomial_lower=binomial_lower(k, c) if k % c == 0 else None,
        witness=best_composition(k, c),
    )


def fraction_json(x: Fraction) -> dict:
    """Serialize an exact rational as {"num": ..., "den": ...}."""
    return {"num": x.numerator, "den": x.denominator}
