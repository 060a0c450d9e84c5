"""Totients, divisor counts of factorials, and the factorial growth ratio."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import floor, prod
from typing import Union

import numpy as np

SIEVE_LIMIT = 10**6
# 2 * phi(k)**2 must fit in int64.
_INT64_SAFE_KMAX = 2 * 10**9

RationalLike = Union[int, str, Fraction]


@lru_cache(maxsize=4)
def _spf_table(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    spf[rest] = rest
    return spf


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def factorize(k: int) -> dict[int, int]:
    if k < 1:
        raise ValueError("k must be positive")
    out: dict[int, int] = {}
    if k <= SIEVE_LIMIT:
        spf = _spf_table(SIEVE_LIMIT)
        while k > 1:
            p = int(spf[k])
            k //= p
            out[p] = out.get(p, 0) + 1
        return out
    p = 2
    while p * p <= k:
        while k % p == 0:
            k //= p
            out[p] = out.get(p, 0) + 1
        p += 1 if p == 2 else 2
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def totient(k: int) -> int:
    if k < 1:
        raise ValueError("totient is defined for k >= 1")
    result = k
    for p in factorize(k):
        result -= result // p
    return result


def totient_table(k_max: int) -> np.ndarray:
    """phi(0..k_max) by sieve; phi(0) is reported as 0."""
    phi = np.arange(k_max + 1, dtype=np.int64)
    for p in range(2, k_max + 1):
        if phi[p] == p:  # untouched, so p is prime
            phi[p::p] -= phi[p::p] // p
    return phi


@dataclass
class TotientBoundScan:
    """Outcome of checking 2*phi(k)**2 > k for 1 <= k <= k_max."""

    k_max: int
    violations: list[int] = field(default_factory=list)  # 2*phi^2 < k
    boundary: list[int] = field(default_factory=list)  # 2*phi^2 == k

    @property
    def failures(self) -> list[int]:
        return sorted(self.violations + self.boundary)


def totient_bound_check(k_max: int) -> TotientBoundScan:
    """Exact integer scan of phi(k) > sqrt(k/2).

    k = 2 meets the bound with equality and is reported under `boundary`.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if k_max > _INT64_SAFE_KMAX:
        raise ValueError(f"k_max above {_INT64_SAFE_KMAX} is not supported")
    phi = totient_table(k_max)[1:]
    ks = np.arange(1, k_max + 1, dtype=np.int64)
    lhs = 2 * phi * phi
    return TotientBoundScan(
        k_max,
        violations=(ks[lhs < ks]).tolist(),
        boundary=(ks[lhs == ks]).tolist(),
    )


@dataclass(frozen=True)
class FactorialFactorization:
    n: int
    exponents: dict[int, int]  # prime -> exponent, increasing primes

    def value(self) -> int:
        return prod(p**e for p, e in self.exponents.items())

    def divisor_count(self) -> int:
        return prod(e + 1 for e in self.exponents.values())


def legendre_exponent(n: int, p: int) -> int:
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return e


def factorial_factorization(n: int) -> FactorialFactorization:
    if n < 0:
        raise ValueError("n must be non-negative")
    return FactorialFactorization(n, {p: legendre_exponent(n, p) for p in primes_upto(n)})


def divisor_count_factorial(n: int) -> int:
    return factorial_factorization(n).divisor_count()


def _positive_rational(x: RationalLike, name: str) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{name} must be a rational number, got {x!r}") from exc


def growth_ratio(a: RationalLike, c: RationalLike, k: int) -> Fraction:
    """a**floor(c*k) / ((k+1) * d(k!)) as an exact fraction.

    The exponent is rounded down so the power stays exact for rational a.
    """
    a = _positive_rational(a, "a")
    c = _positive_rational(c, "c")
    if a <= 1:
        raise ValueError("a must be > 1")
    if c <= 0:
        raise ValueError("c must be > 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    return a ** floor(c * k) / ((k + 1) * divisor_count_factorial(k))


@dataclass
class GrowthTable:
    a: Fraction
    c: Fraction
    rows: list[tuple[int, Fraction]]

    @property
    def decreases(self) -> list[int]:
        """Indices k where ratio(k) < ratio(k-1)."""
        return [k1 for (_, r0), (k1, r1) in zip(self.rows, self.rows[1:]) if r1 < r0]

    @property
    def turning_index(self) -> int:
        """First k from which the ratio strictly increases to the end of the table."""
        tail_start = self.rows[0][0]
        for (_, r0), (k1, r1) in zip(self.rows, self.rows[1:]):
            if r1 <= r0:
                tail_start = k1
        return tail_start


def growth_table(a: RationalLike, c: RationalLike, k_max: int) -> GrowthTable:
    rows = [(k, growth_ratio(a, c, k)) for k in range(1, k_max + 1)]
    return GrowthTable(Fraction(a), Fraction(c), rows)
