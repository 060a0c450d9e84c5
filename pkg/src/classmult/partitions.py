"""Integer partitions as cycle types of permutations.

Everything here is exact: centralizer orders and class sizes are Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from math import factorial
from typing import Iterable, Iterator, Literal

Parity = Literal["even", "odd"]


@dataclass(frozen=True, slots=True)
class Partition:
    """Weakly decreasing tuple of positive parts. Build with make_partition."""

    parts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"partition parts must be integers, got {p!r}")
        if p <= 0:
            raise ValueError(f"partition parts must be positive, got {p}")
    return Partition(tuple(sorted(parts, reverse=True)))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of n once, in reverse-lexicographic order.

    Starts at (n) and ends at (1,...,1). Iterative, constant work per step
    amortised (Zoghbi-Stojmenovic descent).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield Partition(())
        return
    # 1-based working array; positions beyond m hold 1s.
    x = [1] * (n + 1)
    x[1] = n
    m = 1  # number of parts
    h = 1  # index of the last part > 1
    yield Partition((n,))
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield Partition(tuple(x[1 : m + 1]))


def part_counts(lam: Partition) -> dict[int, int]:
    """Map part value i -> m_i, the number of parts equal to i."""
    return {i: len(list(g)) for i, g in groupby(lam.parts)}


def centralizer_order(lam: Partition) -> int:
    """Order of the centralizer in S_n of a permutation of cycle type lam.

    prod_i i**m_i * m_i!
    """
    c = 1
    for i, m in part_counts(lam).items():
        c *= i**m * factorial(m)
    return c


def class_size_sym(lam: Partition) -> int:
    n = lam.size
    q, r = divmod(factorial(n), centralizer_order(lam))
    assert r == 0
    return q


def sign(lam: Partition) -> Parity:
    # A c-cycle is a product of c-1 transpositions.
    return "even" if (lam.size - lam.length) % 2 == 0 else "odd"


def prepend(lead: int, lam: Partition) -> Partition:
    """Return (lead, lam_1, lam_2, ...).

    When lead is strictly larger than lam_1 the new part is a singleton, so
    the centralizer order gets multiplied by exactly lead; that identity is
    checked here.
    """
    if not isinstance(lead, int) or lead <= 0:
        raise ValueError(f"leading part must be a positive integer, got {lead!r}")
    if lead < lam.first:
        raise ValueError(f"leading part {lead} is smaller than the first part {lam.first}")
    out = Partition((lead,) + lam.parts)
    if lead > lam.first:
        assert centralizer_order(out) == lead * centralizer_order(lam)
    return out
