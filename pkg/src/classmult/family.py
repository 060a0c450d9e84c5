"""Explicit families of even partitions of n sharing one centralizer order.

Each family member is built from k blocks. Block i (1-based) is one of the
triples (10,9,1) or (15,3,2), scaled by 21**(i-1). Both triples sum to 20 and
multiply to 90, so every word of block choices gives a partition of
21**k - 1 with centralizer order 90**k * 21**(3k(k-1)/2). Prepending one
large part turns 2**k such partitions into even cycle types of a fixed n, none
of which splits in A_n, so A_n has at least 2**k classes of one size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from math import factorial, prod
from typing import Literal, Optional

from .partitions import Partition, centralizer_order, prepend, sign
from .symalt import ClassRecord

Branch = Literal["P", "P_prime"]


class BlockChoice(enum.Enum):
    A = (10, 9, 1)
    B = (15, 3, 2)

    def __lt__(self, other: "BlockChoice") -> bool:
        return self.name < other.name


BLOCK_SUM = 20
BLOCK_PRODUCT = 90
SCALE = 21


class BelowThresholdError(ValueError):
    """n is too small (or of the wrong parity) for the requested family."""

    def __init__(self, n: int, M: int, params: "FamilyParams"):
        self.n = n
        self.M = M
        self.params = params
        need = params.min_even_n if n % 2 == 0 else params.min_odd_n
        self.minimal_n = need
        super().__init__(
            f"n={n} is below the threshold for M={M} (k={params.k}): "
            f"{'even' if n % 2 == 0 else 'odd'} n must be >= {need} "
            f"(even threshold {params.min_even_n}, odd threshold {params.min_odd_n})"
        )


@dataclass(frozen=True)
class FamilyMember:
    """choices[0] is block 1 (unscaled), choices[-1] the most scaled block."""

    choices: tuple[BlockChoice, ...]
    partition: Partition
    certified_centralizer: int

    @property
    def word(self) -> str:
        return "".join(c.name for c in self.choices)


@dataclass(frozen=True)
class FamilyParams:
    M: int
    k: int
    min_even_n: int
    min_odd_n: int

    @property
    def N(self) -> int:
        """A single bound: every n >= N is covered whatever its parity."""
        return max(self.min_even_n, self.min_odd_n)


def choose_k(M: int) -> int:
    """Smallest odd k with 2**k > M."""
    if M < 1:
        raise ValueError("M must be a positive integer")
    k = 1
    while 2**k <= M:
        k += 2
    return k


def _require_odd_k(k: int) -> None:
    if not isinstance(k, int) or k < 1 or k % 2 == 0:
        raise ValueError(f"k must be an odd positive integer, got {k!r}")


def thresholds(k: int) -> tuple[int, int]:
    """(min_even_n, min_odd_n): least n of each parity strictly above the bounds."""
    _require_odd_k(k)
    even_bound = SCALE**k + 15 * SCALE ** (k - 1)
    odd_bound = SCALE ** (k + 1) + 15 * SCALE**k
    min_even = even_bound + 1 + (even_bound + 1) % 2
    min_odd = odd_bound + 1 + (odd_bound) % 2
    return min_even, min_odd


def family_params(M: int) -> FamilyParams:
    k = choose_k(M)
    return FamilyParams(M, k, *thresholds(k))


def closed_form_size(length: int) -> int:
    return SCALE**length - 1


def closed_form_centralizer(length: int) -> int:
    return BLOCK_PRODUCT**length * SCALE ** (3 * length * (length - 1) // 2)


def member_from_word(choices: tuple[BlockChoice, ...]) -> FamilyMember:
    parts = []
    for i, choice in enumerate(choices):
        parts.extend(SCALE**i * v for v in choice.value)
    # Blocks never interleave: 15 * 21**i < 21**(i+1).
    parts.sort(reverse=True)
    lam = Partition(tuple(parts))
    return FamilyMember(tuple(choices), lam, prod(parts))


def build_family(k: int, branch: Branch = "P") -> list[FamilyMember]:
    """All members of P (k blocks) or P' (k+1 blocks), ordered by block word."""
    _require_odd_k(k)
    if branch not in ("P", "P_prime"):
        raise ValueError(f"unknown branch {branch!r}")
    length = k if branch == "P" else k + 1
    return [member_from_word(w) for w in product(sorted(BlockChoice), repeat=length)]


def equal_class_family(n: int, M: int) -> list[ClassRecord]:
    """At least M+1 classes of A_n with one common size.

    Even n uses P, odd n uses P'.
    """
    params = family_params(M)
    if n % 2 == 0:
        if n < params.min_even_n:
            raise BelowThresholdError(n, M, params)
        members = build_family(params.k, "P")
    else:
        if n < params.min_odd_n:
            raise BelowThresholdError(n, M, params)
        members = build_family(params.k, "P_prime")
    nfact = factorial(n)
    tag = f"alt {n}"
    out = []
    for mem in members:
        lead = n - mem.partition.size
        lam = prepend(lead, mem.partition)
        c = lead * mem.certified_centralizer
        out.append(ClassRecord(tag, lam, nfact // c))
    return out


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    member: Optional[int] = None
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, name: str, passed: bool, member: Optional[int] = None, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), member, detail))


def verify_family(members: list[FamilyMember], n: Optional[int] = None) -> VerificationReport:
    """Re-derive every claimed property of a family without trusting it.

    Centralizers come from the general part-count formula, not the product
    of parts. With n given, the extended partitions (n - |lam|, lam) are
    checked as well: strict leading part, even sign, equal A_n class size.
    """
    rep = VerificationReport()
    if not members:
        rep.add("nonempty", False, detail="no members")
        return rep
    sizes, cents = [], []
    for idx, mem in enumerate(members):
        lam = mem.partition
        length = len(mem.choices)
        size = sum(lam.parts)
        rep.add("size", size == closed_form_size(length), idx, f"{size} vs {closed_form_size(length)}")
        expected_parts = sorted(
            (SCALE**i * v for i, ch in enumerate(mem.choices) for v in ch.value), reverse=True
        )
        rep.add("parts_match_word", list(lam.parts) == expected_parts, idx)
        rep.add("distinct_parts", len(set(lam.parts)) == len(lam.parts), idx)
        rep.add("has_even_part", any(p % 2 == 0 for p in lam.parts), idx)
        c = centralizer_order(lam)
        rep.add("centralizer_certified", c == mem.certified_centralizer, idx,
                f"{c} vs {mem.certified_centralizer}")
        rep.add("centralizer_closed_form", c == closed_form_centralizer(length), idx)
        expected_sign = "odd" if (3 * length) % 2 else "even"
        rep.add("sign", sign(lam) == expected_sign, idx, sign(lam))
        sizes.append(size)
        cents.append(c)
    rep.add("equal_sizes", len(set(sizes)) == 1)
    rep.add("equal_centralizers", len(set(cents)) == 1)
    rep.add("pairwise_distinct", len({m.partition for m in members}) == len(members))

    if n is not None:
        nfact = factorial(n)
        class_sizes = []
        for idx, mem in enumerate(members):
            lam = mem.partition
            lead = n - lam.size
            strict = lead > lam.first
            rep.add("strict_leading_part", strict, idx, f"lead={lead}")
            if not strict:
                continue
            ext = Partition((lead,) + lam.parts)
            rep.add("extended_even", sign(ext) == "even", idx)
            c_ext = centralizer_order(ext)
            rep.add("prepend_identity", c_ext == lead * centralizer_order(lam), idx)
            class_sizes.append(nfact // c_ext)
        rep.add("equal_class_sizes", len(class_sizes) == len(members) and len(set(class_sizes)) == 1)
    return rep
