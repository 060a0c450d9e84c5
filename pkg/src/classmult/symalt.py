"""Conjugacy classes of S_n and A_n read off from partitions, and the
class-size multiplicity statistic."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Any, Iterable, Literal, Optional

from .partitions import (
    Partition,
    centralizer_order,
    enumerate_partitions,
    sign,
)

GroupKind = Literal["sym", "alt"]


@dataclass(frozen=True)
class ClassRecord:
    group_tag: str
    rep: Any  # Partition for sym/alt, image tuple for oracle groups
    class_size: int
    split_label: Optional[Literal["first", "second"]] = None


@dataclass(frozen=True)
class MultiplicityReport:
    group_tag: str
    histogram: dict[int, int]  # ascending by size
    max_multiplicity: int
    argmax_sizes: list[int] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return sum(self.histogram.values())

    @property
    def group_order(self) -> int:
        return sum(s * c for s, c in self.histogram.items())

    def same_statistics(self, other: "MultiplicityReport") -> bool:
        """Equal histograms, m and argmax, ignoring the group tag."""
        return (
            list(self.histogram.items()) == list(other.histogram.items())
            and self.max_multiplicity == other.max_multiplicity
            and self.argmax_sizes == other.argmax_sizes
        )


def report_from_sizes(group_tag: str, sizes: Iterable[int]) -> MultiplicityReport:
    counts = Counter(sizes)
    histogram = dict(sorted(counts.items()))
    m = max(histogram.values(), default=0)
    argmax = [s for s, c in histogram.items() if c == m]
    return MultiplicityReport(group_tag, histogram, m, argmax)


def merge_reports(group_tag: str, reports: Iterable[MultiplicityReport]) -> MultiplicityReport:
    """Combine partial histograms (e.g. from parallel workers)."""
    total: Counter[int] = Counter()
    for r in reports:
        total.update(r.histogram)
    return report_from_sizes(group_tag, total.elements())


def _require_even(lam: Partition) -> None:
    if sign(lam) != "even":
        raise ValueError(f"{lam} is an odd cycle type; it is not a class of A_n")


def splits_in_alt(lam: Partition) -> bool:
    """True iff the S_n class of lam breaks into two A_n classes.

    That happens exactly when the S_n centralizer already lies in A_n, i.e.
    all parts are odd and pairwise distinct. For n <= 1, A_n = S_n and
    nothing splits.
    """
    _require_even(lam)
    if lam.size <= 1:
        return False
    parts = lam.parts
    return all(p % 2 for p in parts) and len(set(parts)) == len(parts)


def alt_classes(lam: Partition) -> list[ClassRecord]:
    _require_even(lam)
    n = lam.size
    tag = f"alt {n}"
    size = factorial(n) // centralizer_order(lam)
    if splits_in_alt(lam):
        half = size // 2
        return [
            ClassRecord(tag, lam, half, "first"),
            ClassRecord(tag, lam, half, "second"),
        ]
    return [ClassRecord(tag, lam, size)]


def class_sizes(kind: GroupKind, n: int) -> Iterable[int]:
    """Every class size of S_n or A_n, one entry per class.

    alt 0..2 are treated as the trivial group.
    """
    if kind not in ("sym", "alt"):
        raise ValueError(f"unknown group kind {kind!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind == "alt" and n <= 2:
        yield 1
        return
    nfact = factorial(n)
    for lam in enumerate_partitions(n):
        if kind == "sym":
            yield nfact // centralizer_order(lam)
        elif sign(lam) == "even":
            for rec in alt_classes(lam):
                yield rec.class_size


def multiplicity_report(kind: GroupKind, n: int) -> MultiplicityReport:
    return report_from_sizes(f"{kind} {n}", class_sizes(kind, n))


def group_order(kind: GroupKind, n: int) -> int:
    if kind == "sym" or n < 2:
        return factorial(n)
    return factorial(n) // 2
