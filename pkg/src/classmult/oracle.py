"""Brute-force permutation groups: explicit closure and conjugacy classes.

Permutations are tuples of images on 0..d-1. Products apply left to right:
mul(p, q) sends i to q[p[i]]. Deliberately shares no code with the
partition formulas it is used to check.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

from .symalt import ClassRecord, MultiplicityReport, report_from_sizes

Perm = tuple[int, ...]

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    def __init__(self, cap: int, reached: int):
        self.cap = cap
        self.reached = reached
        super().__init__(f"group closure exceeded cap {cap} (reached {reached} elements)")


class GeneratorParseError(ValueError):
    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}")


def identity(d: int) -> Perm:
    return tuple(range(d))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def power(p: Perm, t: int) -> Perm:
    if t < 0:
        p, t = inverse(p), -t
    result = identity(len(p))
    base = p
    while t:
        if t & 1:
            result = mul(result, base)
        base = mul(base, base)
        t >>= 1
    return result


def perm_order(p: Perm) -> int:
    seen = [False] * len(p)
    order = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        c, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            c += 1
        order = order * c // gcd(order, c)
    return order


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


def from_cycles(cycles: Iterable[Sequence[int]], d: int) -> Perm:
    img = list(range(d))
    seen: set[int] = set()
    for cyc in cycles:
        cyc = list(cyc)
        for a in cyc:
            if a in seen:
                raise ValueError(f"point {a} appears twice")
            if not 0 <= a < d:
                raise ValueError(f"point {a} outside 0..{d - 1}")
            seen.add(a)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def to_cycles(p: Perm) -> str:
    """Cycle notation without fixed points; the identity is '()'."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


_CYCLE_LINE = re.compile(r"^\s*(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)+$")
_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_generators(text: str, degree: Optional[int] = None) -> tuple[list[Perm], int]:
    """Parse one permutation per line in cycle notation, e.g. '(0 1)(2 3)'.

    Blank lines and '#' comments are skipped. The degree defaults to one
    more than the largest point mentioned.
    """
    raw: list[tuple[int, list[list[int]]]] = []
    top = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if not _CYCLE_LINE.match(line):
            raise GeneratorParseError(lineno, f"malformed cycle notation {line!r}")
        cycles = [[int(t) for t in m.split()] for m in _CYCLE.findall(line)]
        for cyc in cycles:
            if cyc:
                top = max(top, max(cyc))
        raw.append((lineno, cycles))
    d = top + 1 if degree is None else degree
    if d < top + 1:
        raise GeneratorParseError(0, f"degree {d} too small for point {top}")
    gens = []
    for lineno, cycles in raw:
        try:
            gens.append(from_cycles([c for c in cycles if c], d))
        except ValueError as exc:
            raise GeneratorParseError(lineno, str(exc)) from None
    return gens, d


@dataclass
class PermGroup:
    degree: int
    generators: list[Perm]
    elements: list[Perm]  # sorted lexicographically
    name: str = "oracle"
    _index: dict[Perm, int] = field(default_factory=dict, repr=False)
    _classes: Optional[list[list[int]]] = field(default=None, repr=False)
    _class_of: Optional[list[int]] = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, x: Perm) -> int:
        if not self._index:
            self._index = {g: i for i, g in enumerate(self.elements)}
        try:
            return self._index[tuple(x)]
        except KeyError:
            raise ValueError(f"{to_cycles(tuple(x))} is not an element of {self.name}") from None

    def __contains__(self, x: Perm) -> bool:
        try:
            self.index(x)
        except ValueError:
            return False
        return True


def close_group(
    gens: Sequence[Perm],
    cap: int = DEFAULT_CAP,
    degree: Optional[int] = None,
    name: str = "oracle",
) -> PermGroup:
    """Breadth-first closure of the generators under right multiplication."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            raise ValueError("degree is required when there are no generators")
        degree = len(gens[0])
    for g in gens:
        if len(g) != degree or not is_permutation(g):
            raise ValueError(f"generator {g} is not a permutation of degree {degree}")
    e = identity(degree)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(g[i] for i in x)  # mul(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(cap, len(seen))
                queue.append(y)
    return PermGroup(degree, gens, sorted(seen), name)


def _class_partition(G: PermGroup) -> tuple[list[list[int]], list[int]]:
    if G._classes is not None:
        return G._classes, G._class_of
    G.index(G.elements[0])  # builds the lookup table
    idx = G._index
    ginv = [(g, inverse(g)) for g in G.generators]
    class_of = [-1] * G.order
    classes: list[list[int]] = []
    for start in range(G.order):
        if class_of[start] >= 0:
            continue
        cid = len(classes)
        members = [start]
        class_of[start] = cid
        queue = deque([G.elements[start]])
        while queue:
            x = queue.popleft()
            for g, gi in ginv:
                # g^-1 x g
                y = tuple(g[x[j]] for j in gi)
                j = idx[y]
                if class_of[j] < 0:
                    class_of[j] = cid
                    members.append(j)
                    queue.append(y)
        members.sort()
        classes.append(members)
    G._classes, G._class_of = classes, class_of
    return classes, class_of


def conjugacy_classes(G: PermGroup) -> list[ClassRecord]:
    """Classes ordered by (size, smallest element); rep is the smallest element."""
    classes, _ = _class_partition(G)
    recs = [ClassRecord(G.name, G.elements[c[0]], len(c)) for c in classes]
    return sorted(recs, key=lambda r: (r.class_size, r.rep))


def class_members(G: PermGroup, x: Perm) -> list[Perm]:
    classes, class_of = _class_partition(G)
    return [G.elements[i] for i in classes[class_of[G.index(x)]]]


def multiplicity_report_oracle(G: PermGroup) -> MultiplicityReport:
    return report_from_sizes(G.name, (r.class_size for r in conjugacy_classes(G)))


def centralizer_order_of(G: PermGroup, x: Perm) -> int:
    classes, class_of = _class_partition(G)
    size = len(classes[class_of[G.index(x)]])
    return G.order // size


def centralizer_order_direct(G: PermGroup, x: Perm) -> int:
    """Count the elements commuting with x one by one."""
    x = tuple(x)
    G.index(x)
    return sum(1 for g in G.elements if mul(g, x) == mul(x, g))


@dataclass(frozen=True)
class PowerConjugacy:
    order: int
    conj_power_count: int
    equal_size_class_lower_bound: int


def power_conjugacy(G: PermGroup, x: Perm) -> PowerConjugacy:
    """How many generators of <x> are conjugate to x, and the resulting count
    of classes that all share the centralizer order of x."""
    x = tuple(x)
    _, class_of = _class_partition(G)
    cid = class_of[G.index(x)]
    n = perm_order(x)
    units = [t for t in range(1, n + 1) if gcd(t, n) == 1]
    count = sum(1 for t in units if class_of[G.index(power(x, t))] == cid)
    phi = len(units)
    return PowerConjugacy(n, count, -(-phi // count))


# Standard groups


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    gens: list[Perm] = []
    if n >= 2:
        gens = [from_cycles([[0, 1]], n), from_cycles([list(range(n))], n)]
    return close_group(gens, cap, degree=n, name=f"sym {n}")


def alternating_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    gens = [from_cycles([[0, 1, i]], n) for i in range(2, n)]
    return close_group(gens, cap, degree=n, name=f"alt {n}")


def cyclic_group(n: int) -> PermGroup:
    gens = [from_cycles([list(range(n))], n)] if n >= 2 else []
    return close_group(gens, degree=n, name=f"cyclic {n}")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def psl2_generators(p: int) -> list[Perm]:
    """x -> x+1 and x -> -1/x on the projective line; point p stands for infinity."""
    if not _is_prime(p) or p < 5:
        raise ValueError(f"psl2 needs a prime p >= 5, got {p}")
    inf = p
    shift = tuple((i + 1) % p for i in range(p)) + (inf,)
    inv = [0] * (p + 1)
    inv[0], inv[inf] = inf, 0
    for i in range(1, p):
        inv[i] = (-pow(i, -1, p)) % p
    return [shift, tuple(inv)]


def psl2_group(p: int, cap: int = DEFAULT_CAP) -> PermGroup:
    return close_group(psl2_generators(p), cap, degree=p + 1, name=f"psl2 {p}")
