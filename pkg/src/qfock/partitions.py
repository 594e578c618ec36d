"""Integer partitions and their ``n``-abacus combinatorics.

Conventions used throughout the package:

* a node is a pair ``(row, col)``, both 1-indexed, English notation;
* the content of a node is ``col - row`` and its ``n``-residue is the
  content modulo ``n``;
* beta-numbers have charge 0: ``beta_i = lambda_i - i + 1`` so the empty
  partition is the bead set ``{0, -1, -2, ...}``;
* runner ``i`` of the abacus (``1 <= i <= n``) carries the positions
  congruent to ``i`` modulo ``n``, so runner ``n`` is residue 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby, product
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "MultiPartition",
    "BetaSequence",
    "AbacusConfig",
    "CoreCoords",
    "Ribbon",
    "parse_partition",
    "beta_numbers",
    "abacus",
    "n_core",
    "n_weight",
    "is_core",
    "core_coords",
    "core_from_coords",
    "n_quotient",
    "from_core_quotient",
    "n_sign",
    "n_sign_by_permutation",
    "residue",
    "addable_nodes",
    "removable_nodes",
    "addable_removable_nodes",
    "add_node",
    "remove_node",
    "skew_cells",
    "ribbon_of",
    "removable_ribbons",
    "addable_ribbons",
    "horizontal_ribbon_strips",
    "crystal_e",
    "crystal_f",
    "crystal_epsilon",
    "partitions_of",
    "multipartitions_of",
    "is_regular",
    "partition_key",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 1])
    Partition([3, 1, 1])
    >>> str(Partition([12, 4, 4, 3, 1, 1]))
    '[12,4^2,3,1^2]'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise ValueError(f"partition parts must be positive integers: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _make(cls, parts) -> "Partition":
        # trusted constructor: parts already positive and decreasing
        return tuple.__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from a decreasing sequence that may carry trailing zeros."""
        return cls(p for p in parts if p != 0)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-indexed), 0 past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition._make(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, p in enumerate(self, start=1):
            for c in range(1, p + 1):
                yield (r, c)

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment ``other ⊆ self``."""
        return len(other) <= len(self) and all(o <= s for o, s in zip(other, self))

    def __str__(self) -> str:
        chunks = []
        for value, group in groupby(self):
            k = len(list(group))
            chunks.append(str(value) if k == 1 else f"{value}^{k}")
        return "[" + ",".join(chunks) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def _repr_pretty_(self, p, cycle):  # pragma: no cover - IPython hook
        p.text(str(self))


EMPTY = Partition._make(())

MultiPartition = tuple  # n-tuple of Partition


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"[12,4,4,3,1,1]"`` or the exponent form ``"[12,4^2,3,1^2]"``."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = "[" + s[1:-1] + "]"
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must be bracketed, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    parts: list[int] = []
    for tok in body.split(","):
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad partition token {tok!r} in {text!r}")
        value, mult = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * mult)
    return Partition(p for p in parts if p)


def partition_key(lam: Partition) -> tuple:
    """Sort key of the total order used for display: size, then lexicographic."""
    return (sum(lam), tuple(lam))


# -- beta-numbers and the abacus ---------------------------------------------


@dataclass(frozen=True)
class BetaSequence:
    """The first ``len(window)`` beta-numbers; below the window the beads continue
    on every integer."""

    window: tuple[int, ...]
    offset: int

    def __iter__(self):
        return iter(self.window)


def beta_numbers(lam: Partition, count: int) -> BetaSequence:
    """The first ``count`` entries of ``(lam_1, lam_2 - 1, lam_3 - 2, ...)``."""
    if count < len(lam):
        raise ValueError(f"need at least {len(lam)} beta-numbers, got count={count}")
    window = tuple(lam.part(i) - i + 1 for i in range(1, count + 1))
    return BetaSequence(window, count)


def _bead_count(lam: Sequence[int], n: int, extra: int = 0) -> int:
    # a multiple of n with room for every bead that may move
    need = len(lam) + extra + 1
    return n * (-(-need // n))


def _beads(lam: Sequence[int], nbeads: int) -> list[int]:
    return [(lam[i] if i < len(lam) else 0) - i for i in range(nbeads)]


def _from_beads(beads: Iterable[int]) -> Partition:
    """Partition from a finite charge-0 bead window (all lower positions full)."""
    b = sorted(beads, reverse=True)
    return Partition._make(p for p in (x + i for i, x in enumerate(b)) if p > 0)


@dataclass(frozen=True)
class AbacusConfig:
    """Bead positions per runner; index ``c`` holds residue ``c`` (runner ``n`` is
    residue 0).  Every position below ``bottom`` is occupied."""

    n: int
    bottom: int
    runner_beads: tuple[tuple[int, ...], ...]

    def positions(self) -> list[int]:
        return sorted((p for r in self.runner_beads for p in r), reverse=True)

    def partition(self) -> Partition:
        return _from_beads(self.positions())

    def runner_partition(self, c: int) -> Partition:
        """Partition read off runner of residue ``c`` by counting gaps below each bead."""
        n = self.n
        lowest = self.bottom + ((c - self.bottom) % n)
        beads = sorted(self.runner_beads[c], reverse=True)
        m = len(beads)
        parts = [(b - lowest) // n - (m - 1 - j) for j, b in enumerate(beads)]
        return Partition._make(p for p in parts if p > 0)


def abacus(lam: Partition, n: int, nbeads: int | None = None) -> AbacusConfig:
    _check_n(n)
    if nbeads is None:
        nbeads = _bead_count(lam, n)
    if nbeads % n or nbeads < len(lam):
        raise ValueError("bead count must be a multiple of n and at least the length")
    runners: list[list[int]] = [[] for _ in range(n)]
    for p in _beads(lam, nbeads):
        runners[p % n].append(p)
    return AbacusConfig(n, 1 - nbeads, tuple(tuple(r) for r in runners))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


@lru_cache(maxsize=None)
def _core_cached(lam: Partition, n: int) -> Partition:
    nb = _bead_count(lam, n)
    bottom = 1 - nb
    counts = [0] * n
    for p in _beads(lam, nb):
        counts[p % n] += 1
    beads = []
    for c in range(n):
        start = bottom + ((c - bottom) % n)
        beads.extend(start + n * t for t in range(counts[c]))
    return _from_beads(beads)


def n_core(lam: Partition, n: int) -> Partition:
    """Slide every bead up its runner as far as it goes."""
    _check_n(n)
    return _core_cached(Partition._make(lam), n)


def n_weight(lam: Partition, n: int) -> int:
    return (sum(lam) - sum(n_core(lam, n))) // n


def is_core(lam: Partition, n: int) -> bool:
    return n_core(lam, n) == tuple(lam)


@dataclass(frozen=True)
class CoreCoords:
    """Integer ``n``-tuple ``(a_1, ..., a_n)`` with zero sum labelling an ``n``-core."""

    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != self.n or sum(self.a) != 0:
            raise ValueError(f"core coordinates must be {self.n} integers summing to 0: {self.a}")


def core_coords(tau: Partition, n: int) -> CoreCoords:
    """Runner ``i`` carries ``a_i`` more beads than in the flush abacus of ``∅``."""
    _check_n(n)
    if not is_core(tau, n):
        raise ValueError(f"{tau} is not a {n}-core")
    a = [0] * n
    for p in _beads(tau, _bead_count(tau, n)):
        if p > 0:
            a[(p - 1) % n] += 1
    occupied = set(_beads(tau, _bead_count(tau, n)))
    for p in range(1 - _bead_count(tau, n), 1):
        if p not in occupied:
            a[(p - 1) % n] -= 1
    return CoreCoords(n, tuple(a))


def core_from_coords(a: Sequence[int] | CoreCoords, n: int | None = None) -> Partition:
    if isinstance(a, CoreCoords):
        n, a = a.n, a.a
    a = tuple(a)
    if n is None:
        n = len(a)
    CoreCoords(n, a)
    bottom = min(i - n + n * a[i - 1] for i in range(1, n + 1)) - n
    beads = []
    for i in range(1, n + 1):
        top = i - n + n * a[i - 1]
        beads.extend(range(top, bottom - 1, -n))
    # pad so that every runner reaches the same floor
    return _from_beads(b for b in beads if b > bottom - n)


# -- quotients and signs -------------------------------------------------------


def _quotient_base(convention: Partition | None, lam: Partition, n: int) -> int:
    # residue of the runner that must carry the last quotient component
    tau = n_core(lam, n) if convention is None else convention
    return (tau[0] if tau else 0) % n


def n_quotient(lam: Partition, n: int, convention: Partition | None = None) -> tuple[Partition, ...]:
    """The ``n``-quotient, labelled so that ``convention + (n)`` has quotient
    ``(∅, ..., ∅, (1))``.  ``convention`` defaults to the ``n``-core of ``lam``."""
    _check_n(n)
    ab = abacus(lam, n)
    r = _quotient_base(convention, lam, n)
    return tuple(ab.runner_partition((r + 1 + j) % n) for j in range(n))


def from_core_quotient(core: Partition, quotient: Sequence[Partition], n: int,
                       convention: Partition | None = None) -> Partition:
    """Inverse of ``(n_core, n_quotient)``."""
    _check_n(n)
    if len(quotient) != n:
        raise ValueError(f"quotient must have {n} components")
    if not is_core(core, n):
        raise ValueError(f"{core} is not a {n}-core")
    r = ((convention if convention is not None else core) or (0,))[0] % n
    extra = sum(len(q) for q in quotient) + max((q[0] if q else 0) for q in quotient)
    nb = _bead_count(core, n, extra=n * extra)
    bottom = 1 - nb
    counts = [0] * n
    for p in _beads(core, nb):
        counts[p % n] += 1
    beads = []
    for j, q in enumerate(quotient):
        c = (r + 1 + j) % n
        m = counts[c]
        if len(q) > m:
            raise ValueError("quotient component longer than its runner")  # pragma: no cover
        lowest = bottom + ((c - bottom) % n)
        for t in range(m):
            part = q[t] if t < len(q) else 0
            beads.append(lowest + n * (part + m - 1 - t))
    return _from_beads(beads)


def _leg_between(occupied: set[int], lo: int, hi: int) -> int:
    return sum(1 for p in range(lo + 1, hi) if p in occupied)


def n_sign(lam: Partition, n: int, order: str = "top") -> int:
    """``(-1)^(total leg length)`` of a rim-hook peeling of ``lam`` down to its core.

    ``order`` picks which removable ribbon is peeled first (``"top"`` or
    ``"bottom"``); the sign does not depend on it.
    """
    _check_n(n)
    occupied = set(_beads(lam, _bead_count(lam, n)))
    total = 0
    while True:
        movable = sorted((p for p in occupied if p - n not in occupied and p - n >= min(occupied)),
                         reverse=(order == "top"))
        if not movable:
            break
        p = movable[0]
        total += _leg_between(occupied, p - n, p)
        occupied.remove(p)
        occupied.add(p - n)
    return -1 if total % 2 else 1


def _runner_sort_sign(beads: list[int], n: int) -> int:
    # sign of the permutation taking decreasing order to (runner, decreasing) order
    seq = sorted(beads, key=lambda p: (p % n, -p))
    rank = {p: i for i, p in enumerate(sorted(beads, reverse=True))}
    perm = [rank[p] for p in seq]
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def n_sign_by_permutation(lam: Partition, n: int) -> int:
    """Same sign via bead sorting: compare the runner-sorting permutations of
    ``lam`` and of its core on a common bead window."""
    _check_n(n)
    nb = _bead_count(lam, n)
    core = n_core(lam, n)
    return _runner_sort_sign(_beads(lam, nb), n) * _runner_sort_sign(_beads(core, nb), n)


# -- nodes and residues ----------------------------------------------------------


def residue(node: tuple[int, int], n: int) -> int:
    r, c = node
    return (c - r) % n


def addable_nodes(lam: Partition, n: int | None = None, i: int | None = None) -> list[tuple[int, int]]:
    """Addable nodes ordered left to right (increasing column)."""
    out = []
    for r in range(len(lam) + 1, 0, -1):
        if r == 1 or lam.part(r - 1) > lam.part(r):
            node = (r, lam.part(r) + 1)
            if i is None or residue(node, n) == i % n:
                out.append(node)
    return out


def removable_nodes(lam: Partition, n: int | None = None, i: int | None = None) -> list[tuple[int, int]]:
    """Removable nodes ordered left to right (increasing column)."""
    out = []
    for r in range(len(lam), 0, -1):
        if lam.part(r) > lam.part(r + 1):
            node = (r, lam.part(r))
            if i is None or residue(node, n) == i % n:
                out.append(node)
    return out


def addable_removable_nodes(lam: Partition, n: int, i: int):
    """``(addable, removable)`` ``i``-nodes of ``lam``, each ordered left to right."""
    _check_n(n)
    return addable_nodes(lam, n, i), removable_nodes(lam, n, i)


def add_node(lam: Partition, node: tuple[int, int]) -> Partition:
    r, c = node
    parts = list(lam) + [0]
    if parts[r - 1] != c - 1 or (r > 1 and parts[r - 2] < c):
        raise ValueError(f"{node} is not addable to {lam}")
    parts[r - 1] = c
    return Partition._make(p for p in parts if p)


def remove_node(lam: Partition, node: tuple[int, int]) -> Partition:
    r, c = node
    parts = list(lam)
    if lam.part(r) != c or lam.part(r + 1) >= c:
        raise ValueError(f"{node} is not removable from {lam}")
    parts[r - 1] = c - 1
    return Partition._make(p for p in parts if p)


# -- ribbons and horizontal ribbon strips ------------------------------------------


@dataclass(frozen=True)
class Ribbon:
    """A connected skew shape with no 2x2 square; ``spin`` is its height minus one."""

    cells: frozenset
    spin: int

    @property
    def head(self) -> tuple[int, int]:
        """Top-right cell."""
        top = min(r for r, _ in self.cells)
        return (top, max(c for r, c in self.cells if r == top))

    def shape(self) -> Partition:
        """Row lengths from top to bottom (a hook for Rouquier ribbons)."""
        rows: dict[int, int] = {}
        for r, _ in self.cells:
            rows[r] = rows.get(r, 0) + 1
        return Partition._make(rows[r] for r in sorted(rows))


def skew_cells(lam: Partition, mu: Partition) -> frozenset:
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    return frozenset((r, c) for r in range(1, len(lam) + 1)
                     for c in range(mu.part(r) + 1, lam[r - 1] + 1))


def ribbon_of(lam: Partition, mu: Partition) -> Ribbon | None:
    """The ribbon ``lam / mu`` or None if the skew shape is not a ribbon."""
    cells = skew_cells(lam, mu)
    if not cells:
        return None
    if any((r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells for r, c in cells):
        return None
    # connectivity
    start = next(iter(cells))
    seen, stack = {start}, [start]
    while stack:
        r, c = stack.pop()
        for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    if len(seen) != len(cells):
        return None
    rows = {r for r, _ in cells}
    return Ribbon(cells, len(rows) - 1)


def removable_ribbons(lam: Partition, n: int) -> list[tuple[Partition, int]]:
    """All ``(mu, spin)`` with ``lam / mu`` an ``n``-ribbon."""
    _check_n(n)
    nb = _bead_count(lam, n)
    beads = _beads(lam, nb)
    occupied = set(beads)
    out = []
    for p in beads:
        if p - n not in occupied and p - n > -nb:
            leg = _leg_between(occupied, p - n, p)
            new = (occupied - {p}) | {p - n}
            out.append((_from_beads(new), leg))
    return out


def addable_ribbons(lam: Partition, n: int) -> list[tuple[Partition, int]]:
    """All ``(mu, spin)`` with ``mu / lam`` an ``n``-ribbon."""
    _check_n(n)
    nb = _bead_count(lam, n, extra=n)
    beads = _beads(lam, nb)
    occupied = set(beads)
    out = []
    for p in beads:
        if p + n not in occupied:
            leg = _leg_between(occupied, p, p + n)
            new = (occupied - {p}) | {p + n}
            out.append((_from_beads(new), leg))
    return out


def _horizontal_strips(runner: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """Increments ``d_j >= 0`` on decreasing runner coordinates ``k_1 > k_2 > ...``
    with ``k_j + d_j < k_{j-1}`` and total ``size``."""
    m = len(runner)

    def rec(j: int, left: int):
        if j == m:
            if left == 0:
                yield ()
            return
        cap = left if j == 0 else min(left, runner[j - 1] - runner[j] - 1)
        for d in range(cap, -1, -1):
            for rest in rec(j + 1, left - d):
                yield (d,) + rest

    yield from rec(0, size)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=200000)
def _strips_cached(lam: Partition, n: int, k: int) -> tuple[tuple[Partition, int], ...]:
    nb = _bead_count(lam, n, extra=n * k)
    beads = _beads(lam, nb)
    runners: list[list[int]] = [[] for _ in range(n)]
    for p in beads:
        runners[p % n].append(p)
    options = []
    for c in range(n):
        coords = [(p - c) // n for p in runners[c]]
        options.append([[list(d) for d in _horizontal_strips(coords, t)] for t in range(k + 1)])
    out = []
    for comp in _compositions(k, n):
        per_runner = [options[c][comp[c]] for c in range(n)]
        for choice in product(*per_runner):
            steps = []
            for c in range(n):
                for p, d in zip(runners[c], choice[c]):
                    steps.extend(p + n * s for s in range(1, d + 1))
            steps.sort()
            occupied = set(beads)
            spin = 0
            for dest in steps:
                src = dest - n
                spin += _leg_between(occupied, src, dest)
                occupied.remove(src)
                occupied.add(dest)
            out.append((_from_beads(occupied), spin))
    return tuple(out)


def horizontal_ribbon_strips(lam: Partition, n: int, k: int) -> list[tuple[Partition, int]]:
    """All ``(mu, spin)`` with ``mu / lam`` a horizontal ``n``-ribbon strip of weight ``k``.

    On the abacus this moves beads up their runners so that each runner
    changes by a horizontal strip; the spin is accumulated by executing the
    single-ribbon moves in increasing order of their head positions.
    """
    _check_n(n)
    if k < 0:
        return []
    if k == 0:
        return [(Partition._make(lam), 0)]
    return list(_strips_cached(Partition._make(lam), n, k))


# -- crystal operators -------------------------------------------------------------


def _signature(lam: Partition, n: int, i: int):
    add = [(c, "A", node) for node in addable_nodes(lam, n, i) for c in [node[1]]]
    rem = [(c, "R", node) for node in removable_nodes(lam, n, i) for c in [node[1]]]
    seq = [(kind, node) for _, kind, node in sorted(add + rem)]
    stack: list[tuple[str, tuple[int, int]]] = []
    for kind, node in seq:
        if kind == "A" and stack and stack[-1][0] == "R":
            stack.pop()
        else:
            stack.append((kind, node))
    adds = [node for kind, node in stack if kind == "A"]
    rems = [node for kind, node in stack if kind == "R"]
    return adds, rems


def crystal_e(lam: Partition, n: int, i: int) -> Partition | None:
    """Kashiwara operator: remove the leftmost unpaired removable ``i``-node."""
    _check_n(n)
    _, rems = _signature(Partition._make(lam), n, i)
    return remove_node(lam, rems[0]) if rems else None


def crystal_f(lam: Partition, n: int, i: int) -> Partition | None:
    """Kashiwara operator: add the rightmost unpaired addable ``i``-node."""
    _check_n(n)
    adds, _ = _signature(Partition._make(lam), n, i)
    return add_node(lam, adds[-1]) if adds else None


def crystal_epsilon(lam: Partition, n: int, i: int) -> int:
    """Maximal ``k`` with ``crystal_e^k(lam)`` defined."""
    return len(_signature(Partition._make(lam), n, i)[1])


# -- enumeration -------------------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions_of(m: int, maxpart: int) -> tuple[Partition, ...]:
    if m == 0:
        return (EMPTY,)
    out = []
    for first in range(min(m, maxpart), 0, -1):
        for rest in _partitions_of(m - first, first):
            out.append(Partition._make((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(m: int) -> tuple[Partition, ...]:
    """All partitions of ``m`` in decreasing lexicographic order."""
    if m < 0:
        return ()
    return _partitions_of(m, m)


@lru_cache(maxsize=None)
def multipartitions_of(m: int, n: int) -> tuple[tuple[Partition, ...], ...]:
    """All ``n``-tuples of partitions of total size ``m``."""
    out = []
    for sizes in _compositions(m, n):
        for combo in product(*(partitions_of(s) for s in sizes)):
            out.append(tuple(combo))
    return tuple(out)


def is_regular(lam: Partition, n: int) -> bool:
    """No nonzero part repeated ``n`` or more times."""
    return all(len(list(g)) < n for _, g in groupby(lam))
