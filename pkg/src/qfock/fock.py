"""Sparse vectors of the v-deformed Fock space and the operators acting on them.

A vector is a ``FockVec``: a dict ``Partition -> Laurent`` with no zero
values.  The Chevalley operators ``F_i``, ``E_i`` add or remove ``i``-nodes
with a power of ``v`` counting addable minus removable ``i``-nodes on one side
of the moving node; ``D_k`` adds horizontal ribbon strips.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Mapping

from .laurent import Laurent, ONE, ZERO, divexact, gauss_factorial
from .partitions import (
    Partition,
    addable_nodes,
    add_node,
    core_coords,
    from_core_quotient,
    horizontal_ribbon_strips,
    is_core,
    multipartitions_of,
    n_core,
    n_weight,
    parse_partition,
    partition_key,
    removable_nodes,
    remove_node,
)

__all__ = [
    "FockVec",
    "BlockId",
    "AffineWeight",
    "apply_F",
    "apply_E",
    "apply_F_divided",
    "apply_E_divided",
    "apply_D",
    "weight_of",
    "affine_weight",
    "simple_root",
    "block_partitions",
    "block_dimension",
    "scalar_product",
    "scalar_product_v",
    "reflection_r",
    "reflection_matrix",
]


class FockVec(dict):
    """Finite linear combination of ``s(lambda)`` with Laurent coefficients."""

    def __init__(self, data: Mapping | Iterable = ()):
        super().__init__()
        items = data.items() if isinstance(data, Mapping) else data
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = c if isinstance(c, Laurent) else Laurent(c)
            total = self.get(lam, ZERO) + c
            if total:
                self[lam] = total
            else:
                self.pop(lam, None)

    @classmethod
    def basis(cls, lam, coeff: Laurent | int = 1) -> "FockVec":
        return cls({lam: coeff})

    def __add__(self, other: "FockVec") -> "FockVec":
        out = FockVec(self)
        out.accumulate(other)
        return out

    def __sub__(self, other: "FockVec") -> "FockVec":
        return self + other.scale(-1)

    def __neg__(self) -> "FockVec":
        return self.scale(-1)

    def accumulate(self, other: Mapping, coeff: Laurent | int = 1) -> None:
        """In-place ``self += coeff * other``."""
        for lam, c in other.items():
            total = self.get(lam, ZERO) + c * coeff
            if total:
                self[lam] = total
            else:
                self.pop(lam, None)

    def scale(self, c: Laurent | int) -> "FockVec":
        out = FockVec()
        for lam, x in self.items():
            y = x * c
            if y:
                out[lam] = y
        return out

    def bar_coefficients(self) -> "FockVec":
        return FockVec({lam: c.bar() for lam, c in self.items()})

    def coefficient(self, lam) -> Laurent:
        return self.get(Partition(lam), ZERO)

    def support(self) -> list[Partition]:
        """Support sorted by decreasing size-then-lexicographic key."""
        return sorted(self, key=partition_key, reverse=True)

    def at(self, value) -> dict[Partition, Fraction]:
        """Specialize every coefficient at ``v = value``."""
        out = {}
        for lam, c in self.items():
            x = c(value)
            if x:
                out[lam] = x
        return out

    def __str__(self) -> str:
        if not self:
            return "0"
        chunks = []
        for lam in self.support():
            c = self[lam]
            if c == ONE:
                chunks.append(f"s{lam}")
            elif c == -ONE:
                chunks.append(f"-s{lam}")
            else:
                chunks.append(f"({c})s{lam}")
        return " + ".join(chunks).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [{"partition": str(lam), "laurent": self[lam].to_json()} for lam in self.support()]

    @classmethod
    def from_json(cls, data) -> "FockVec":
        return cls((parse_partition(rec["partition"]), Laurent.from_json(rec["laurent"])) for rec in data)


def _linear(vec: Mapping, action: Callable[[Partition], Iterable[tuple[Partition, Laurent]]]) -> FockVec:
    out = FockVec()
    for lam, c in vec.items():
        for mu, x in action(lam):
            total = out.get(mu, ZERO) + c * x
            if total:
                out[mu] = total
            else:
                out.pop(mu, None)
    return out


def _check_residue(i: int, n: int) -> int:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0 <= i < n:
        raise ValueError(f"residue must lie in 0..{n - 1}, got {i}")
    return i


@lru_cache(maxsize=500000)
def _F_terms(lam: Partition, n: int, i: int) -> tuple[tuple[Partition, Laurent], ...]:
    adds = addable_nodes(lam, n, i)
    rems = removable_nodes(lam, n, i)
    out = []
    for node in adds:
        c = node[1]
        exp = sum(1 for a in adds if a[1] > c) - sum(1 for r in rems if r[1] > c)
        out.append((add_node(lam, node), Laurent.monomial(exp)))
    return tuple(out)


@lru_cache(maxsize=500000)
def _E_terms(mu: Partition, n: int, i: int) -> tuple[tuple[Partition, Laurent], ...]:
    out = []
    for node in removable_nodes(mu, n, i):
        lam = remove_node(mu, node)
        c = node[1]
        exp = (sum(1 for a in addable_nodes(lam, n, i) if a[1] < c)
               - sum(1 for r in removable_nodes(lam, n, i) if r[1] < c))
        out.append((lam, Laurent.monomial(-exp)))
    return tuple(out)


def apply_F(i: int, x: Mapping, n: int) -> FockVec:
    """``F_i``: add an ``i``-node, weighted by ``v`` to the (addable - removable)
    count of ``i``-nodes strictly to its right."""
    _check_residue(i, n)
    return _linear(x, lambda lam: _F_terms(lam, n, i))


def apply_E(i: int, x: Mapping, n: int) -> FockVec:
    """``E_i``: remove an ``i``-node, weighted by ``v^-N`` where ``N`` counts
    addable minus removable ``i``-nodes of the smaller partition to its left."""
    _check_residue(i, n)
    return _linear(x, lambda mu: _E_terms(mu, n, i))


def _divided(op, i: int, k: int, x: Mapping, n: int) -> FockVec:
    if k < 0:
        raise ValueError("divided power needs k >= 0")
    y = FockVec(x)
    for _ in range(k):
        y = op(i, y, n)
        if not y:
            return y
    den = gauss_factorial(k)
    if den == ONE:
        return y
    out = FockVec()
    for lam, c in y.items():
        try:
            out[lam] = divexact(c, den)
        except ArithmeticError as exc:  # pragma: no cover - would be a bug
            raise ArithmeticError(f"divided power not integral at {lam}: {c} / {den}") from exc
    return out


def apply_F_divided(i: int, k: int, x: Mapping, n: int) -> FockVec:
    """``F_i^(k) = F_i^k / [k]!``; the division is checked to be exact."""
    return _divided(apply_F, i, k, x, n)


def apply_E_divided(i: int, k: int, x: Mapping, n: int) -> FockVec:
    return _divided(apply_E, i, k, x, n)


@lru_cache(maxsize=200000)
def _D_terms(lam: Partition, n: int, k: int) -> tuple[tuple[Partition, Laurent], ...]:
    # (-v)^(-spin)
    return tuple((mu, Laurent.monomial(-spin, -1 if spin % 2 else 1))
                 for mu, spin in horizontal_ribbon_strips(lam, n, k))


def apply_D(k: int, x: Mapping, n: int) -> FockVec:
    """Bosonic operator: sum over horizontal ``n``-ribbon strips of weight ``k``
    with coefficient ``(-v)^(-spin)``."""
    if k < 1:
        raise ValueError("D_k needs k >= 1")
    return _linear(x, lambda lam: _D_terms(lam, n, k))


# -- blocks and weights -----------------------------------------------------------


@dataclass(frozen=True)
class BlockId:
    """A weight space of the Fock space: all partitions with a given ``n``-core and ``n``-weight."""

    n: int
    core: Partition
    weight_w: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        if self.n < 2 or self.weight_w < 0:
            raise ValueError(f"bad block {self}")
        if not is_core(self.core, self.n):
            raise ValueError(f"{self.core} is not a {self.n}-core")

    @property
    def size(self) -> int:
        return sum(self.core) + self.n * self.weight_w

    def affine_weight(self) -> "AffineWeight":
        """``sigma(Lambda_0) - w delta``."""
        a = core_coords(self.core, self.n).a
        return AffineWeight(self.n, 1, -sum(x * x for x in a) // 2 - self.weight_w, a)

    def __str__(self) -> str:
        return f"block(n={self.n}, core={self.core}, w={self.weight_w})"


@dataclass(frozen=True)
class AffineWeight:
    """``level*Lambda_0 + d*delta + sum a_i eps_i`` with the invariant form
    ``(eps_i, eps_j) = [i == j]``, ``(Lambda_0, delta) = 1``, ``(Lambda_0, Lambda_0) = (delta, delta) = 0``."""

    n: int
    level: int
    d: int
    a: tuple[int, ...]

    def __add__(self, other: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.n, self.level + other.level, self.d + other.d,
                            tuple(x + y for x, y in zip(self.a, other.a)))

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(self.n, -self.level, -self.d, tuple(-x for x in self.a))

    def __sub__(self, other: "AffineWeight") -> "AffineWeight":
        return self + (-other)

    def scaled(self, k: int) -> "AffineWeight":
        return AffineWeight(self.n, k * self.level, k * self.d, tuple(k * x for x in self.a))

    def pair(self, other: "AffineWeight") -> int:
        return (sum(x * y for x, y in zip(self.a, other.a))
                + self.level * other.d + other.level * self.d)

    def reflect(self, i: int) -> "AffineWeight":
        alpha = simple_root(i, self.n)
        return self - alpha.scaled(self.pair(alpha))

    def in_fock_weights(self) -> bool:
        """Membership in the weight set of the level-one Fock space.

        Needs level 1 with ``sum a_i = 0``; then ``(x, x) <= 0`` decides."""
        return self.level == 1 and sum(self.a) == 0 and self.pair(self) <= 0

    def as_block(self) -> BlockId:
        if not self.in_fock_weights():
            raise ValueError(f"{self} is not a weight of the Fock space")
        from .partitions import core_from_coords
        core = core_from_coords(self.a)
        w = -self.pair(self) // 2
        return BlockId(self.n, core, w)


def simple_root(i: int, n: int) -> AffineWeight:
    _check_residue(i, n)
    a = [0] * n
    if i == 0:
        a[n - 1], a[0] = 1, -1
        return AffineWeight(n, 0, 1, tuple(a))
    a[i - 1], a[i] = 1, -1
    return AffineWeight(n, 0, 0, tuple(a))


def affine_weight(lam: Partition, n: int) -> AffineWeight:
    """``Lambda_0 - sum_i c_i alpha_i`` where ``c_i`` counts the ``i``-nodes of ``lam``."""
    counts = [0] * n
    for r, c in lam.cells():
        counts[(c - r) % n] += 1
    x = AffineWeight(n, 1, 0, (0,) * n)
    for i, c in enumerate(counts):
        if c:
            x = x - simple_root(i, n).scaled(c)
    return x


def weight_of(lam, n: int) -> BlockId:
    lam = Partition(lam)
    return BlockId(n, n_core(lam, n), n_weight(lam, n))


@lru_cache(maxsize=None)
def _block_partitions(n: int, core: Partition, w: int) -> tuple[Partition, ...]:
    out = {from_core_quotient(core, q, n) for q in multipartitions_of(w, n)}
    return tuple(sorted(out, reverse=True))


def block_partitions(b: BlockId, bound: int | None = None) -> list[Partition]:
    """All partitions of the block, in decreasing lexicographic order.

    ``bound`` caps the ``n``-weight a caller is willing to enumerate.
    """
    if bound is not None and b.weight_w > bound:
        raise ValueError(f"n-weight {b.weight_w} exceeds the enumeration bound {bound}")
    return list(_block_partitions(b.n, b.core, b.weight_w))


def block_dimension(n: int, w: int) -> int:
    """``sum over k_1+...+k_n = w`` of ``p(k_1)...p(k_n)``, computed independently
    of any abacus."""
    from .partitions import partitions_of
    table = [1] + [0] * w
    for _ in range(n):
        new = [0] * (w + 1)
        for s in range(w + 1):
            for t in range(w + 1 - s):
                new[s + t] += table[s] * len(partitions_of(t))
        table = new
    return table[w]


# -- scalar products ---------------------------------------------------------------


def scalar_product(x: Mapping, y: Mapping) -> Laurent:
    """Bilinear form making ``{s(lambda)}`` orthonormal."""
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    total = ZERO
    for lam, c in small.items():
        if lam in big:
            total = total + c * big[lam]
    return total


def scalar_product_v(x: Mapping, y: Mapping, n: int) -> Laurent:
    """Bilinear form with ``<s(lambda), s(mu)>_v = v^(-wt_n(lambda)) [lambda == mu]``."""
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    total = ZERO
    for lam, c in small.items():
        if lam in big:
            total = total + (c * big[lam]).shift(-n_weight(lam, n))
    return total


# -- reflections at v = 1 ------------------------------------------------------------


def _classical(op: str, i: int, x: dict, n: int) -> dict:
    out: dict[Partition, Fraction] = {}
    for lam, c in x.items():
        targets = ([add_node(lam, nd) for nd in addable_nodes(lam, n, i)] if op == "f"
                   else [remove_node(lam, nd) for nd in removable_nodes(lam, n, i)])
        for mu in targets:
            out[mu] = out.get(mu, 0) + c
    return {k: v for k, v in out.items() if v}


def _exp(op: str, sign: int, i: int, x: dict, n: int) -> dict:
    # exp(sign * op) x; op is nilpotent on finite vectors
    out = dict(x)
    term, k = dict(x), 0
    while term:
        k += 1
        term = _classical(op, i, term, n)
        coeff = Fraction(sign ** k, factorial(k))
        for lam, c in term.items():
            out[lam] = out.get(lam, 0) + coeff * c
    return {lam: Fraction(c) for lam, c in out.items() if c}


def _check_homogeneous(x: Mapping, n: int) -> None:
    blocks = {(n_core(lam, n), sum(lam)) for lam in x}
    if len(blocks) > 1:
        raise ValueError("reflection_r needs a vector supported in a single weight space")


def reflection_r(i: int, x: Mapping, n: int) -> dict[Partition, Fraction]:
    """``r_i = exp(e_i) exp(-f_i) exp(e_i)`` on the classical Fock space.

    ``x`` maps partitions to rationals (or integer-valued Laurent
    polynomials, which are specialized at ``v = 1``).
    """
    _check_residue(i, n)
    vec = {Partition(lam): (c(1) if isinstance(c, Laurent) else Fraction(c)) for lam, c in x.items()}
    vec = {lam: c for lam, c in vec.items() if c}
    _check_homogeneous(vec, n)
    y = _exp("e", 1, i, vec, n)
    y = _exp("f", -1, i, y, n)
    return _exp("e", 1, i, y, n)


def reflection_matrix(i: int, b: BlockId) -> tuple[list[Partition], list[Partition], list[list[Fraction]]]:
    """Matrix of ``r_i`` from block ``b`` to its reflected block: ``(rows, cols, M)``
    with ``M[r][c]`` the coefficient of ``rows[r]`` in ``r_i s(cols[c])``."""
    cols = block_partitions(b)
    target = b.affine_weight().reflect(i).as_block()
    rows = block_partitions(target)
    index = {lam: k for k, lam in enumerate(rows)}
    M = [[Fraction(0)] * len(cols) for _ in rows]
    for c, lam in enumerate(cols):
        for mu, val in reflection_r(i, {lam: 1}, b.n).items():
            if mu not in index:
                raise AssertionError(f"r_{i} left the reflected weight space at {mu}")
            M[index[mu]][c] = val
    return rows, cols, M
