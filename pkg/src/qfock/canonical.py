"""Bar involution and canonical bases of the Fock space, block by block.

The bar involution is pinned down by two facts: it fixes ``s(∅)`` and it
commutes with every ``F_i`` and ``D_k``.  So every vector of the form
``D_kappa F_{i_s}^{(k_s)} ... F_{i_1}^{(k_1)} s(∅)`` is bar-invariant.  Choosing
enough such vectors to span a block gives a matrix ``M`` (columns = vectors)
with ``B * conj(M) = M``, where ``B`` is the matrix of the involution on the
basis ``s(lambda)``.  Solving that system gives ``B``; the canonical bases
then follow from the standard triangular correction.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from random import Random
from typing import Callable

from .fock import (
    BlockId,
    FockVec,
    apply_D,
    apply_F_divided,
    block_partitions,
    n_weight,
    weight_of,
)
from .laurent import Laurent, ONE, ZERO
from .partitions import EMPTY, Partition, is_regular, partitions_of

__all__ = [
    "SpanningError",
    "TriangularityError",
    "DecompMatrix",
    "ladder_word",
    "ladder_vector",
    "spanning_vectors",
    "bar_involution",
    "apply_bar",
    "canonical_basis",
    "canonical_vector",
    "d_poly",
    "e_poly",
    "upper_basis_Gstar",
    "clear_cache",
]


class SpanningError(RuntimeError):
    """The generated bar-invariant vectors do not span the block."""


class TriangularityError(RuntimeError):
    """The bar matrix is not unitriangular for any order, or the correction failed."""


# -- bar-invariant generators ---------------------------------------------------------


def ladder_word(mu: Partition, n: int) -> list[tuple[int, int]]:
    """``[(residue, multiplicity), ...]`` along the ladders of ``mu``, bottom ladder first.

    Node ``(i, j)`` lies on ladder ``i + (n-1)(j-1)``; all nodes on one ladder
    share the residue ``(1 - ladder) mod n``.
    """
    counts: dict[int, int] = {}
    for i, j in mu.cells():
        L = i + (n - 1) * (j - 1)
        counts[L] = counts.get(L, 0) + 1
    return [((1 - L) % n, counts[L]) for L in sorted(counts)]


def ladder_vector(mu: Partition, n: int) -> FockVec:
    x = FockVec.basis(EMPTY)
    for r, k in ladder_word(mu, n):
        x = apply_F_divided(r, k, x, n)
    return x


def spanning_vectors(b: BlockId) -> list[tuple[str, FockVec]]:
    """Bar-invariant vectors ``D_kappa A(mu)`` spanning the block ``b``.

    ``mu`` runs over ``n``-regular partitions with the same core and smaller
    weight ``m``, ``kappa`` over partitions of ``w - m``.  Labels describe the word.
    """
    n, out = b.n, []
    for m in range(b.weight_w + 1):
        for mu in block_partitions(BlockId(n, b.core, m)):
            if not is_regular(mu, n):
                continue
            base = ladder_vector(mu, n)
            for kappa in partitions_of(b.weight_w - m):
                x = base
                for k in kappa:
                    x = apply_D(k, x, n)
                label = f"D{list(kappa)}A{mu}" if kappa else f"A{mu}"
                out.append((label, x))
    return out


# -- exact solve: evaluation modulo a prime, interpolation, exact verification ------------

_PRIME = (1 << 61) - 1


def _eval(c: Laurent, x: int, xinv: int) -> int:
    total = 0
    for e, coef in c.terms():
        total += coef * pow(x if e >= 0 else xinv, abs(e), _PRIME)
    return total % _PRIME


def _solve_mod(A: list[list[int]], rhs: list[list[int]]) -> list[list[int]] | None:
    """Solve ``A X = rhs`` modulo the prime; None if ``A`` is singular."""
    N = len(A)
    m = len(rhs[0]) if rhs else 0
    aug = [A[r][:] + rhs[r][:] for r in range(N)]
    for col in range(N):
        piv = next((r for r in range(col, N) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], _PRIME - 2, _PRIME)
        row = [(x * inv) % _PRIME for x in aug[col]]
        aug[col] = row
        for r in range(N):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % _PRIME for x, y in zip(aug[r], row)]
    return [aug[r][N:N + m] for r in range(N)]


def _lift(x: int) -> int:
    return x - _PRIME if x > _PRIME // 2 else x


def _interpolate(points: list[int], values: list[int], low: int) -> Laurent:
    """Laurent polynomial with exponents in ``[low, low + len(points) - 1]`` through the data."""
    # Newton divided differences on q(x) = x^-low * f(x)
    k = len(points)
    coef = [(values[t] * pow(points[t], -low, _PRIME)) % _PRIME for t in range(k)]
    for level in range(1, k):
        for t in range(k - 1, level - 1, -1):
            num = (coef[t] - coef[t - 1]) % _PRIME
            den = (points[t] - points[t - level]) % _PRIME
            coef[t] = num * pow(den, _PRIME - 2, _PRIME) % _PRIME
    poly = [0]
    for t in range(k - 1, -1, -1):
        # poly = poly * (x - points[t]) + coef[t]
        new = [0] * (len(poly) + 1)
        for d, c in enumerate(poly):
            new[d + 1] = (new[d + 1] + c) % _PRIME
            new[d] = (new[d] - c * points[t]) % _PRIME
        new[0] = (new[0] + coef[t]) % _PRIME
        poly = new
    return Laurent({d + low: _lift(c) for d, c in enumerate(poly) if c})


def _matmul(A: list[list[Laurent]], B: list[list[Laurent]]) -> list[list[Laurent]]:
    N, K, P = len(A), len(B), len(B[0]) if B else 0
    out = [[ZERO] * P for _ in range(N)]
    for i in range(N):
        Ai = A[i]
        row = out[i]
        for k in range(K):
            a = Ai[k]
            if not a:
                continue
            Bk = B[k]
            for j in range(P):
                if Bk[j]:
                    row[j] = row[j] + a * Bk[j]
    return out


def _conj(A: list[list[Laurent]]) -> list[list[Laurent]]:
    return [[c.bar() for c in row] for row in A]


def _solve_bar_modular(M: list[list[Laurent]], seed: int = 0) -> list[list[Laurent]]:
    """``B`` with ``B * conj(M) = M``, reconstructed from values at integer points."""
    N = len(M)
    Mbar = _conj(M)
    rng = Random(seed)
    degree = 8
    while True:
        k = 2 * degree + 1
        points, values = [], []
        tried = 0
        while len(points) < k:
            x = rng.randrange(2, _PRIME - 1)
            tried += 1
            xinv = pow(x, _PRIME - 2, _PRIME)
            Ab = [[_eval(Mbar[r][c], x, xinv) for c in range(N)] for r in range(N)]
            Am = [[_eval(M[r][c], x, xinv) for c in range(N)] for r in range(N)]
            # B Mbar = M  <=>  Mbar^T B^T = M^T
            sol = _solve_mod([list(col) for col in zip(*Ab)], [list(col) for col in zip(*Am)])
            if sol is None:
                if tried > 2 * len(points) + 5:
                    raise SpanningError("bar-invariant generators do not span the block")
                continue
            points.append(x)
            values.append(sol)  # sol[c][r] = B[r][c]
        B = [[_interpolate(points, [values[t][c][r] for t in range(k)], -degree)
              for c in range(N)] for r in range(N)]
        if _matmul(B, Mbar) == M:
            return B
        degree *= 2
        if degree > 4096:  # pragma: no cover - would be a bug
            raise ArithmeticError("bar matrix reconstruction did not converge")


def _solve_bar_sympy(M: list[list[Laurent]]) -> list[list[Laurent]]:
    """Same solve over ``Z[v]`` with sympy's fraction-free inverse."""
    from sympy import ZZ, Poly, symbols
    from sympy.polys.matrices import DomainMatrix

    v = symbols("v")
    R = ZZ[v]
    N = len(M)
    Mbar = _conj(M)
    shift = max([max(abs(c.min_degree), abs(c.max_degree)) for row in M for c in row if c] + [0])

    def to_ring(c: Laurent):
        return R.from_sympy(sum(coef * v ** (e + shift) for e, coef in c.terms())) if c else R.zero

    DM = DomainMatrix([[to_ring(c) for c in row] for row in M], (N, N), R)
    DMbar = DomainMatrix([[to_ring(c) for c in row] for row in Mbar], (N, N), R)
    if DMbar.rank() < N:
        raise SpanningError("bar-invariant generators do not span the block")
    inv, den = DMbar.inv_den()
    prod = (DM * inv).to_Matrix()
    den_poly = Poly(R.to_sympy(den), v)
    # split off the power of v so the remaining division is exact in Z[v]
    low = min(e for (e,) in den_poly.monoms())
    den_poly = Poly(sum(c * v ** (e - low) for (e,), c in den_poly.terms()), v)
    out = []
    for r in range(N):
        row = []
        for c in range(N):
            q, rem = Poly(prod[r, c], v).div(den_poly)
            if not rem.is_zero:
                raise ArithmeticError("bar matrix entry is not a Laurent polynomial")
            terms = {}
            for (e,), coef in q.terms():
                terms[e - low] = int(coef)
            row.append(Laurent(terms))
        out.append(row)
    return out


# -- block cache ---------------------------------------------------------------------------


@dataclass
class _BlockData:
    order: list[Partition]
    bar: list[list[Laurent]]
    generators: list[str]
    bases: dict = field(default_factory=dict)


_CACHE: dict[tuple, _BlockData] = {}
_LOCK = threading.Lock()


def clear_cache() -> None:
    with _LOCK:
        _CACHE.clear()


def _block_data(b: BlockId, method: str = "modular") -> _BlockData:
    key = (b.n, b.core, b.weight_w, method)
    with _LOCK:
        hit = _CACHE.get(key)
    if hit is not None:
        return hit
    parts = block_partitions(b)
    index = {lam: i for i, lam in enumerate(parts)}
    gens = spanning_vectors(b)
    if len(gens) != len(parts):
        raise SpanningError(f"{len(gens)} generators for a block of dimension {len(parts)}")
    N = len(parts)
    M = [[ZERO] * N for _ in range(N)]
    for c, (_, x) in enumerate(gens):
        for lam, coef in x.items():
            if lam not in index:
                raise AssertionError(f"generator left the block at {lam}")
            M[index[lam]][c] = coef
    if method == "modular":
        B = _solve_bar_modular(M)
    elif method == "sympy":
        B = _solve_bar_sympy(M)
    else:
        raise ValueError(f"unknown solver {method!r}")
    identity = [[ONE if i == j else ZERO for j in range(N)] for i in range(N)]
    if _matmul(B, _conj(B)) != identity:
        raise AssertionError("computed bar matrix is not an involution")
    data = _BlockData(parts, B, [label for label, _ in gens])
    with _LOCK:
        return _CACHE.setdefault(key, data)


def bar_involution(b: BlockId, method: str = "modular") -> tuple[list[Partition], list[list[Laurent]]]:
    """``(order, B)`` where ``B[r][c]`` is the coefficient of ``s(order[r])`` in ``bar(s(order[c]))``."""
    data = _block_data(b, method)
    return list(data.order), [row[:] for row in data.bar]


def apply_bar(x: FockVec, n: int) -> FockVec:
    """Bar involution of an arbitrary vector (split into blocks)."""
    out = FockVec()
    for lam, c in x.items():
        b = weight_of(lam, n)
        data = _block_data(b)
        col = data.order.index(lam)
        cb = c.bar()
        for r, mu in enumerate(data.order):
            entry = data.bar[r][col]
            if entry:
                out.accumulate({mu: entry * cb})
    return out


# -- canonical bases -------------------------------------------------------------------------


@dataclass(frozen=True)
class DecompMatrix:
    """Columns ``G(mu)`` (or ``G^-(mu)``) of one block, expanded on ``s(lambda)``.

    ``entries[r][c]`` is the coefficient of ``s(order[r])`` in the basis vector
    indexed by ``order[c]``.  ``order`` is the linear extension of the bar
    matrix's triangularity used in the computation (larger first).
    """

    block: BlockId
    minus: bool
    order: tuple[Partition, ...]
    entries: tuple[tuple[Laurent, ...], ...]

    def column(self, mu) -> FockVec:
        c = self.order.index(Partition(mu))
        return FockVec({lam: self.entries[r][c] for r, lam in enumerate(self.order) if self.entries[r][c]})

    def entry(self, lam, mu) -> Laurent:
        return self.entries[self.order.index(Partition(lam))][self.order.index(Partition(mu))]

    def to_json(self) -> dict:
        b = self.block
        return {
            "block": {"n": b.n, "core": str(b.core), "w": b.weight_w},
            "minus": self.minus,
            "order": [str(p) for p in self.order],
            "rows": [[c.to_json() for c in row] for row in self.entries],
        }


def _linear_extension(parts: list[Partition], B: list[list[Laurent]],
                      tie_break: Callable | None = None) -> list[int]:
    """Indices ordered so that ``B[r][c] != 0`` with ``r != c`` puts ``c`` before ``r``."""
    N = len(parts)
    ts: TopologicalSorter = TopologicalSorter()
    for c in range(N):
        ts.add(c)
        for r in range(N):
            if r != c and B[r][c]:
                ts.add(r, c)
    if tie_break is None:
        key = lambda i: (-sum(parts[i]), tuple(-x for x in parts[i]))
    else:
        key = lambda i: tie_break(parts[i])
    try:
        ts.prepare()
    except CycleError as exc:
        raise TriangularityError("bar matrix is not triangular for any order") from exc
    out: list[int] = []
    while ts.is_active():
        ready = sorted(ts.get_ready(), key=key)
        out.extend(ready)
        ts.done(*ready)
    return out


def _correct(B, order: list[int], minus: bool) -> list[list[Laurent]]:
    """Lusztig's triangular correction; returns ``D`` with ``D[r][c]`` the coefficient
    of ``s_r`` in the canonical vector indexed by ``c``."""
    N = len(order)
    D = [[ZERO] * N for _ in range(N)]
    pos = {idx: p for p, idx in enumerate(order)}
    for c in range(N):
        D[c][c] = ONE
        for p in range(pos[c] + 1, N):
            r = order[p]
            # d_r - bar(d_r) = sum_{nu != r} B[r][nu] * bar(d_nu)
            total = ZERO
            for q in range(pos[c], p):
                nu = order[q]
                if B[r][nu] and D[nu][c]:
                    total = total + B[r][nu] * D[nu][c].bar()
            if total.coefficient(0) or total + total.bar():
                raise TriangularityError("bar matrix failed the correction consistency check")
            D[r][c] = total.negative_part() if minus else total.positive_part()
    return D


def canonical_basis(b: BlockId, minus: bool = False, tie_break: Callable | None = None,
                    method: str = "modular") -> DecompMatrix:
    """The canonical basis ``G`` (or ``G^-`` if ``minus``) of block ``b``.

    ``tie_break`` maps a partition to a sort key and decides the order among
    partitions left incomparable by the bar matrix; the result does not depend on it.
    """
    data = _block_data(b, method)
    cache_key = (minus, tie_break)
    with _LOCK:
        hit = data.bases.get(cache_key)
    if hit is not None:
        return hit
    parts, B = data.order, data.bar
    idx = _linear_extension(parts, B, tie_break)
    D = _correct(B, idx, minus)
    order = tuple(parts[i] for i in idx)
    entries = tuple(tuple(D[r][c] for c in idx) for r in idx)
    result = DecompMatrix(b, minus, order, entries)
    for row_i, row in enumerate(entries):
        for col_i, val in enumerate(row):
            if row_i != col_i and val:
                if col_i > row_i:
                    raise TriangularityError("canonical basis is not unitriangular")
                if minus and not val.in_negative_part():
                    raise TriangularityError("G^- entry outside v^-1 Z[v^-1]")
                if not minus and not val.in_positive_part():
                    raise TriangularityError("G entry outside v Z[v]")
    with _LOCK:
        return data.bases.setdefault(cache_key, result)


def canonical_vector(lam, n: int, minus: bool = False) -> FockVec:
    """``G(lam)`` (or ``G^-(lam)``) as a vector."""
    lam = Partition(lam)
    return canonical_basis(weight_of(lam, n), minus).column(lam)


def d_poly(lam, mu, n: int) -> Laurent:
    """``d_{lam,mu}(v)``: coefficient of ``s(lam)`` in ``G(mu)``."""
    lam, mu = Partition(lam), Partition(mu)
    b = weight_of(mu, n)
    if weight_of(lam, n) != b:
        return ZERO
    return canonical_basis(b).entry(lam, mu)


def e_poly(lam, mu, n: int) -> Laurent:
    """``e_{lam,mu}(v)``, defined by ``G^-(lam) = sum_mu e_{lam,mu}(-v^-1) s(mu)``."""
    lam, mu = Partition(lam), Partition(mu)
    b = weight_of(lam, n)
    if weight_of(mu, n) != b:
        return ZERO
    coeff = canonical_basis(b, minus=True).entry(mu, lam)
    return coeff.substitute_monomial(-1, -1)


def upper_basis_Gstar(lam, n: int) -> FockVec:
    """``G*(lam) = v^{wt(lam)} sum_mu e_{lam', mu'}(-v) s(mu)``, the basis adjoint to
    ``{G(mu)}`` for the form ``<s(a), s(b)>_v = v^{-wt(a)} [a == b]``."""
    lam = Partition(lam)
    lc = lam.conjugate()
    b = weight_of(lc, n)
    Gm = canonical_basis(b, minus=True).column(lc)  # G^-(lam') = sum e_{lam',nu}(-1/v) s(nu)
    w = n_weight(lam, n)
    out = FockVec()
    for nu, coeff in Gm.items():
        e = coeff.substitute_monomial(-1, -1)   # e_{lam', nu}(v)
        out[nu.conjugate()] = e.substitute_monomial(-1, 1).shift(w)
    return out
