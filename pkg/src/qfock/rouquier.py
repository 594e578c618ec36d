"""Rouquier cores and the comparison between the Fock space and ``Sym^n``.

For the large core ``rho = rho(w)`` every partition with core ``rho`` is
determined by its ``n``-quotient, and the signed quotient map
``Phi(s(lam)) = eps_n(lam) s_{quotient(lam)}`` carries the canonical bases
``G`` and ``G^-`` (for weight ``<= w``) to the ``eta`` and ``psi`` bases of
``Sym^n``.  The closed monomial formulas for ``d`` and ``e`` live here too,
next to a harness comparing them with the generic computation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .canonical import canonical_vector
from .fock import BlockId, FockVec, apply_D, apply_F_divided, block_partitions
from .laurent import Laurent, ZERO
from .partitions import (
    EMPTY,
    Partition,
    core_from_coords,
    from_core_quotient,
    n_core,
    n_quotient,
    n_sign,
    n_weight,
    removable_ribbons,
    ribbon_of,
    skew_cells,
)
from .symfunc import (
    SymVec,
    eta_expansion,
    eta_lr_sum,
    psi_expansion,
    psi_lr_sum,
    substitute,
    sym_multiply,
)

__all__ = [
    "DomainError",
    "RouquierBlock",
    "rouquier_coords",
    "rouquier_core",
    "rouquier_block",
    "rouquier_partitions",
    "phi_map",
    "phi_inverse",
    "closed_d",
    "closed_e",
    "H_word",
    "H_operator",
    "h_operator_sides",
    "d_operator_sides",
    "MatchReport",
    "verify_theorem1",
    "ribbon_tilings",
    "prop73_structure_check",
    "colour_layout",
]


class DomainError(ValueError):
    """Input outside the set of partitions where the closed formulas are proven."""


def rouquier_coords(n: int, w: int) -> tuple[int, ...]:
    """Abacus coordinates ``(a_1, ..., a_n)`` of the large core ``rho(w)``."""
    if n < 2 or w < 1:
        raise ValueError("need n >= 2 and w >= 1")
    if n % 2 or w % 2:
        return tuple((2 * i - 1 - n) * (w - 1) // 2 for i in range(1, n + 1))
    half = [((2 * k - 1) * w - 2 * k + 2) // 2 for k in range(1, n // 2 + 1)]
    return tuple(half + [-x for x in reversed(half)])


@lru_cache(maxsize=None)
def rouquier_core(n: int, w: int) -> Partition:
    return core_from_coords(rouquier_coords(n, w), n)


@dataclass(frozen=True)
class RouquierBlock:
    """The family of partitions with core ``rho(w)`` and ``n``-weight at most ``w``."""

    n: int
    w: int
    rho: Partition
    r: int  # residue of rho_1 mod n

    def quotient(self, lam: Partition) -> tuple[Partition, ...]:
        return n_quotient(lam, self.n, convention=self.rho)

    def partition(self, quotient) -> Partition:
        return from_core_quotient(self.rho, quotient, self.n, convention=self.rho)

    def contains(self, lam: Partition) -> bool:
        return n_core(lam, self.n) == self.rho and n_weight(lam, self.n) <= self.w

    def require(self, lam: Partition) -> None:
        if n_core(lam, self.n) != self.rho:
            raise DomainError(f"{lam} does not have {self.n}-core {self.rho}")
        if n_weight(lam, self.n) > self.w:
            raise DomainError(f"{lam} has {self.n}-weight above {self.w}")


def rouquier_block(n: int, w: int) -> RouquierBlock:
    rho = rouquier_core(n, w)
    return RouquierBlock(n, w, rho, (rho[0] if rho else 0) % n)


def rouquier_partitions(blk: RouquierBlock) -> list[Partition]:
    """All partitions with core ``rho`` and weight ``0..w``."""
    out = []
    for u in range(blk.w + 1):
        out.extend(block_partitions(BlockId(blk.n, blk.rho, u)))
    return out


# -- the signed quotient map --------------------------------------------------------------


def phi_map(x: Mapping, blk: RouquierBlock) -> SymVec:
    """``s(lam) -> eps_n(lam) s_{quotient(lam)}``."""
    out = SymVec()
    for lam, c in x.items():
        if n_core(lam, blk.n) != blk.rho:
            raise DomainError(f"{lam} does not have {blk.n}-core {blk.rho}")
        out.accumulate({blk.quotient(lam): c}, n_sign(lam, blk.n))
    return out


def phi_inverse(y: Mapping, blk: RouquierBlock) -> FockVec:
    out = FockVec()
    for key, c in y.items():
        lam = blk.partition(key)
        out.accumulate({lam: c}, n_sign(lam, blk.n))
    return out


# -- closed formulas -----------------------------------------------------------------------


def _pair(lam, mu, blk: RouquierBlock):
    lam, mu = Partition(lam), Partition(mu)
    blk.require(lam)
    blk.require(mu)
    return blk.quotient(lam), blk.quotient(mu)


def closed_d(lam, mu, blk: RouquierBlock) -> Laurent:
    """``d_{lam,mu}(v) = v^delta * (chained LR sum)`` on the Rouquier family."""
    ql, qm = _pair(lam, mu, blk)
    delta, s = eta_lr_sum(ql, qm)
    return Laurent.monomial(delta, s)


def closed_e(lam, mu, blk: RouquierBlock) -> Laurent:
    """``e_{lam,mu}(v) = v^Delta * (triangular LR sum)`` on the Rouquier family."""
    ql, qm = _pair(lam, mu, blk)
    Delta, s = psi_lr_sum(ql, qm)
    return Laurent.monomial(Delta, s)


# -- H operators and the two operator identities ----------------------------------------------


def H_word(j: int, blk: RouquierBlock) -> list[int]:
    """Residues of the divided powers in ``H_{j,k}``, in the order they are applied."""
    n, r = blk.n, blk.r
    if not 0 <= j <= n - 2:
        raise ValueError(f"j must lie in 0..{n - 2}")
    first = [(r + t) % n for t in range(j + 1)]
    second = [(r + t) % n for t in range(n - 1, j, -1)]
    return first + second


def H_operator(j: int, k: int, x: Mapping, blk: RouquierBlock) -> FockVec:
    if k < 1:
        raise ValueError("k must be >= 1")
    y = FockVec(x)
    for i in H_word(j, blk):
        y = apply_F_divided(i, k, y, blk.n)
    return y


def _check_range(lam: Partition, k: int, blk: RouquierBlock) -> None:
    blk.require(lam)
    u = n_weight(lam, blk.n)
    if not (u < blk.w and 1 <= k <= blk.w - u):
        raise DomainError(f"need weight(lam) < w and 1 <= k <= w - weight(lam); got u={u}, k={k}")


def h_operator_sides(lam, j: int, k: int, blk: RouquierBlock) -> tuple[SymVec, SymVec]:
    """``(Phi(H_{j,k} s(lam)), (-1)^{k(n-j-2)} eps(lam) e_k(A_{j+1} - v A_j) s_quotient)``."""
    lam = Partition(lam)
    _check_range(lam, k, blk)
    lhs = phi_map(H_operator(j, k, {lam: 1}, blk), blk)
    ek = substitute(Partition([1] * k), [(1, 0, j + 1), (-1, 1, j)], blk.n)
    sign = (-1) ** (k * (blk.n - j - 2)) * n_sign(lam, blk.n)
    rhs = sym_multiply(ek, SymVec({blk.quotient(lam): sign}))
    return lhs, rhs


def d_operator_sides(lam, k: int, blk: RouquierBlock) -> tuple[SymVec, SymVec]:
    """``(Phi(D_k s(lam)), eps(lam) h_k(v^{1-n} A_0 + ... + v^-1 A_{n-2} + A_{n-1}) s_quotient)``."""
    lam = Partition(lam)
    _check_range(lam, k, blk)
    n = blk.n
    lhs = phi_map(apply_D(k, {lam: 1}, n), blk)
    hk = substitute(Partition([k]), [(1, -(n - 1 - i), i) for i in range(n)], n)
    rhs = sym_multiply(hk, SymVec({blk.quotient(lam): n_sign(lam, n)}))
    return lhs, rhs


# -- verification harness -------------------------------------------------------------------


@dataclass
class MatchReport:
    n: int
    w: int
    rho: Partition
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"n": self.n, "w": self.w, "rho": str(self.rho), "checked": self.checked,
                "ok": self.ok, "mismatches": self.mismatches, "rows": self.rows}


def _check_one(lam: Partition, blk: RouquierBlock, which: tuple[bool, ...]) -> dict:
    q = blk.quotient(lam)
    eps = n_sign(lam, blk.n)
    row = {"partition": str(lam), "quotient": [str(p) for p in q], "sign": eps}
    for minus in which:
        generic = canonical_vector(lam, blk.n, minus=minus)
        closed_sym = psi_expansion(q, blk.n) if minus else eta_expansion(q, blk.n)
        closed = phi_inverse(closed_sym, blk).scale(eps)
        row["G-" if minus else "G"] = generic == closed
    return row


def verify_theorem1(n: int, w: int, minus: bool | None = None, jobs: int = 1) -> MatchReport:
    """Compare ``G`` and ``G^-`` from the bar-correction route with the signed
    quotient images of ``eta`` and ``psi`` on every partition of the Rouquier family.

    ``minus=None`` checks both bases; ``True``/``False`` checks one.
    """
    blk = rouquier_block(n, w)
    which = (False, True) if minus is None else (bool(minus),)
    parts = rouquier_partitions(blk)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda lam: _check_one(lam, blk, which), parts))
    else:
        rows = [_check_one(lam, blk, which) for lam in parts]
    report = MatchReport(n, w, blk.rho, checked=len(rows), rows=rows)
    for row in rows:
        for key in ("G", "G-"):
            if row.get(key) is False:
                report.mismatches.append({"partition": row["partition"], "basis": key})
    return report


# -- ribbon structure on the Rouquier family -------------------------------------------------------


def ribbon_tilings(lam: Partition, mu: Partition, n: int) -> set[frozenset]:
    """All tilings of ``lam / mu`` by ``n``-ribbons, each a set of cell sets."""
    lam, mu = Partition(lam), Partition(mu)
    memo: dict[Partition, set[frozenset]] = {}

    def rec(nu: Partition) -> set[frozenset]:
        if nu == mu:
            return {frozenset()}
        if nu in memo:
            return memo[nu]
        out: set[frozenset] = set()
        for smaller, _ in removable_ribbons(nu, n):
            if smaller.contains(mu):
                cells = skew_cells(nu, smaller)
                for rest in rec(smaller):
                    out.add(rest | {cells})
        memo[nu] = out
        return out

    return rec(lam)


def _hook(i: int, n: int) -> Partition:
    return Partition([i + 1] + [1] * (n - i - 1))


def prop73_structure_check(lam, mu, blk: RouquierBlock) -> dict:
    """Check the single-ribbon structure between neighbours of the Rouquier family.

    For ``mu ⊂ lam`` with weights differing by one, the quotients should differ
    in a single component ``i`` and ``lam / mu`` should be the hook
    ``(i+1, 1^{n-i-1})`` with spin ``n-i-1``.
    """
    lam, mu = Partition(lam), Partition(mu)
    blk.require(lam)
    blk.require(mu)
    n = blk.n
    if n_weight(mu, n) != n_weight(lam, n) - 1 or not lam.contains(mu):
        raise DomainError("need mu ⊂ lam with weight(mu) = weight(lam) - 1")
    ql, qm = blk.quotient(lam), blk.quotient(mu)
    changed = [i for i in range(n) if ql[i] != qm[i]]
    ribbon = ribbon_of(lam, mu)
    report = {"lambda": str(lam), "mu": str(mu), "changed": changed,
              "shape": str(ribbon.shape()) if ribbon else None,
              "spin": ribbon.spin if ribbon else None}
    ok = len(changed) == 1 and ribbon is not None
    if ok:
        i = changed[0]
        ok = (ql[i].contains(qm[i]) and ribbon.shape() == _hook(i, n) and ribbon.spin == n - i - 1)
        report["colour"] = i
    report["ok"] = ok
    return report


def colour_layout(lam, blk: RouquierBlock) -> dict:
    """Unique ribbon tiling of ``lam / rho`` with each ribbon's colour and content range.

    The colour of a ribbon is the quotient component it contributes to.
    ``separated`` is True when every colour-``i`` ribbon lies strictly to the
    left (smaller contents) of every colour-``j`` ribbon for ``i < j``.
    """
    lam = Partition(lam)
    blk.require(lam)
    tilings = ribbon_tilings(lam, blk.rho, blk.n)
    report: dict = {"unique": len(tilings) == 1, "ribbons": []}
    if len(tilings) != 1:
        report["separated"] = False
        return report
    (tiling,) = tilings
    for cells in tiling:
        rows: dict[int, int] = {}
        for r, _ in cells:
            rows[r] = rows.get(r, 0) + 1
        shape = Partition(rows[r] for r in sorted(rows))
        colour = next((i for i in range(blk.n) if shape == _hook(i, blk.n)), None)
        contents = [c - r for r, c in cells]
        report["ribbons"].append({"colour": colour, "min_content": min(contents),
                                  "max_content": max(contents), "spin": len(rows) - 1})
    rib = report["ribbons"]
    report["separated"] = all(a["max_content"] < b["min_content"]
                              for a in rib for b in rib
                              if a["colour"] is not None and b["colour"] is not None
                              and a["colour"] < b["colour"])
    report["coloured"] = all(r["colour"] is not None for r in rib)
    return report
