"""Weyl-group moves between blocks and the Scopes bijections.

A reflection ``sigma_i`` sends the block with core ``tau`` and weight ``w`` to
the block with core ``sigma_i(tau)`` and the same weight.  When ``w <= k_i``
the move is realised on partitions by removing every removable ``i``-node, and
the decomposition matrices of the two blocks agree after that relabelling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .canonical import canonical_basis, upper_basis_Gstar
from .fock import (
    AffineWeight,
    BlockId,
    FockVec,
    apply_E_divided,
    block_partitions,
    reflection_r,
    simple_root,
)
from .partitions import (
    EMPTY,
    Partition,
    core_coords,
    core_from_coords,
    crystal_e,
    is_core,
    n_core,
    n_weight,
    remove_node,
    removable_nodes,
    addable_nodes,
)
from .rouquier import rouquier_core

__all__ = [
    "ScopesError",
    "ScopesMove",
    "weyl_reflect_core",
    "weyl_reflect_core_by_weight",
    "scopes_k",
    "scopes_move",
    "regime_criteria",
    "scopes_bijection",
    "pi_by_crystal",
    "verify_scopes_invariance",
    "signed_reflection",
    "OrbitClass",
    "orbit_classes",
]


class ScopesError(ValueError):
    """Raised when ``w > k_i`` for a request that needs the Scopes regime."""


def _coords(tau, n: int) -> tuple[int, ...]:
    tau = Partition(tau)
    if not is_core(tau, n):
        raise ValueError(f"{tau} is not a {n}-core")
    return core_coords(tau, n).a


def weyl_reflect_core(tau, i: int, n: int) -> Partition:
    """``sigma_i(tau)`` by swapping runners on the abacus.

    For ``i != 0`` runners ``i`` and ``i+1`` trade their bead counts.  For
    ``i = 0`` the first and last runners trade, with the bead that wraps
    around moving one level.
    """
    a = list(_coords(tau, n))
    if not 0 <= i < n:
        raise ValueError(f"residue {i} outside 0..{n - 1}")
    if i:
        a[i - 1], a[i] = a[i], a[i - 1]
    else:
        a[0], a[-1] = a[-1] + 1, a[0] - 1
    return core_from_coords(a, n)


def weyl_reflect_core_by_weight(tau, i: int, n: int) -> Partition:
    """Same map, through the exact reflection of the weight ``sigma(Lambda_0)``."""
    b = BlockId(n, Partition(tau), 0)
    return b.affine_weight().reflect(i).as_block().core


def scopes_k(tau, i: int, n: int) -> int:
    a = _coords(tau, n)
    if not 0 <= i < n:
        raise ValueError(f"residue {i} outside 0..{n - 1}")
    return a[i] - a[i - 1] if i else a[0] - a[-1] - 1


@dataclass(frozen=True)
class ScopesMove:
    n: int
    tau: Partition
    i: int
    k_i: int
    target: Partition

    def admits(self, w: int) -> bool:
        return w <= self.k_i


def scopes_move(tau, i: int, n: int) -> ScopesMove:
    tau = Partition(tau)
    k = scopes_k(tau, i, n)
    # k_i also equals minus the pairing of the block weight with alpha_i
    assert k == -BlockId(n, tau, 0).affine_weight().pair(simple_root(i, n))
    return ScopesMove(n, tau, i, k, weyl_reflect_core(tau, i, n))


def regime_criteria(tau, i: int, w: int, n: int) -> tuple[bool, bool, bool]:
    """``(w <= k_i, (L - a_i, L - a_i) >= 1, L - a_i not a Fock weight)`` for ``L`` the block weight."""
    lam_w: AffineWeight = BlockId(n, Partition(tau), w).affine_weight()
    shifted = lam_w - simple_root(i, n)
    return (w <= scopes_k(tau, i, n), shifted.pair(shifted) >= 1, not shifted.in_fock_weights())


def _require_regime(lam: Partition, i: int, n: int) -> tuple[Partition, int, int]:
    tau = n_core(lam, n)
    k = scopes_k(tau, i, n)
    w = n_weight(lam, n)
    if w > k:
        raise ScopesError(f"outside the Scopes regime: weight {w} > k_{i} = {k}")
    return tau, w, k


def scopes_bijection(lam, i: int, n: int) -> Partition:
    """``pi_i(lam)``: delete all ``k_i`` removable ``i``-nodes of ``lam``."""
    lam = Partition(lam)
    _, _, k = _require_regime(lam, i, n)
    nodes = removable_nodes(lam, n, i)
    if len(nodes) != k or addable_nodes(lam, n, i):
        raise AssertionError(f"{lam} does not have the expected {k} removable {i}-nodes")
    # right to left keeps the remaining coordinates valid
    for nd in sorted(nodes, key=lambda x: -x[1]):
        lam = remove_node(lam, nd)
    return lam


def pi_by_crystal(lam, i: int, n: int) -> Partition:
    """``pi_i(lam)`` as ``k_i`` applications of the Kashiwara operator ``E~_i``."""
    lam = Partition(lam)
    _, _, k = _require_regime(lam, i, n)
    for _ in range(k):
        lam = crystal_e(lam, n, i)
        if lam is None:
            raise AssertionError("crystal operator ran out of removable nodes")
    return lam


def _mapping(tau: Partition, i: int, w: int, n: int) -> dict[Partition, Partition]:
    src = block_partitions(BlockId(n, tau, w))
    pi = {lam: scopes_bijection(lam, i, n) for lam in src}
    target = set(block_partitions(BlockId(n, weyl_reflect_core(tau, i, n), w)))
    if set(pi.values()) != target or len(target) != len(src):
        raise AssertionError("pi_i is not a bijection between the two blocks")
    return pi


def verify_scopes_invariance(tau, i: int, w: int, n: int, extra: bool = True) -> dict:
    """Compare the decomposition matrices of ``(tau, w)`` and ``(sigma_i tau, w)`` through ``pi_i``.

    With ``extra`` the report also covers the crystal route for ``pi_i``
    and how ``E_i^{(k)}`` and ``r_i`` act on the block.
    """
    tau = Partition(tau)
    move = scopes_move(tau, i, n)
    if not move.admits(w):
        raise ScopesError(f"outside the Scopes regime: w={w} > k_{i}={move.k_i}")
    pi = _mapping(tau, i, w, n)
    report: dict = {"n": n, "core": str(tau), "i": i, "w": w, "k_i": move.k_i,
                    "target": str(move.target), "size": len(pi)}
    checks: dict[str, bool] = {}
    b_src, b_dst = BlockId(n, tau, w), BlockId(n, move.target, w)
    for minus, name in ((False, "d"), (True, "e")):
        src, dst = canonical_basis(b_src, minus), canonical_basis(b_dst, minus)
        checks[name] = all(src.entry(lam, mu) == dst.entry(pi[lam], pi[mu])
                           for lam in pi for mu in pi)
    if extra:
        k = move.k_i
        checks["crystal"] = all(pi_by_crystal(lam, i, n) == mu for lam, mu in pi.items())
        checks["E_on_s"] = all(apply_E_divided(i, k, {lam: 1}, n) == FockVec({mu: 1})
                               for lam, mu in pi.items())
        checks["E_on_Gstar"] = all(
            apply_E_divided(i, k, upper_basis_Gstar(lam, n), n) == upper_basis_Gstar(mu, n)
            for lam, mu in pi.items())
        checks["reflection"] = all(
            reflection_r(i, {lam: 1}, n) == {mu: Fraction(1)} for lam, mu in pi.items())
        checks["regime"] = all(regime_criteria(tau, i, w, n))
    report["checks"] = checks
    report["ok"] = all(checks.values())
    return report


def signed_reflection(tau, i: int, w: int, n: int) -> list[tuple[Partition, Partition, int]]:
    """``r_i s(lam) = sign * s(mu)`` at ``v = 1`` for every ``lam`` in the block ``(tau, w)``.

    Works for any ``w``; the observed signs are returned, not interpreted.
    """
    out = []
    for lam in block_partitions(BlockId(n, Partition(tau), w)):
        img = reflection_r(i, {lam: 1}, n)
        if len(img) != 1:
            raise AssertionError(f"r_{i} s({lam}) is not a signed basis vector: {img}")
        ((mu, c),) = img.items()
        if abs(c) != 1:
            raise AssertionError(f"r_{i} s({lam}) has coefficient {c}")
        out.append((lam, mu, int(c)))
    return out


# -- orbit classes -----------------------------------------------------------------------


@dataclass
class OrbitClass:
    cores: list[Partition]
    rouquier: bool
    frontier: bool  # some admissible move leaves the explored region

    def to_json(self) -> dict:
        return {"cores": [str(c) for c in self.cores], "rouquier": self.rouquier,
                "frontier": self.frontier}


def orbit_classes(n: int, w: int, bound: int) -> list[OrbitClass]:
    """Classes of ``n``-cores of size ``<= bound`` linked by admissible reflections.

    ``tau`` and ``sigma_i(tau)`` are linked when ``w <= |k_i(tau)|``; along such
    a link the transition matrices of the weight-``w`` blocks agree.  The class
    holding the Rouquier core ``rho(w)`` is flagged.  Exploration is
    breadth-first from the empty core and stops at cores larger than ``bound``,
    so classes touching the boundary are marked as ``frontier``.
    """
    seen = {EMPTY}
    queue = deque([EMPTY])
    while queue:
        tau = queue.popleft()
        for i in range(n):
            nxt = weyl_reflect_core(tau, i, n)
            if sum(nxt) <= bound and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    parent = {t: t for t in seen}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    frontier_at = set()
    for tau in seen:
        for i in range(n):
            if w <= abs(scopes_k(tau, i, n)):
                nxt = weyl_reflect_core(tau, i, n)
                if nxt in parent:
                    parent[find(tau)] = find(nxt)
                else:
                    frontier_at.add(tau)
    groups: dict[Partition, list[Partition]] = {}
    for tau in seen:
        groups.setdefault(find(tau), []).append(tau)
    rho = rouquier_core(n, w) if w else None
    out = []
    for members in groups.values():
        members.sort(key=lambda p: (sum(p), tuple(p)))
        out.append(OrbitClass(members, rho in members if w else True,
                              any(t in frontier_at for t in members)))
    out.sort(key=lambda c: (sum(c.cores[0]), tuple(c.cores[0])))
    return out
