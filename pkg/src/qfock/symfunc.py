"""Schur-function calculus in one or several alphabets.

Littlewood-Richardson coefficients come from enumerating LR tableaux; a
second implementation (Jacobi-Trudi determinant plus Pieri) serves as an
oracle.  Elements of ``Sym(A_0, ..., A_{n-1})`` are ``SymVec`` maps from
multipartitions to Laurent polynomials, expanded on the orthonormal basis
``s_{lam^0}(A_0) ... s_{lam^{n-1}}(A_{n-1})``.

Three families of multi-alphabet products are provided, each by two
independent routes (a closed LR sum and a formal alphabet substitution):

* ``eta``:  ``s_{l0}(A_0) s_{l1}(A_1 - v A_0) ... s_{l(n-1)}(A_{n-1} - v A_{n-2})``
* ``psi``:  ``prod_j s_{lj}(v^-j A_0 + ... + v^-1 A_{j-1} + A_j)``
* ``phi``:  ``prod_j s_{lj}(A_j + v A_{j+1} + ... + v^(n-1-j) A_{n-1})``
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .laurent import Laurent, ONE, ZERO
from .partitions import (
    EMPTY,
    Partition,
    multipartitions_of,
    parse_partition,
    partition_key,
    partitions_of,
)

__all__ = [
    "SymVec",
    "schur_product",
    "schur_product_multi",
    "lr_coefficient",
    "lr_multi",
    "lr_coefficient_pieri",
    "pieri_h",
    "skew_schur_expand",
    "coproduct",
    "mn_character",
    "substitute",
    "substitute_powersum",
    "sym_multiply",
    "sym_conjugate",
    "conjugate_multi",
    "eta_lr_sum",
    "eta_expansion",
    "eta_direct",
    "psi_lr_sum",
    "psi_expansion",
    "psi_direct",
    "phi_expansion",
    "phi_direct",
    "gram_phi_eta",
    "cauchy_check",
    "partition_order_key",
    "multi_order_key",
]

Multi = tuple  # tuple of Partition


# -- Littlewood-Richardson coefficients ----------------------------------------------


def _lr_letter(shape: tuple[int, ...], size: int, prev: tuple[int, ...] | None):
    """Add ``size`` copies of the next letter as a horizontal strip on ``shape``.

    ``prev[r]`` is the number of previous-letter cells in row ``r``; the
    lattice condition asks that, for every row ``r``, the new letters in rows
    ``<= r`` do not outnumber previous letters in rows ``< r``.
    Yields ``(new_shape, per_row_counts)``.
    """
    rows = len(shape) + 1
    old = list(shape) + [0]

    def rec(r: int, left: int, placed: int, avail: int, acc: list[int]):
        if r == rows:
            if left == 0:
                new = tuple(p for p in (o + a for o, a in zip(old, acc)) if p)
                yield new, tuple(acc)
            return
        if prev is not None and r > 0:
            avail += prev[r - 1] if r - 1 < len(prev) else 0
        cap = left if r == 0 else min(left, old[r - 1] - old[r])
        if prev is not None:
            cap = min(cap, avail - placed)
        for a in range(cap, -1, -1):
            acc.append(a)
            yield from rec(r + 1, left - a, placed + a, avail, acc)
            acc.pop()

    yield from rec(0, size, 0, 0, [])


@lru_cache(maxsize=None)
def schur_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``s_mu * s_nu`` expanded on Schur functions, by LR-tableau enumeration."""
    mu, nu = Partition._make(mu), Partition._make(nu)
    states: dict[tuple[tuple[int, ...], tuple[int, ...] | None], int] = {(tuple(mu), None): 1}
    for part in nu:
        nxt: dict = {}
        for (shape, prev), mult in states.items():
            for new, counts in _lr_letter(shape, part, prev):
                key = (new, counts)
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    out: dict[Partition, int] = {}
    for (shape, _), mult in states.items():
        lam = Partition._make(shape)
        out[lam] = out.get(lam, 0) + mult
    return out


def lr_coefficient(mu, nu, lam) -> int:
    """``c^lam_{mu nu}``, the multiplicity of ``s_lam`` in ``s_mu s_nu``."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if sum(mu) + sum(nu) != sum(lam) or not lam.contains(mu) or not lam.contains(nu):
        return 0
    return schur_product(mu, nu).get(lam, 0)


@lru_cache(maxsize=None)
def _product_multi(factors: tuple[Partition, ...]) -> dict[Partition, int]:
    if not factors:
        return {EMPTY: 1}
    if len(factors) == 1:
        return {factors[0]: 1}
    head = _product_multi(factors[:-1])
    out: dict[Partition, int] = {}
    for lam, c in head.items():
        for mu, d in schur_product(lam, factors[-1]).items():
            out[mu] = out.get(mu, 0) + c * d
    return out


def schur_product_multi(factors: Sequence[Partition]) -> dict[Partition, int]:
    return _product_multi(tuple(Partition(f) for f in factors if f))


def lr_multi(factors: Sequence[Partition], lam) -> int:
    """Coefficient of ``s_lam`` in the product of the ``s_f`` for ``f`` in ``factors``."""
    lam = Partition(lam)
    if sum(map(sum, factors)) != sum(lam):
        return 0
    return schur_product_multi(factors).get(lam, 0)


@lru_cache(maxsize=None)
def _skew(lam: Partition, beta: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for eps in partitions_of(sum(lam) - sum(beta)):
        if lam.contains(eps):
            c = schur_product(beta, eps).get(lam, 0)
            if c:
                out.append((eps, c))
    return tuple(out)


def skew_schur_expand(lam, beta) -> dict[Partition, int]:
    """``s_{lam/beta} = sum_eps c^lam_{beta eps} s_eps``; empty unless ``beta ⊆ lam``."""
    lam, beta = Partition(lam), Partition(beta)
    if not lam.contains(beta):
        return {}
    return dict(_skew(lam, beta))


def _subpartitions(lam: Partition) -> Iterable[Partition]:
    def rec(i: int, cap: int):
        if i == len(lam):
            yield ()
            return
        for p in range(min(cap, lam[i]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in rec(i + 1, p):
                    yield (p,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition._make(parts)


@lru_cache(maxsize=None)
def coproduct(lam: Partition, parts: int) -> tuple[tuple[tuple[Partition, ...], int], ...]:
    """All ``((a_1, ..., a_parts), c)`` with ``c = c^lam_{a_1 ... a_parts} > 0``."""
    lam = Partition._make(lam)
    if parts == 1:
        return (((lam,), 1),)
    out = []
    for first in _subpartitions(lam):
        for eps, c in _skew(lam, first):
            for rest, d in coproduct(eps, parts - 1):
                out.append(((first,) + rest, c * d))
    return tuple(out)


# -- Pieri / Jacobi-Trudi oracle --------------------------------------------------------


def pieri_h(mu: Partition, k: int) -> list[Partition]:
    """Shapes ``lam`` with ``lam / mu`` a horizontal strip of size ``k`` (so ``s_mu h_k``)."""
    mu = Partition(mu)
    rows = len(mu) + 1
    old = list(mu) + [0]
    out = []

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                out.append(Partition._make(p for p in acc if p))
            return
        cap = left if r == 0 else min(left, old[r - 1] - old[r])
        for a in range(cap, -1, -1):
            acc.append(old[r] + a)
            rec(r + 1, left - a, acc)
            acc.pop()

    rec(0, k, [])
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def lr_coefficient_pieri(mu, nu, lam) -> int:
    """``c^lam_{mu nu}`` via ``s_nu = det(h_{nu_i - i + j})`` and repeated Pieri steps."""
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    ell = len(nu)
    total = 0
    for perm in permutations(range(ell)):
        degrees = [nu[i] - i + perm[i] for i in range(ell)]
        if any(d < 0 for d in degrees):
            continue
        current = {mu: 1}
        for d in degrees:
            nxt: dict[Partition, int] = {}
            for shape, c in current.items():
                for new in pieri_h(shape, d):
                    if lam.contains(new):
                        nxt[new] = nxt.get(new, 0) + c
            current = nxt
        total += _perm_sign(perm) * current.get(lam, 0)
    return total


# -- Murnaghan-Nakayama characters ----------------------------------------------------


@lru_cache(maxsize=None)
def mn_character(lam: Partition, rho: Partition) -> int:
    """Irreducible symmetric-group character ``chi^lam`` at cycle type ``rho``."""
    lam, rho = Partition._make(lam), Partition._make(rho)
    if sum(lam) != sum(rho):
        raise ValueError("character needs |lam| == |rho|")
    if not rho:
        return 1
    k = rho[0]
    rest = Partition._make(rho[1:])
    beads = [lam.part(i) - i for i in range(1, len(lam) + 1)]
    occupied = set(beads)
    total = 0
    for b in beads:
        t = b - k
        if t in occupied or t < -len(lam):
            continue
        height = sum(1 for x in beads if t < x < b)
        new = sorted((occupied - {b}) | {t}, reverse=True)
        mu = Partition._make(p for p in (x + i for i, x in enumerate(new, start=1)) if p > 0)
        total += (-1) ** height * mn_character(mu, rest)
    return total


def _z(rho: Partition) -> int:
    out = 1
    for part in set(rho):
        m = rho.count(part)
        out *= part ** m * factorial(m)
    return out


# -- SymVec ---------------------------------------------------------------------------


class SymVec(dict):
    """Finite sum of ``s_{lam}`` over multipartitions with Laurent coefficients."""

    def __init__(self, data: Mapping | Iterable = ()):
        super().__init__()
        items = data.items() if isinstance(data, Mapping) else data
        for key, c in items:
            key = tuple(k if isinstance(k, Partition) else Partition(k) for k in key)
            c = c if isinstance(c, Laurent) else Laurent(c)
            total = self.get(key, ZERO) + c
            if total:
                self[key] = total
            else:
                self.pop(key, None)

    def accumulate(self, other: Mapping, coeff: Laurent | int = 1) -> None:
        for key, c in other.items():
            total = self.get(key, ZERO) + c * coeff
            if total:
                self[key] = total
            else:
                self.pop(key, None)

    def __add__(self, other: "SymVec") -> "SymVec":
        out = SymVec(self)
        out.accumulate(other)
        return out

    def __sub__(self, other: "SymVec") -> "SymVec":
        out = SymVec(self)
        out.accumulate(other, -1)
        return out

    def scale(self, c: Laurent | int) -> "SymVec":
        out = SymVec()
        out.accumulate(self, c)
        return out

    def __mul__(self, other):
        if isinstance(other, SymVec):
            return sym_multiply(self, other)
        return NotImplemented

    def coefficient(self, key) -> Laurent:
        return self.get(tuple(Partition(k) for k in key), ZERO)

    def dot(self, other: Mapping) -> Laurent:
        """Bilinear pairing making the Schur basis orthonormal."""
        total = ZERO
        for key, c in self.items():
            d = other.get(key)
            if d is not None:
                total = total + c * d
        return total

    def support(self) -> list[Multi]:
        return sorted(self, key=multi_order_key, reverse=True)

    def __str__(self) -> str:
        if not self:
            return "0"
        chunks = []
        for key in self.support():
            factors = "".join(f"s{p}(A{j})" for j, p in enumerate(key) if p) or "1"
            c = self[key]
            chunks.append(factors if c == ONE else f"-{factors}" if c == -ONE else f"({c}){factors}")
        return " + ".join(chunks).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [{"multipartition": [str(p) for p in key], "laurent": self[key].to_json()}
                for key in self.support()]

    @classmethod
    def from_json(cls, data) -> "SymVec":
        return cls((tuple(parse_partition(p) for p in rec["multipartition"]),
                    Laurent.from_json(rec["laurent"])) for rec in data)


def partition_order_key(lam: Partition) -> tuple:
    """Total order on partitions refining size: size, then lexicographic."""
    return partition_key(lam)


def multi_order_key(key: Multi) -> tuple:
    """Reverse-lexicographic extension: the last component decides first."""
    return tuple(partition_key(p) for p in reversed(key))


def sym_multiply(x: Mapping, y: Mapping) -> SymVec:
    out = SymVec()
    for kx, cx in x.items():
        for ky, cy in y.items():
            c = cx * cy
            comps = [schur_product(a, b) for a, b in zip(kx, ky)]
            for choice in product(*(d.items() for d in comps)):
                mult = 1
                for _, m in choice:
                    mult *= m
                out.accumulate({tuple(p for p, _ in choice): c}, mult)
    return out


def conjugate_multi(key: Multi) -> Multi:
    """``(l^0, ..., l^{n-1})' = ((l^{n-1})', ..., (l^0)')``."""
    return tuple(p.conjugate() for p in reversed(key))


def sym_conjugate(x: Mapping) -> SymVec:
    """Semilinear involution: bar every coefficient and conjugate every multipartition."""
    return SymVec({conjugate_multi(k): c.bar() for k, c in x.items()})


def _unit(n: int) -> Multi:
    return (EMPTY,) * n


# -- formal alphabet substitution, route 1: skew expansions --------------------------

Term = tuple  # (sign, v_exponent, alphabet)


def _single(lam: Partition, term: Term, n: int) -> SymVec:
    sign, e, i = term
    k = sum(lam)
    shape = lam.conjugate() if sign < 0 else lam
    key = tuple(shape if j == i else EMPTY for j in range(n))
    return SymVec({key: Laurent.monomial(e * k, -1 if sign < 0 and k % 2 else 1)})


@lru_cache(maxsize=None)
def _substitute(lam: Partition, terms: tuple[Term, ...], n: int) -> SymVec:
    if not lam:
        return SymVec({_unit(n): 1})
    if not terms:
        return SymVec()
    if len(terms) == 1:
        return _single(lam, terms[0], n)
    out = SymVec()
    rest = terms[1:]
    for beta in _subpartitions(lam):
        head = _single(beta, terms[0], n)
        for eps, c in _skew(lam, beta):
            out.accumulate(sym_multiply(head, _substitute(eps, rest, n)), c)
    return out


def substitute(lam, terms: Sequence[Term], n: int) -> SymVec:
    """``s_lam`` evaluated on the formal alphabet ``sum_t sign_t v^(e_t) A_(i_t)``.

    Uses ``s_lam(X + Y) = sum c^lam_{beta eps} s_beta(X) s_eps(Y)``,
    ``s_lam(v^e X) = v^(e|lam|) s_lam(X)`` and ``s_lam(-X) = (-1)^|lam| s_lam'(X)``.
    """
    return _substitute(Partition(lam), tuple(tuple(t) for t in terms), n)


# -- formal alphabet substitution, route 2: power sums -----------------------------------


def substitute_powersum(lam, terms: Sequence[Term], n: int) -> SymVec:
    """Same value as ``substitute`` computed through ``s = sum chi p / z`` and the
    rule ``p_k(sign v^e A) = sign v^(ek) p_k(A)``.  Intended for small ``|lam|``."""
    lam = Partition(lam)
    m = sum(lam)
    # polynomial in p_k(A_i): key = per-alphabet cycle types, value = {exp: Fraction}
    total: dict[tuple, dict[int, Fraction]] = {}
    for rho in partitions_of(m):
        chi = mn_character(lam, rho)
        if not chi:
            continue
        poly: dict[tuple, dict[int, Fraction]] = {((),) * n: {0: Fraction(chi, _z(rho))}}
        for k in rho:
            nxt: dict[tuple, dict[int, Fraction]] = {}
            for key, coeffs in poly.items():
                for sign, e, i in terms:
                    new_key = tuple(tuple(sorted(key[j] + (k,), reverse=True)) if j == i else key[j]
                                    for j in range(n))
                    slot = nxt.setdefault(new_key, {})
                    for ex, c in coeffs.items():
                        slot[ex + e * k] = slot.get(ex + e * k, 0) + sign * c
            poly = nxt
        for key, coeffs in poly.items():
            slot = total.setdefault(key, {})
            for ex, c in coeffs.items():
                slot[ex] = slot.get(ex, 0) + c
    out: dict[Multi, dict[int, Fraction]] = {}
    for key, coeffs in total.items():
        per_alphabet = []
        for rho in key:
            rho = Partition._make(rho)
            per_alphabet.append([(mu, mn_character(mu, rho)) for mu in partitions_of(sum(rho))])
        for choice in product(*per_alphabet):
            mult = 1
            for _, x in choice:
                mult *= x
            if not mult:
                continue
            slot = out.setdefault(tuple(mu for mu, _ in choice), {})
            for ex, c in coeffs.items():
                slot[ex] = slot.get(ex, 0) + mult * c
    result = SymVec()
    for key, coeffs in out.items():
        terms_int = {}
        for ex, c in coeffs.items():
            if c:
                if c.denominator != 1:
                    raise ArithmeticError(f"non-integral coefficient {c} in power-sum route")
                terms_int[ex] = int(c)
        if terms_int:
            result.accumulate({key: Laurent(terms_int)})
    return result


# -- eta ----------------------------------------------------------------------------------


def _sizes(key: Multi) -> list[int]:
    return [sum(p) for p in key]


def eta_lr_sum(lam: Multi, mu: Multi) -> tuple[int, int]:
    """``(delta, S)`` with ``<s_lam, eta_mu> = (-v)^delta * S``.

    ``S`` is the chained sum of products ``c^{mu^j}_{a^j b^j} c^{lam^j}_{b^j (a^{j+1})'}``
    where ``|a^i| = sum_{j<i} (|lam^j| - |mu^j|)``, computed one link at a time.
    """
    n = len(lam)
    ls, ms = _sizes(lam), _sizes(mu)
    a = [sum(ls[j] - ms[j] for j in range(i)) for i in range(n + 1)]
    delta = sum((n - 1 - j) * (ls[j] - ms[j]) for j in range(n - 1))
    if a[n] != 0 or any(x < 0 for x in a) or any(ms[i] - a[i] < 0 for i in range(n)):
        return delta, 0
    states = {EMPTY: 1}
    for j in range(n):
        nxt: dict[Partition, int] = {}
        for alpha, weight in states.items():
            for beta, c1 in skew_schur_expand(mu[j], alpha).items():
                for alpha_next in partitions_of(a[j + 1]):
                    c2 = lr_coefficient(beta, alpha_next.conjugate(), lam[j])
                    if c2:
                        nxt[alpha_next] = nxt.get(alpha_next, 0) + weight * c1 * c2
        states = nxt
    return delta, states.get(EMPTY, 0)


def _signed_monomial(delta: int, s: int) -> Laurent:
    # (-v)^delta * s
    return Laurent.monomial(delta, -s if delta % 2 else s)


def eta_expansion(mu: Multi, n: int | None = None) -> SymVec:
    """``eta_mu`` on the Schur basis, coefficient by coefficient from the chained LR sum."""
    mu = tuple(Partition(p) for p in mu)
    n = len(mu) if n is None else n
    out = SymVec()
    for lam in multipartitions_of(sum(_sizes(mu)), n):
        delta, s = eta_lr_sum(lam, mu)
        if s:
            out[lam] = _signed_monomial(delta, s)
    return out


def eta_direct(mu: Multi, n: int | None = None, engine=None) -> SymVec:
    """``eta_mu`` by multiplying out the alphabet substitutions."""
    mu = tuple(Partition(p) for p in mu)
    n = len(mu) if n is None else n
    engine = engine or substitute
    out = SymVec({_unit(n): 1})
    for j, part in enumerate(mu):
        terms = [(1, 0, 0)] if j == 0 else [(1, 0, j), (-1, 1, j - 1)]
        out = sym_multiply(out, engine(part, terms, n))
    return out


# -- psi and phi ---------------------------------------------------------------------------


def psi_lr_sum(lam: Multi, mu: Multi) -> tuple[int, int]:
    """``(Delta, S)`` with ``<psi_lam(1/v), s_mu> = v^-Delta * S``.

    ``S`` sums ``prod_k c^{mu^k}_{a_k^k ... a_k^{n-1}} c^{lam^k}_{a_0^k ... a_k^k}``
    over triangular families ``a_i^j`` (``i <= j``) whose row sizes are ``|mu^i|``.
    """
    n = len(lam)
    ls, ms = _sizes(lam), _sizes(mu)
    Delta = sum(j * (ls[j] - ms[j]) for j in range(n))
    if sum(ls) != sum(ms):
        return Delta, 0
    columns = [coproduct(lam[j], j + 1) for j in range(n)]
    total = 0
    for choice in product(*columns):
        row_sizes = [0] * n
        for j, (parts, _) in enumerate(choice):
            for i, p in enumerate(parts):
                row_sizes[i] += sum(p)
        if row_sizes != ms:
            continue
        weight = 1
        for _, c in choice:
            weight *= c
        for k in range(n):
            weight *= lr_multi([choice[j][0][k] for j in range(k, n)], mu[k])
            if not weight:
                break
        total += weight
    return Delta, total


def psi_expansion(lam: Multi, n: int | None = None) -> SymVec:
    """``psi_lam(v^-1)`` on the Schur basis from the triangular LR sum."""
    lam = tuple(Partition(p) for p in lam)
    n = len(lam) if n is None else n
    out = SymVec()
    for mu in multipartitions_of(sum(_sizes(lam)), n):
        Delta, s = psi_lr_sum(lam, mu)
        if s:
            out[mu] = Laurent.monomial(-Delta, s)
    return out


def psi_direct(lam: Multi, n: int | None = None, engine=None) -> SymVec:
    lam = tuple(Partition(p) for p in lam)
    n = len(lam) if n is None else n
    engine = engine or substitute
    out = SymVec({_unit(n): 1})
    for j, part in enumerate(lam):
        terms = [(1, -(j - i), i) for i in range(j + 1)]
        out = sym_multiply(out, engine(part, terms, n))
    return out


def phi_expansion(lam: Multi, n: int | None = None) -> SymVec:
    """``phi_lam(v)`` obtained from ``psi`` of the conjugate multipartition through
    the semilinear conjugation ``s_mu -> s_mu'``."""
    lam = tuple(Partition(p) for p in lam)
    return sym_conjugate(psi_expansion(conjugate_multi(lam), n))


def phi_direct(lam: Multi, n: int | None = None, engine=None) -> SymVec:
    lam = tuple(Partition(p) for p in lam)
    n = len(lam) if n is None else n
    engine = engine or substitute
    out = SymVec({_unit(n): 1})
    for j, part in enumerate(lam):
        terms = [(1, i - j, i) for i in range(j, n)]
        out = sym_multiply(out, engine(part, terms, n))
    return out


def gram_phi_eta(n: int, degree: int) -> tuple[list[Multi], list[list[Laurent]]]:
    """Matrix ``[<phi_lam, eta_mu>]`` over all multipartitions of ``degree``."""
    keys = sorted(multipartitions_of(degree, n), key=multi_order_key, reverse=True)
    phis = {k: phi_expansion(k, n) for k in keys}
    etas = {k: eta_expansion(k, n) for k in keys}
    return keys, [[phis[a].dot(etas[b]) for b in keys] for a in keys]


def cauchy_check(n: int, degree_cap: int) -> bool:
    """Adjointness of ``phi`` and ``eta``, degree by degree up to ``degree_cap``.

    By the multi-alphabet Cauchy identity this is equivalent to
    ``sum eta_lam(A) phi_lam(B) = H(A_0 B_0) ... H(A_{n-1} B_{n-1})``.
    """
    for d in range(degree_cap + 1):
        keys, M = gram_phi_eta(n, d)
        for a in range(len(keys)):
            for b in range(len(keys)):
                if M[a][b] != (ONE if a == b else ZERO):
                    return False
    return True
