"""Brute-force reference implementations working directly on sets of cells.

Nothing here imports the package's combinatorics; these are slow, obvious
versions used to freeze and cross-check values.
"""

from __future__ import annotations

from itertools import product


def cells(lam):
    return {(r, c) for r, row in enumerate(lam, 1) for c in range(1, row + 1)}


def from_cells(cs):
    rows = {}
    for r, _ in cs:
        rows[r] = rows.get(r, 0) + 1
    return tuple(rows[r] for r in sorted(rows))


def is_diagram(cs):
    return all((r == 1 or (r - 1, c) in cs) and (c == 1 or (r, c - 1) in cs) for r, c in cs)


def is_ribbon(cs):
    """Connected skew set with no 2x2 square."""
    if not cs:
        return False
    if any({(r, c), (r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cs for r, c in cs):
        return False
    seen, todo = set(), [next(iter(cs))]
    while todo:
        r, c = todo.pop()
        if (r, c) in seen:
            continue
        seen.add((r, c))
        todo.extend(x for x in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)) if x in cs)
    return seen == cs


def rim_hooks(lam, n):
    """All (smaller partition, ribbon cells) with ribbon of size n removable from lam."""
    full = cells(lam)
    out = []
    # a removable ribbon is determined by its two ends; brute force over subsets on the rim
    rim = sorted(x for x in full if (x[0] + 1, x[1] + 1) not in full)
    from itertools import combinations
    for sub in combinations(rim, n):
        rest = full - set(sub)
        if is_diagram(rest) and is_ribbon(set(sub)):
            out.append((from_cells(rest), frozenset(sub)))
    return out


def core_by_stripping(lam, n):
    lam = tuple(lam)
    while True:
        hooks = rim_hooks(lam, n)
        if not hooks:
            return lam
        lam = hooks[0][0]


def sign_by_stripping(lam, n):
    """Product of (-1)^(rows-1) along one greedy peeling."""
    lam, sign = tuple(lam), 1
    while True:
        hooks = rim_hooks(lam, n)
        if not hooks:
            return sign
        smaller, rib = hooks[-1]
        sign *= (-1) ** (len({r for r, _ in rib}) - 1)
        lam = smaller


def addable_removable(lam, n, i):
    full = cells(lam)
    border = {(r, c) for r in range(1, len(lam) + 2) for c in range(1, (lam[0] if lam else 0) + 2)}
    add = sorted((x for x in border - full if is_diagram(full | {x}) and (x[1] - x[0]) % n == i),
                 key=lambda x: x[1])
    rem = sorted((x for x in full if is_diagram(full - {x}) and (x[1] - x[0]) % n == i),
                 key=lambda x: x[1])
    return add, rem


def partitions(m, maxpart=None):
    if maxpart is None:
        maxpart = m
    if m == 0:
        yield ()
        return
    for k in range(min(m, maxpart), 0, -1):
        for rest in partitions(m - k, k):
            yield (k,) + rest


def lr_bruteforce(lam, mu, nu):
    """Count semistandard fillings of lam/mu with content nu whose reverse reading word is a lattice word."""
    skew = sorted(cells(lam) - cells(mu))
    if len(skew) != sum(nu) or not cells(mu) <= cells(lam):
        return 0
    letters = range(1, len(nu) + 1)
    count = 0
    for fill in product(letters, repeat=len(skew)):
        T = dict(zip(skew, fill))
        if any(fill.count(k) != nu[k - 1] for k in letters):
            continue
        ok = all((r, c + 1) not in T or T[(r, c)] <= T[(r, c + 1)] for r, c in skew)
        ok = ok and all((r + 1, c) not in T or T[(r, c)] < T[(r + 1, c)] for r, c in skew)
        if not ok:
            continue
        word = [T[x] for x in sorted(skew, key=lambda x: (x[0], -x[1]))]
        seen = [0] * (len(nu) + 2)
        for a in word:
            seen[a] += 1
            if a > 1 and seen[a] > seen[a - 1]:
                ok = False
                break
        count += ok
    return count


def block_count(n, w):
    """sum over compositions k_1+...+k_n = w of p(k_1)...p(k_n)."""
    p = [sum(1 for _ in partitions(m)) for m in range(w + 1)]
    total = 0
    for ks in product(range(w + 1), repeat=n):
        if sum(ks) == w:
            prod = 1
            for k in ks:
                prod *= p[k]
            total += prod
    return total
