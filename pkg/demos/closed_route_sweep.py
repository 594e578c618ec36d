"""Compare G and G- with the closed eta/psi route on several Rouquier families.

Usage: python3 demos/closed_route_sweep.py [n,w ...]
"""

import sys
import time

from qfock.rouquier import verify_theorem1

pairs = [tuple(map(int, a.split(","))) for a in sys.argv[1:]] or [
    (2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (4, 2)]

for n, w in pairs:
    t0 = time.perf_counter()
    rep = verify_theorem1(n, w)
    status = "match" if rep.ok else f"{len(rep.mismatches)} mismatches"
    print(f"n={n} w={w} rho={rep.rho}: {rep.checked} partitions, {status}"
          f" [{time.perf_counter() - t0:.1f} s]")
