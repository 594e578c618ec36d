"""Scopes moves between weight spaces and the classes they generate."""

from qfock.fock import BlockId, block_partitions
from qfock.partitions import Partition
from qfock.scopes import orbit_classes, scopes_bijection, scopes_move, verify_scopes_invariance

tau, i, n = Partition([3, 1]), 2, 3
move = scopes_move(tau, i, n)
print(f"sigma_{i}({tau}) = {move.target}, k_{i} = {move.k_i}")
for lam in block_partitions(BlockId(n, tau, 2)):
    print(f"  pi_{i}: {str(lam):<12} -> {scopes_bijection(lam, i, n)}")
rep = verify_scopes_invariance(tau, i, 2, n)
print("checks:", ", ".join(f"{k}={v}" for k, v in rep["checks"].items()))

for w in (1, 2, 3):
    print(f"\nn=2, w={w}: classes of 2-cores up to size 21")
    for cls in orbit_classes(2, w, 21):
        tag = " (Rouquier class)" if cls.rouquier else ""
        tail = ", ..." if cls.frontier else ""
        print("  " + ", ".join(str(c) for c in cls.cores) + tail + tag)
