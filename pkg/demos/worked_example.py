"""G(12,4^2,3,1^2) for n = 3, computed two ways.

The generic route builds the bar involution of the weight space and applies
the triangular correction.  The closed route reads the same coefficients off
Littlewood-Richardson sums in the quotient.
"""

from qfock.canonical import canonical_vector
from qfock.partitions import Partition, n_sign
from qfock.rouquier import closed_d, phi_map, rouquier_block

lam = Partition([12, 4, 4, 3, 1, 1])
blk = rouquier_block(3, 3)
quotient = ", ".join(map(str, blk.quotient(lam)))
print(f"rho = {blk.rho}, quotient of {lam} = ({quotient}), sign = {n_sign(lam, 3)}")

g = canonical_vector(lam, 3)
print("\nG(lam) =", g)
print("\nPhi(G(lam)) =", phi_map(g, blk))

print(f"\n{'partition':<20} generic   closed")
for mu in g.support():
    print(f"{str(mu):<20} {str(g[mu]):<9} {closed_d(mu, lam, blk)}")
