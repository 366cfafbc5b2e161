"""Sector decomposition and the generalized parity operator.

Shows how the Fock basis splits into k interleaved sectors, that the
sector projectors resolve the identity, and that the generalized parity
assembled from the per-sector signs reduces to the bosonic parity at
k = 1 and to the two-photon parity at k = 2.
"""

import numpy as np

from krabi import (
    bosonic_parity_signs,
    decompose,
    generalized_parity_signs,
    restricted_ops,
    two_photon_parity_signs,
)

k, dim = 3, 12
sd = decompose(k, dim)

print(f"k = {k}, dim = {dim}")
for l in range(1, k + 1):
    print(f"  sector l={l}: Fock indices {sd.members[l - 1].tolist()}")

total = sum(sd.projector_diagonal(l) for l in range(1, k + 1))
print("projector diagonals sum to:", total.tolist(), "(resolution of identity)")

ops = restricted_ops(sd)
print("\nrestricted number operators (diagonals):")
for l in range(1, k + 1):
    print(f"  l={l}: {ops.number_diagonals[l - 1].tolist()}")

print("\ngeneralized parity signs by Fock index:")
for kk in (1, 2, 3):
    print(f"  k={kk}: {generalized_parity_signs(kk, dim).tolist()}")

print("\nspecial cases:")
print("  k=1 equals bosonic parity:",
      np.array_equal(generalized_parity_signs(1, dim), bosonic_parity_signs(dim)))
print("  k=2 equals two-photon parity:",
      np.array_equal(generalized_parity_signs(2, dim), two_photon_parity_signs(dim)))
