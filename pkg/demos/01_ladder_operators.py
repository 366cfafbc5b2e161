"""Truncated ladder operators and what the cutoff does to them.

Builds a, a^dag and the number operator on a small Fock space, shows the
k-step lowering amplitudes against the exact factorial formula, and
locates the single matrix entry where the truncation is visible.
"""

import math

import numpy as np

from krabi import annihilation, creation, number, power_k

dim = 8
a = annihilation(dim)
adag = creation(dim)

print(f"annihilation operator, dim = {dim} (real part, zeros blank):")
for row in a.real:
    print("  " + " ".join(f"{x:6.3f}" if x else "      " for x in row))

print("\nnumber operator diagonal:", np.diag((adag @ a).real).round(12).tolist())

comm = a @ adag - adag @ a
print("\ncommutator [a, a^dag] diagonal:", np.diag(comm.real).round(12).tolist())
print("truncation shows up only in the last entry, which is -(dim-1) =", -(dim - 1))

print("\nk-step lowering amplitudes <n-k| a^k |n> vs sqrt(n!/(n-k)!):")
for k in (2, 3):
    a_k = power_k(a, k)
    for n in (k, k + 1, dim - 1):
        exact = math.sqrt(math.factorial(n) // math.factorial(n - k))
        print(f"  k={k}, n={n}: built {a_k[n - k, n].real:.12f}  exact {exact:.12f}")
