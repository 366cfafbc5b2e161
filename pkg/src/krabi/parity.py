"""Sector decomposition of the truncated Fock space and parity operators.

For photon number k the Fock basis splits into k interleaved sectors: the
state with Fock index p belongs to sector l = (p mod k) + 1 at sector level
n = p // k, so that p = k*n + l - 1 with 1 <= l <= k. Both the number
operator and k-step lowering (a^k) preserve each sector, which is what lets
a per-sector sign operator act as a symmetry of the k-photon Rabi blocks:
flipping the sign of every odd sector level anticommutes with a^k and
commutes with a^dag a, hence swaps h_plus and h_minus.

The generalized parity assembled from those per-sector signs is diagonal in
the Fock basis, Hermitian, and squares to the identity. It is stored as an
integer sign vector; dense complex views are provided for matrix algebra.
For k = 1 it reduces to the bosonic parity diag((-1)^n) and for k = 2 to
the two-photon parity diag((-1)^(n(n-1)/2)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError


def _check_k_dim(k, dim) -> tuple[int, int]:
    for name, value in (("k", k), ("dim", dim)):
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise ValueError(f"{name} must be an integer, got {value!r}")
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if dim < 2 * k:
        raise ShapeError(f"dim must be at least 2*k = {2 * k}, got {dim}")
    return int(k), int(dim)


@dataclass(frozen=True)
class SectorDecomposition:
    """Split of the first ``dim`` Fock states into k interleaved sectors.

    ``members[l-1]`` lists the Fock indices of sector l in ascending order
    (these are k*n + l - 1 for n = 0, 1, ...). ``sector_of`` maps a Fock
    index p back to its (level, sector) pair (n, l). The map is a bijection
    onto all pairs with k*n + l - 1 < dim, so the sectors resolve the
    identity and are mutually orthogonal.
    """

    k: int
    dim: int
    members: tuple
    sector_of: dict

    @property
    def sector_dims(self) -> tuple:
        """Number of kept basis states per sector, indexed by l - 1."""
        return tuple(int(m.size) for m in self.members)

    def _check_l(self, l: int) -> int:
        if isinstance(l, bool) or not isinstance(l, (int, np.integer)):
            raise ValueError(f"sector label l must be an integer, got {l!r}")
        if not 1 <= l <= self.k:
            raise ValueError(f"sector label l must satisfy 1 <= l <= {self.k}, got {l}")
        return int(l)

    def projector_diagonal(self, l: int) -> np.ndarray:
        """Integer 0/1 diagonal of the orthogonal projector onto sector l."""
        l = self._check_l(l)
        diag = np.zeros(self.dim, dtype=np.int64)
        diag[self.members[l - 1]] = 1
        return diag

    def projector(self, l: int) -> np.ndarray:
        """Dense complex projector onto sector l."""
        return np.diag(self.projector_diagonal(l).astype(np.complex128))

    def compress(self, op: np.ndarray, l: int, m: int) -> np.ndarray:
        """Block of ``op`` mapping sector m into sector l, on sector indices."""
        l = self._check_l(l)
        m = self._check_l(m)
        return np.ascontiguousarray(op[np.ix_(self.members[l - 1], self.members[m - 1])])


def decompose(k: int, dim: int) -> SectorDecomposition:
    """Enumerate the k sectors of the first ``dim`` Fock states."""
    k, dim = _check_k_dim(k, dim)
    members = tuple(np.arange(l - 1, dim, k, dtype=np.int64) for l in range(1, k + 1))
    sector_of = {int(p): (int(p) // k, int(p) % k + 1) for p in range(dim)}
    return SectorDecomposition(k=k, dim=dim, members=members, sector_of=sector_of)


@dataclass(frozen=True)
class RestrictedOps:
    """Number and k-step lowering operators restricted to each sector.

    On sector l the number operator is diagonal with integer entries
    k*n + l - 1, kept here exactly as ``number_diagonals[l-1]``. The
    k-step lowering operator has the single nonzero band

        <n-1, l| a^k |n, l> = sqrt((k*n + l - 1)! / (k*(n-1) + l - 1)!)

    computed as a product of square roots of consecutive integers, which
    stays finite for dim up to about 1024. Both must agree with the
    projector-compressed a^dag a and a^k; that agreement is asserted in
    the test suite rather than assumed.
    """

    k: int
    dim: int
    sector_dims: tuple
    number_diagonals: tuple
    lowering_ops: tuple

    def number_op(self, l: int) -> np.ndarray:
        """Dense complex number operator on sector l."""
        self._check_l(l)
        return np.diag(self.number_diagonals[l - 1].astype(np.complex128))

    def lowering_op(self, l: int) -> np.ndarray:
        """Dense complex k-step lowering operator on sector l."""
        self._check_l(l)
        return self.lowering_ops[l - 1]

    def _check_l(self, l: int) -> None:
        if not 1 <= l <= self.k:
            raise ValueError(f"sector label l must satisfy 1 <= l <= {self.k}, got {l}")


def _band_amplitude(k: int, l: int, j: int) -> float:
    # sqrt((k*j + l - 1)! / (k*(j-1) + l - 1)!) as a product of square roots,
    # never forming the factorials themselves.
    lo = k * (j - 1) + l - 1
    hi = k * j + l - 1
    return float(np.prod(np.sqrt(np.arange(lo + 1, hi + 1, dtype=np.float64))))


def restricted_ops(sd: SectorDecomposition) -> RestrictedOps:
    """Formula-built per-sector number and k-step lowering operators."""
    k = sd.k
    number_diagonals = []
    lowering = []
    for l in range(1, k + 1):
        size = sd.sector_dims[l - 1]
        levels = np.arange(size, dtype=np.int64)
        number_diagonals.append(k * levels + (l - 1))
        a_l = np.zeros((size, size), dtype=np.complex128)
        for j in range(1, size):
            a_l[j - 1, j] = _band_amplitude(k, l, j)
        lowering.append(a_l)
    return RestrictedOps(
        k=k,
        dim=sd.dim,
        sector_dims=sd.sector_dims,
        number_diagonals=tuple(number_diagonals),
        lowering_ops=tuple(lowering),
    )


def partial_parity_signs(sd: SectorDecomposition, l: int) -> np.ndarray:
    """Integer signs (-1)^n on the levels of sector l."""
    l = sd._check_l(l)
    size = sd.sector_dims[l - 1]
    signs = np.ones(size, dtype=np.int64)
    signs[1::2] = -1
    return signs


def partial_parity(sd: SectorDecomposition, l: int) -> np.ndarray:
    """Dense sector-sized parity diag((-1)^n) on sector l."""
    return np.diag(partial_parity_signs(sd, l).astype(np.complex128))


def generalized_parity_signs(k: int, dim: int) -> np.ndarray:
    """Integer sign vector of the generalized parity on ``dim`` Fock states.

    Built literally from its definition: the Fock state at index
    p = k*n + l - 1 carries the sign (-1)^n of its sector level. The
    equivalent closed form (-1)^(p // k) is asserted against this
    constructor in the tests, not used to build it.
    """
    sd = decompose(k, dim)
    signs = np.zeros(dim, dtype=np.int64)
    for l in range(1, k + 1):
        indices = sd.members[l - 1]
        signs[indices] = partial_parity_signs(sd, l)
    return signs


def generalized_parity(k: int, dim: int) -> np.ndarray:
    """Dense complex generalized parity operator, diagonal, involutive."""
    return np.diag(generalized_parity_signs(k, dim).astype(np.complex128))


def _check_plain_dim(dim) -> int:
    if isinstance(dim, bool) or not isinstance(dim, (int, np.integer)):
        raise ValueError(f"dim must be an integer, got {dim!r}")
    if dim < 2:
        raise ShapeError(f"dim must be at least 2, got {dim}")
    return int(dim)


def bosonic_parity_signs(dim: int) -> np.ndarray:
    """Signs (-1)^n of the bosonic parity operator."""
    dim = _check_plain_dim(dim)
    signs = np.ones(dim, dtype=np.int64)
    signs[1::2] = -1
    return signs


def bosonic_parity(dim: int) -> np.ndarray:
    """Bosonic parity diag((-1)^n), the k = 1 generalized parity."""
    return np.diag(bosonic_parity_signs(dim).astype(np.complex128))


def two_photon_parity_signs(dim: int) -> np.ndarray:
    """Signs (-1)^(n(n-1)/2) of the two-photon parity operator.

    The phase exp(i*pi*n(n-1)/2) is real for every n because n(n-1)/2 is an
    integer, so the operator reduces to this sign vector.
    """
    dim = _check_plain_dim(dim)
    n = np.arange(dim, dtype=np.int64)
    return np.where((n * (n - 1) // 2) % 2 == 0, 1, -1).astype(np.int64)


def two_photon_parity(dim: int) -> np.ndarray:
    """Two-photon parity diag((-1)^(n(n-1)/2)), the k = 2 generalized parity."""
    return np.diag(two_photon_parity_signs(dim).astype(np.complex128))
