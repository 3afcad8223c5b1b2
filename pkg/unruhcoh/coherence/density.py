#!/usr/bin/env python

"""
Sparse reduced density matrices over occupation-label bases.

A DensityMatrix only indexes the labels that actually occur, so the
matrix is d x d with d the number of distinct visible labels rather
than the product of the visible mode dimensions.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple
import math
import numpy as np
import scipy.sparse as sp
from loguru import logger
from unruhcoh.errors import RegistryError
from unruhcoh.fock.registry import ModeRegistry, OccupationLabel, PureState

# off-diagonal entries below this fraction of the trace are dropped
DUST = 1e-16


@dataclass(frozen=True)
class DensityMatrix:
    """
    Hermitian matrix `matrix` (CSR) whose rows and columns are the
    occupation labels in `basis` (lexicographically sorted rows) over
    the modes of a visible-only `registry`.
    """
    registry: ModeRegistry
    basis: np.ndarray
    matrix: sp.csr_matrix

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    @property
    def trace(self) -> float:
        return math.fsum(self.matrix.diagonal().real.tolist())

    @property
    def entries(self) -> Dict[Tuple[OccupationLabel, OccupationLabel], complex]:
        "Upper triangle and diagonal keyed by label pairs; for small matrices."
        upper = sp.triu(self.matrix).tocoo()
        labels = [tuple(int(i) for i in row) for row in self.basis]
        return {
            (labels[i], labels[j]): complex(x)
            for (i, j, x) in zip(upper.row, upper.col, upper.data)
        }

    def to_dense(self) -> np.ndarray:
        "Dense matrix over the full product of visible mode dimensions."
        dims = self.registry.dims
        full = int(np.prod(dims))
        index = np.ravel_multi_index(self.basis.T, dims)
        coo = self.matrix.tocoo()
        dense = np.zeros((full, full), dtype=np.complex128)
        dense[index[coo.row], index[coo.col]] = coo.data
        return dense


def _assemble(registry, basis, matrix, trace_hint=None) -> DensityMatrix:
    "Symmetrize, remove numerical dust and freeze."
    matrix = sp.csr_matrix(matrix, dtype=np.complex128)
    matrix = (0.5 * (matrix + matrix.conj().T)).tocoo()
    trace = trace_hint if trace_hint is not None else float(
        matrix.data[matrix.row == matrix.col].real.sum())
    keep = (matrix.row == matrix.col) | (np.abs(matrix.data) >= DUST * trace)
    matrix = sp.csr_matrix(
        (matrix.data[keep], (matrix.row[keep], matrix.col[keep])),
        shape=matrix.shape,
    )
    matrix.sort_indices()
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    basis.flags.writeable = False
    return DensityMatrix(registry, basis, matrix)


def _check_keep(nmodes: int, keep: Iterable[int]) -> List[int]:
    keep = sorted(set(int(i) for i in keep))
    if not keep:
        raise RegistryError("keep must name at least one mode")
    if keep[0] < 0 or keep[-1] >= nmodes:
        raise RegistryError(f"keep {keep} is not a subset of modes 0..{nmodes - 1}")
    return keep


def reduce(state: PureState, keep: Iterable[int]) -> DensityMatrix:
    """
    Reduced density matrix of `state` on the modes `keep`.

    Amplitudes are grouped by the occupation label of the hidden modes,
    giving a sparse (visible x hidden) matrix V, and rho = V V^dagger is
    the sum of the outer products of its hidden-label columns.
    """
    nmodes = len(state.registry.modes)
    keep = _check_keep(nmodes, keep)
    hidden = [i for i in range(nmodes) if i not in keep]

    basis, vis_idx = np.unique(
        state.labels[:, keep], axis=0, return_inverse=True)
    if hidden:
        _, hid_idx = np.unique(
            state.labels[:, hidden], axis=0, return_inverse=True)
        nhidden = int(hid_idx.max()) + 1 if hid_idx.size else 0
    else:
        hid_idx = np.zeros(state.nnz, dtype=np.int64)
        nhidden = 1

    vmat = sp.csr_matrix(
        (state.amps, (vis_idx.ravel(), hid_idx.ravel())),
        shape=(basis.shape[0], nhidden),
    )
    rho = vmat @ vmat.conj().T
    out = _assemble(state.registry.select(keep), basis, rho)
    logger.debug(
        f"reduced {state.nnz} amplitudes over {nhidden} hidden labels "
        f"to d={out.dim}, nnz={out.nnz}")
    return out


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """
    Trace out every mode of `rho` not in `keep`: entries survive when
    the traced occupations of their row and column labels agree, and
    are summed onto the kept labels.
    """
    nmodes = len(rho.registry.modes)
    keep = _check_keep(nmodes, keep)
    traced = [i for i in range(nmodes) if i not in keep]
    if not traced:
        return rho

    coo = rho.matrix.tocoo()
    same = np.all(
        rho.basis[coo.row][:, traced] == rho.basis[coo.col][:, traced], axis=1)
    basis, inverse = np.unique(rho.basis[:, keep], axis=0, return_inverse=True)
    inverse = inverse.ravel()
    matrix = sp.csr_matrix(
        (coo.data[same], (inverse[coo.row[same]], inverse[coo.col[same]])),
        shape=(basis.shape[0], basis.shape[0]),
    )
    return _assemble(rho.registry.select(keep), basis, matrix, rho.trace)


def _party_modes(rho: DensityMatrix, parties: Iterable[int]) -> List[int]:
    modes = []
    for party in parties:
        modes.extend(rho.registry.modes_of(party))
    return modes


def trace_out_parties(rho: DensityMatrix, parties: Iterable[int]) -> DensityMatrix:
    "Partial trace over every visible mode of the given parties."
    parties = set(parties)
    traced = set(_party_modes(rho, parties))
    keep = [i for i in range(len(rho.registry.modes)) if i not in traced]
    if not keep:
        raise RegistryError("cannot trace out every party")
    return partial_trace(rho, keep)


def decohere(rho: DensityMatrix) -> DensityMatrix:
    "Diagonal part of rho in its occupation-label basis."
    diagonal = sp.diags(rho.matrix.diagonal().real.astype(np.complex128))
    matrix = sp.csr_matrix(diagonal)
    return DensityMatrix(rho.registry, rho.basis, matrix)


def default_subsystems(rho: DensityMatrix) -> List[List[int]]:
    "One subsystem per party, holding that party's visible modes."
    return [list(rho.registry.modes_of(p)) for p in rho.registry.parties]


def check_partition(rho: DensityMatrix, subsystems: Sequence[Sequence[int]]):
    flat = sorted(i for group in subsystems for i in group)
    if not subsystems or any(not group for group in subsystems):
        raise RegistryError("subsystems must be nonempty groups of modes")
    if flat != list(range(len(rho.registry.modes))):
        raise RegistryError(f"subsystems {subsystems} do not partition the modes")
    return [sorted(group) for group in subsystems]


def marginals(rho: DensityMatrix, subsystems=None) -> List[DensityMatrix]:
    "Reduced matrix of every subsystem, computed from rho."
    subsystems = check_partition(rho, subsystems or default_subsystems(rho))
    return [partial_trace(rho, group) for group in subsystems]


def marginal_product(rho: DensityMatrix, subsystems=None) -> DensityMatrix:
    """
    pi(rho) = tr(rho) * kron_k (rho_k / tr rho_k) over the subsystems.
    The marginals are normalized individually so that pi(rho) keeps the
    trace of a truncated rho.
    """
    subsystems = check_partition(rho, subsystems or default_subsystems(rho))
    parts = [partial_trace(rho, group) for group in subsystems]

    matrix = sp.csr_matrix(np.ones((1, 1), dtype=np.complex128))
    basis = np.zeros((1, 0), dtype=np.int64)
    for part in parts:
        matrix = sp.kron(matrix, part.matrix / part.trace, format="csr")
        basis = np.hstack([
            np.repeat(basis, part.dim, axis=0),
            np.tile(part.basis, (basis.shape[0], 1)),
        ])
    matrix = matrix * rho.trace

    # back to canonical mode order and lexicographic label order
    order = [i for group in subsystems for i in group]
    basis = basis[:, np.argsort(order)]
    perm = np.lexsort(basis.T[::-1])
    basis = basis[perm]
    matrix = matrix[perm][:, perm]
    return _assemble(rho.registry, basis, matrix, rho.trace)


def embed(rho: DensityMatrix, basis: np.ndarray) -> sp.csr_matrix:
    """
    rho re-indexed over a larger sorted basis that contains all of its
    labels.
    """
    rows = {tuple(row): i for (i, row) in enumerate(basis.tolist())}
    index = np.array([rows[tuple(row)] for row in rho.basis.tolist()], dtype=np.int64)
    coo = rho.matrix.tocoo()
    return sp.csr_matrix(
        (coo.data, (index[coo.row], index[coo.col])),
        shape=(basis.shape[0], basis.shape[0]),
    )


if __name__ == "__main__":

    from unruhcoh.fock.registry import make_registry

    REG = make_registry(2)
    PSI = PureState.from_dict(REG, {(0, 0): 0.5 ** 0.5, (1, 1): 0.5 ** 0.5})
    RHO = reduce(PSI, [0, 1])
    print(RHO.entries)
    print(trace_out_parties(RHO, [1]).to_dense())
    print(marginal_product(RHO).to_dense())
