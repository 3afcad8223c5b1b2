#!/usr/bin/env python

"""
Dense brute-force oracles shared by the test modules.
"""

import io
import numpy as np
import pandas as pd
import pytest
from unruhcoh.fock.registry import PureState


def dense_vector(state: PureState) -> np.ndarray:
    "State vector over the full product of mode dimensions."
    dims = state.registry.dims
    vec = np.zeros(int(np.prod(dims)), dtype=np.complex128)
    if state.nnz:
        vec[np.ravel_multi_index(state.labels.T, dims)] = state.amps
    return vec


def dense_partial_trace(vec: np.ndarray, dims, keep) -> np.ndarray:
    "rho on the `keep` modes of a pure state vector."
    keep = sorted(keep)
    hidden = [i for i in range(len(dims)) if i not in keep]
    tensor = vec.reshape(dims)
    tensor = np.transpose(tensor, keep + hidden)
    dkeep = int(np.prod([dims[i] for i in keep]))
    mat = tensor.reshape(dkeep, -1)
    return mat @ mat.conj().T


def dense_trace_modes(rho: np.ndarray, dims, keep) -> np.ndarray:
    "Partial trace of a dense density matrix down to the `keep` modes."
    keep = sorted(keep)
    nmodes = len(dims)
    tensor = rho.reshape(list(dims) + list(dims))
    letters = "abcdefghijklmnop"
    rows = [letters[i] for i in range(nmodes)]
    cols = [letters[i] if i not in keep else letters[i].upper() for i in range(nmodes)]
    out = [letters[i] for i in keep] + [letters[i].upper() for i in keep]
    expr = "".join(rows) + "".join(cols) + "->" + "".join(out)
    dkeep = int(np.prod([dims[i] for i in keep]))
    return np.einsum(expr, tensor).reshape(dkeep, dkeep)


def dense_l1(rho: np.ndarray) -> float:
    "Sum of off-diagonal magnitudes."
    return float(np.abs(rho).sum() - np.abs(np.diag(rho)).sum())


def read_rows(output: str) -> pd.DataFrame:
    "CSV rows from CLI output that may also hold status lines."
    lines = output.splitlines()
    start = next(i for (i, line) in enumerate(lines) if line.startswith("family,"))
    return pd.read_csv(io.StringIO("\n".join(lines[start:])))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
