#!/usr/bin/env python

"""
Labeled multimode Hilbert-space layout and the sparse pure-state
representation used by every other module.

A party is either inertial (one qubit mode) or accelerated (one
Rindler-I and one Rindler-II mode of equal dimension n_max + 2).
Mode order is canonical: parties ascending, and for an accelerated
party Rindler-I immediately precedes Rindler-II.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union
import math
import numpy as np
from unruhcoh.errors import RegistryError

# a tuple of occupations, one per mode
OccupationLabel = Tuple[int, ...]

# amplitudes below this magnitude are dropped on construction
UNDERFLOW = 1e-300


class RoleKind(Enum):
    inertial = "inertial"
    rindler_1 = "rindler-I"
    rindler_2 = "rindler-II"


# sort key of a role within a party
_ROLE_ORDER = {
    RoleKind.inertial: 0,
    RoleKind.rindler_1: 1,
    RoleKind.rindler_2: 2,
}


@dataclass(frozen=True)
class ModeRole:
    kind: RoleKind
    party: int

    def __str__(self):
        if self.kind == RoleKind.inertial:
            return f"{self.party}"
        suffix = "I" if self.kind == RoleKind.rindler_1 else "II"
        return f"{self.party}_{suffix}"


@dataclass(frozen=True)
class Mode:
    role: ModeRole
    dim: int


@dataclass(frozen=True)
class ModeRegistry:
    """
    Ordered modes with their roles and local dimensions. A registry
    with visible_only=True is a view after tracing (accelerated parties
    then carry only their Rindler-I mode).
    """
    modes: Tuple[Mode, ...]
    visible_only: bool = False

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))
        if not self.modes:
            raise RegistryError("a registry needs at least one mode")

        keys = [(m.role.party, _ROLE_ORDER[m.role.kind]) for m in self.modes]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise RegistryError("modes are not in canonical order")

        for mode in self.modes:
            if mode.role.party < 0:
                raise RegistryError(f"negative party id {mode.role.party}")
            if mode.role.kind == RoleKind.inertial and mode.dim != 2:
                raise RegistryError(
                    f"inertial mode of party {mode.role.party} has dim "
                    f"{mode.dim}, expected 2")
            if mode.dim < 2:
                raise RegistryError(f"mode {mode.role} has dim {mode.dim} < 2")

        # pairing of Rindler modes only holds before tracing
        for party in self.parties:
            kinds = {m.role.kind: m.dim for m in self.modes if m.role.party == party}
            if RoleKind.inertial in kinds and len(kinds) > 1:
                raise RegistryError(f"party {party} is both inertial and accelerated")
            if self.visible_only:
                continue
            if RoleKind.rindler_1 in kinds or RoleKind.rindler_2 in kinds:
                if kinds.get(RoleKind.rindler_1) != kinds.get(RoleKind.rindler_2):
                    raise RegistryError(
                        f"party {party} needs equal Rindler-I/II dimensions")

    @classmethod
    def single(cls, party: int, n_max: Optional[int] = None) -> "ModeRegistry":
        "Registry of one party: inertial if n_max is None, else accelerated."
        if n_max is None:
            return cls((Mode(ModeRole(RoleKind.inertial, party), 2),))
        if n_max < 0:
            raise RegistryError(f"n_max must be >= 0, got {n_max}")
        return cls((
            Mode(ModeRole(RoleKind.rindler_1, party), n_max + 2),
            Mode(ModeRole(RoleKind.rindler_2, party), n_max + 2),
        ))

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(m.dim for m in self.modes)

    @property
    def parties(self) -> Tuple[int, ...]:
        return tuple(sorted({m.role.party for m in self.modes}))

    @property
    def party_count(self) -> int:
        return len(self.parties)

    @property
    def accelerated(self) -> Tuple[int, ...]:
        return tuple(sorted({
            m.role.party for m in self.modes
            if m.role.kind != RoleKind.inertial
        }))

    def modes_of(self, party: int) -> Tuple[int, ...]:
        "Indices of the modes belonging to a party."
        idxs = tuple(
            i for (i, m) in enumerate(self.modes) if m.role.party == party)
        if not idxs:
            raise RegistryError(f"unknown party {party}")
        return idxs

    def visible_modes(self) -> Tuple[int, ...]:
        "Indices of every mode that is not Rindler-II."
        return tuple(
            i for (i, m) in enumerate(self.modes)
            if m.role.kind != RoleKind.rindler_2
        )

    def party_groups(self) -> list:
        "Mode indices grouped per party, in party order."
        return [list(self.modes_of(p)) for p in self.parties]

    def select(self, idxs: Iterable[int]) -> "ModeRegistry":
        "Sub-registry of the given mode indices (a visible-only view)."
        idxs = sorted(set(idxs))
        if not idxs or idxs[0] < 0 or idxs[-1] >= len(self.modes):
            raise RegistryError(f"mode indices {idxs} not in registry")
        return ModeRegistry(tuple(self.modes[i] for i in idxs), visible_only=True)

    def __str__(self):
        inner = ", ".join(f"{m.role}(dim{m.dim})" for m in self.modes)
        return f"ModeRegistry[{inner}]"


def make_registry(
    parties: int,
    accelerated: Iterable[int] = (),
    n_max: Union[int, Mapping[int, int], None] = None,
    ) -> ModeRegistry:
    """
    Build the canonical registry for `parties` parties of which the ids
    in `accelerated` carry Rindler-I/II pairs of dimension n_max + 2.
    n_max is a single cutoff or a per-party mapping.
    """
    if parties < 1:
        raise RegistryError("need at least one party")
    accelerated = list(accelerated)
    if len(set(accelerated)) != len(accelerated):
        raise RegistryError(f"duplicate party in accelerated set {accelerated}")
    for party in accelerated:
        if not 0 <= party < parties:
            raise RegistryError(f"accelerated party {party} out of range")

    modes = []
    for party in range(parties):
        if party in accelerated:
            cutoff = n_max[party] if isinstance(n_max, Mapping) else n_max
            if cutoff is None:
                raise RegistryError(f"no n_max given for party {party}")
            modes.extend(ModeRegistry.single(party, cutoff).modes)
        else:
            modes.extend(ModeRegistry.single(party).modes)
    return ModeRegistry(tuple(modes))


@dataclass(frozen=True)
class PureState:
    """
    Sparse pure state: rows of `labels` (nnz x n_modes occupations) with
    complex amplitudes `amps`. Duplicate labels are summed and rows are
    kept in lexicographic order, so equal states compare bit-for-bit.
    """
    registry: ModeRegistry
    labels: np.ndarray
    amps: np.ndarray

    def __post_init__(self):
        nmodes = len(self.registry.modes)
        labels = np.asarray(self.labels, dtype=np.int64).reshape(-1, nmodes)
        amps = np.asarray(self.amps, dtype=np.complex128).ravel()
        if labels.shape[0] != amps.shape[0]:
            raise RegistryError("labels and amplitudes differ in length")

        # bounds check on every stored label
        dims = np.asarray(self.registry.dims, dtype=np.int64)
        if labels.size and ((labels < 0).any() or (labels >= dims).any()):
            raise RegistryError("occupation label exceeds a mode dimension")

        # merge duplicates into canonical order
        if labels.shape[0]:
            labels, inverse = np.unique(labels, axis=0, return_inverse=True)
            merged = np.zeros(labels.shape[0], dtype=np.complex128)
            np.add.at(merged, inverse.ravel(), amps)
            amps = merged

        # underflow guard
        keep = np.abs(amps) > UNDERFLOW
        labels = labels[keep]
        amps = amps[keep]
        labels.flags.writeable = False
        amps.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_dict(
        cls,
        registry: ModeRegistry,
        amplitudes: Mapping[OccupationLabel, complex],
        ) -> "PureState":
        labels = list(amplitudes.keys())
        amps = [amplitudes[i] for i in labels]
        return cls(registry, np.array(labels, dtype=np.int64), np.array(amps))

    @classmethod
    def basis(cls, registry: ModeRegistry, label: Sequence[int]) -> "PureState":
        "A single occupation-number basis state."
        return cls(registry, np.array([label], dtype=np.int64), np.array([1.0]))

    @property
    def nnz(self) -> int:
        return int(self.amps.shape[0])

    @property
    def amplitudes(self) -> Dict[OccupationLabel, complex]:
        "Sparse map view; meant for small states."
        return {
            tuple(int(i) for i in row): complex(amp)
            for (row, amp) in zip(self.labels, self.amps)
        }

    def scaled(self, factor: complex) -> "PureState":
        return PureState(self.registry, self.labels, self.amps * factor)

    def __add__(self, other: "PureState") -> "PureState":
        if other.registry != self.registry:
            raise RegistryError("cannot add states over different registries")
        return PureState(
            self.registry,
            np.concatenate([self.labels, other.labels]),
            np.concatenate([self.amps, other.amps]),
        )


def qubit(party: int, bit: int) -> PureState:
    "Inertial |0> or |1> of one party."
    return PureState.basis(ModeRegistry.single(party), (bit,))


def tensor(a: PureState, b: PureState) -> PureState:
    """
    Tensor product of states over disjoint parties. Output modes are
    put back in canonical order; nnz(out) = nnz(a) * nnz(b) up to the
    underflow guard.
    """
    shared = set(a.registry.parties) & set(b.registry.parties)
    if shared:
        raise RegistryError(f"party id collision in tensor: {sorted(shared)}")

    na, nb = a.nnz, b.nnz
    labels = np.hstack([
        np.repeat(a.labels, nb, axis=0),
        np.tile(b.labels, (na, 1)),
    ])
    amps = np.repeat(a.amps, nb) * np.tile(b.amps, na)

    # restore canonical mode order
    modes = a.registry.modes + b.registry.modes
    order = sorted(
        range(len(modes)),
        key=lambda i: (modes[i].role.party, _ROLE_ORDER[modes[i].role.kind]),
    )
    registry = ModeRegistry(
        tuple(modes[i] for i in order),
        visible_only=a.registry.visible_only or b.registry.visible_only,
    )
    return PureState(registry, labels[:, order], amps)


def norm_sq(state: PureState) -> float:
    "Sum of squared amplitude magnitudes, compensated."
    return math.fsum((np.abs(state.amps) ** 2).tolist())


if __name__ == "__main__":

    REG = make_registry(3, {2}, n_max=4)
    print(REG)
    PSI = tensor(qubit(0, 0), qubit(1, 1))
    print(PSI.amplitudes, norm_sq(PSI))
