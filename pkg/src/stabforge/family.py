"""The n = 2^j code family saturating the quantum Hamming bound at t = 1.

For each qubit i a distinct (j+2)-bit syndrome value is assigned to X_i,
Z_i and Y_i = X_i xor Z_i: the first two bits say which letter it is
(01 = X, 10 = Z, 11 = Y), the last j bits encode i.  The X values count
i-1 in binary; the Z values count 0,0,1,1,2,2,... with the bitwise NOT
applied to one member of each pair (which member depends on the parity of
j).  Reading the assignment column-wise yields the a = j+2 generators of a
stabilizer group on n qubits that corrects one error and encodes
k = n - j - 2 qubits, meeting the quantum Hamming bound with equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import codewords, pauli
from .pauli import PauliOperator
from .stabilizer import StabilizerGroup, validate

CONSTRUCTION_NAME = "gottesman-hamming-saturating"

MIN_J = 3
MAX_J = 16


@dataclass(frozen=True)
class NumberAssignment:
    """Syndrome values for all single-qubit errors; arrays indexed by i-1."""

    j: int
    fx: np.ndarray
    fz: np.ndarray
    fy: np.ndarray

    @property
    def n(self) -> int:
        return 1 << self.j

    @property
    def bit_width(self) -> int:
        return self.j + 2

    def f_x(self, i: int) -> int:
        return int(self.fx[i - 1])

    def f_z(self, i: int) -> int:
        return int(self.fz[i - 1])

    def f_y(self, i: int) -> int:
        return int(self.fy[i - 1])

    def as_string(self, value: int) -> str:
        return format(value, f"0{self.bit_width}b")


def assign_numbers(j: int) -> NumberAssignment:
    """Assign the distinct (j+2)-bit numbers to X_i, Z_i, Y_i for n = 2^j."""
    if j < 3:
        raise ValueError(f"j must be at least 3, got {j}")
    n = 1 << j
    i = np.arange(1, n + 1, dtype=np.int64)
    fx = (0b01 << j) | (i - 1)
    zlow = (i - 1) >> 1
    if j % 2 == 0:
        invert = i % 2 == 1
    else:
        half = 1 << (j - 1)
        invert = np.where(i <= half, i % 2 == 1, i % 2 == 0)
    mask = (1 << j) - 1
    zlow = np.where(invert, ~zlow & mask, zlow)
    fz = (0b10 << j) | zlow
    fy = fx ^ fz
    for arr in (fx, fz, fy):
        arr.flags.writeable = False
    return NumberAssignment(j, fx, fz, fy)


def derive_generators(assignment: NumberAssignment) -> list[PauliOperator]:
    """Generators M_1..M_{j+2}: M_r anticommutes with a one-qubit error P
    exactly when bit r of f(P) is set, so its X/Z bits on qubit i are bit r
    of f(Z_i) / f(X_i).  All signs +1."""
    n = assignment.n
    width = assignment.bit_width
    gens = []
    for r in range(1, width + 1):
        shift = width - r
        xcol = ((assignment.fz >> shift) & 1).astype(np.uint8)
        zcol = ((assignment.fx >> shift) & 1).astype(np.uint8)
        x_bits = int.from_bytes(np.packbits(xcol, bitorder="little").tobytes(), "little")
        z_bits = int.from_bytes(np.packbits(zcol, bitorder="little").tobytes(), "little")
        gens.append(PauliOperator(n, x_bits, z_bits, 1))
    return gens


@dataclass(frozen=True)
class CodeSpec:
    """Persistent description of a code: parameters, generators, seeds."""

    n: int
    k: int
    j: int
    generators: tuple[PauliOperator, ...]
    seed_generators: tuple[PauliOperator, ...]
    construction: str = CONSTRUCTION_NAME
    version: int = 1

    def group(self) -> StabilizerGroup:
        return validate(self.n, self.generators)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "j": self.j,
            "generators": [pauli.format(g) for g in self.generators],
            "seed_generators": [pauli.format(g) for g in self.seed_generators],
            "construction": self.construction,
            "version": self.version,
        }

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def from_json_dict(cls, data: dict) -> "CodeSpec":
        try:
            return cls(
                n=int(data["n"]),
                k=int(data["k"]),
                j=int(data["j"]),
                generators=tuple(pauli.parse(s) for s in data["generators"]),
                seed_generators=tuple(pauli.parse(s) for s in data["seed_generators"]),
                construction=str(data.get("construction", CONSTRUCTION_NAME)),
                version=int(data.get("version", 1)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed code spec: {exc}") from exc

    @classmethod
    def load(cls, path) -> "CodeSpec":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed code spec file: {exc}") from exc
        return cls.from_json_dict(data)


def build_code(j: int) -> CodeSpec:
    """Construct and validate the family code for 3 <= j <= 16."""
    if not MIN_J <= j <= MAX_J:
        raise ValueError(f"j must lie in [{MIN_J}, {MAX_J}], got {j}")
    assignment = assign_numbers(j)
    gens = derive_generators(assignment)
    group = validate(assignment.n, gens)
    if group.a != j + 2:  # validation must keep every generator
        raise AssertionError("family generators were not independent")
    seeds = codewords.seed_generators(group)
    n = assignment.n
    return CodeSpec(
        n=n,
        k=n - j - 2,
        j=j,
        generators=tuple(gens),
        seed_generators=tuple(seeds),
    )


def letter_census(op: PauliOperator) -> tuple[int, int, int, int]:
    """Counts of (I, X, Y, Z) letters in an operator."""
    n_y = (op.x_bits & op.z_bits).bit_count()
    n_x = op.x_bits.bit_count() - n_y
    n_z = op.z_bits.bit_count() - n_y
    return op.n - n_x - n_y - n_z, n_x, n_y, n_z


def commutes_by_disagreement(p: PauliOperator, q: PauliOperator) -> bool:
    """Commutation test by counting qubits where both act and disagree."""
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    both = (p.x_bits | p.z_bits) & (q.x_bits | q.z_bits)
    differ = (p.x_bits ^ q.x_bits) | (p.z_bits ^ q.z_bits)
    return (both & differ).bit_count() % 2 == 0
