"""Dense state-vector ground truth for small codes (n <= 12).

Everything here is independent of the bit-level algebra: states are 2^n
complex amplitude vectors, operators act by explicit linear algebra, and
code claims are checked with Gram matrices and numerical rank.  Amplitude
index = basis label as an int (qubit i at bit i-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codewords import FormalState, basis as codeword_basis
from .pauli import PauliOperator, letter
from .stabilizer import iter_errors, syndrome, validate

MAX_QUBITS = 12
ATOL = 1e-10

# the real single-qubit basis matrices; Y = X @ Z
MAT_I = np.array([[1.0, 0.0], [0.0, 1.0]])
MAT_X = np.array([[0.0, 1.0], [1.0, 0.0]])
MAT_Y = np.array([[0.0, -1.0], [1.0, 0.0]])
MAT_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
LETTER_MATRICES = {"I": MAT_I, "X": MAT_X, "Y": MAT_Y, "Z": MAT_Z}


class TooManyQubitsError(ValueError):
    pass


def _check_n(n: int) -> None:
    if n > MAX_QUBITS:
        raise TooManyQubitsError(f"dense oracle is capped at {MAX_QUBITS} qubits, got {n}")


@dataclass(frozen=True)
class StateVector:
    """Immutable dense state; the norm is reported, never silently enforced."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.n, self.amplitudes / nrm)


def basis_state(n: int, label: int) -> StateVector:
    _check_n(n)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[label] = 1.0
    return StateVector(n, amps)


def dense_from_formal(state: FormalState) -> StateVector:
    """Unit-normalized dense vector of a formal state; zero stays zero."""
    _check_n(state.n)
    amps = np.zeros(1 << state.n, dtype=np.complex128)
    for label, coeff in state.terms.items():
        amps[label] = coeff
    nrm = np.linalg.norm(amps)
    if nrm > 0:
        amps /= nrm
    return StateVector(state.n, amps)


def _and_parity(values: np.ndarray, mask: int) -> np.ndarray:
    v = values & mask
    v ^= v >> 32
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return v & 1


def apply_pauli(op: PauliOperator, v: StateVector) -> StateVector:
    """Exact action: label -> label ^ x_bits with sign from the Z-components."""
    if op.n != v.n:
        raise ValueError("qubit count mismatch")
    idx = np.arange(1 << v.n, dtype=np.int64)
    signs = 1.0 - 2.0 * _and_parity(idx, op.z_bits)
    out = np.empty_like(v.amplitudes)
    out[idx ^ op.x_bits] = op.sign * signs * v.amplitudes
    return StateVector(v.n, out)


def apply_single_qubit(matrix, i: int, v: StateVector) -> StateVector:
    """Apply an arbitrary 2x2 complex matrix (not necessarily unitary) to qubit i."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if not 1 <= i <= v.n:
        raise ValueError(f"qubit index {i} out of range 1..{v.n}")
    block = 1 << (i - 1)
    cube = v.amplitudes.reshape(-1, 2, block)
    out = np.einsum("ab,xbz->xaz", m, cube).reshape(-1)
    return StateVector(v.n, out)


def pauli_matrix(op: PauliOperator) -> np.ndarray:
    """Dense 2^n x 2^n matrix of op (Kronecker product, qubit n first)."""
    _check_n(op.n)
    m = np.array([[1.0]])
    for i in range(op.n, 0, -1):
        m = np.kron(m, LETTER_MATRICES[letter(op, i)])
    return op.sign * m


def gram(states: Sequence[StateVector]) -> np.ndarray:
    """Conjugate-symmetric matrix of inner products <psi_i | psi_j>."""
    if not states:
        return np.zeros((0, 0), dtype=np.complex128)
    n = states[0].n
    if any(s.n != n for s in states):
        raise ValueError("states act on different qubit counts")
    v = np.stack([s.amplitudes for s in states])
    return v.conj() @ v.T


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    num_vectors: int
    rank: int
    dimension: int
    stabilization_ok: bool
    orthogonality_ok: bool
    rank_ok: bool
    witness: tuple | None = None

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [
            f"oracle verification: {status}",
            f"  stabilization: {'ok' if self.stabilization_ok else 'FAIL'}",
            f"  orthogonality: {'ok' if self.orthogonality_ok else 'FAIL'}",
            f"  rank: {self.rank}/{self.num_vectors} in dimension {self.dimension}"
            f" ({'ok' if self.rank_ok else 'FAIL'})",
        ]
        if self.witness is not None:
            e, i, e2, i2 = self.witness
            lines.append(f"  witness: <{e} psi_{i} | {e2} psi_{i2}> != 0")
        return "\n".join(lines)


def verify_code(code, t: int) -> VerificationReport:
    """Exhaustive dense check of a code against all errors of weight <= t.

    Builds the 2^k basis vectors and verifies that (i) every generator fixes
    every basis vector, (ii) error images are orthogonal whenever syndromes
    or logical indices differ, and (iii) the whole image collection has full
    numerical rank.
    """
    _check_n(code.n)
    group = validate(code.n, code.generators)
    states = [dense_from_formal(s) for s in codeword_basis(group, code.seed_generators)]

    stab_ok = all(
        np.allclose(apply_pauli(g, s).amplitudes, s.amplitudes, atol=ATOL)
        for g in group.generators
        for s in states
    )

    errors = list(iter_errors(code.n, t))
    images = []
    meta = []
    for e in errors:
        sval = syndrome(group, e).value
        for i, s in enumerate(states):
            images.append(apply_pauli(e, s).amplitudes)
            meta.append((e, sval, i))
    v = np.stack(images)
    g = v.conj() @ v.T

    num = len(images)
    svals = np.array([m[1] for m in meta])
    lidx = np.array([m[2] for m in meta])
    must_vanish = (svals[:, None] != svals[None, :]) | (lidx[:, None] != lidx[None, :])
    violations = must_vanish & (np.abs(g) > ATOL)
    orth_ok = not violations.any()
    witness = None
    if not orth_ok:
        row, col = map(int, np.argwhere(violations)[0])
        e_r, _, i_r = meta[row]
        e_c, _, i_c = meta[col]
        witness = (str(e_r), i_r, str(e_c), i_c)

    rank = int(np.linalg.matrix_rank(v, tol=ATOL))
    rank_ok = rank == num
    return VerificationReport(
        ok=stab_ok and orth_ok and rank_ok,
        num_vectors=num,
        rank=rank,
        dimension=1 << code.n,
        stabilization_ok=stab_ok,
        orthogonality_ok=orth_ok,
        rank_ok=rank_ok,
        witness=witness,
    )
