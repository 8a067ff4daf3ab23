"""Validated stabilizer groups, syndromes and the correctability criterion.

A stabilizer group is given by an ordered list of generators M_1..M_a that
pairwise commute, square to +1 and are independent over GF(2) as symplectic
rows.  The syndrome of an error E is the a-bit string whose r-th bit (M_1
leftmost) records whether E anticommutes with M_r; the code corrects all
errors of weight <= t without degeneracy iff those syndromes are pairwise
distinct over the errors of weight <= t.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .pauli import PauliOperator, commutes, identity, multiply, single, square_sign


class StabilizerValidationError(ValueError):
    """Base class for generator-list rejections."""


class NotAbelianError(StabilizerValidationError):
    def __init__(self, r: int, s: int):
        self.r, self.s = r, s
        super().__init__(f"generators {r} and {s} anticommute")


class SquaresToMinusOneError(StabilizerValidationError):
    def __init__(self, r: int):
        self.r = r
        super().__init__(f"generator {r} squares to -1")


class MinusIdentityError(StabilizerValidationError):
    def __init__(self, r: int):
        self.r = r
        super().__init__(f"a product of generators up to {r} equals -identity; the fixed space is empty")


class GroupTooLargeError(ValueError):
    pass


class DependentGeneratorsWarning(UserWarning):
    """Redundant (GF(2)-dependent but consistent) generators were dropped."""


@dataclass(frozen=True)
class StabilizerGroup:
    """Validated generator list; construct through :func:`validate`."""

    n: int
    generators: tuple[PauliOperator, ...]

    @property
    def a(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class Syndrome:
    """a-bit anticommutation record; bit of M_1 is the leftmost string bit."""

    value: int
    length: int

    def __str__(self) -> str:
        if self.length == 0:
            return ""
        return format(self.value, f"0{self.length}b")

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        if self.length != other.length:
            raise ValueError("syndrome length mismatch")
        return Syndrome(self.value ^ other.value, self.length)

    @classmethod
    def from_string(cls, s: str) -> "Syndrome":
        return cls(int(s, 2) if s else 0, len(s))


def validate(n: int, generators) -> StabilizerGroup:
    """Check the stabilizer conditions and return the validated group.

    Raises NotAbelianError, SquaresToMinusOneError or MinusIdentityError on
    bad input.  Generators that are GF(2)-dependent on earlier ones but
    consistent (subset product = +identity) are dropped with a
    DependentGeneratorsWarning instead of being rejected.
    """
    gens = list(generators)
    for r, g in enumerate(gens, 1):
        if g.n != n:
            raise ValueError(f"generator {r} acts on {g.n} qubits, expected {n}")
        if square_sign(g) == -1:
            raise SquaresToMinusOneError(r)
    for (r, g), (s, h) in itertools.combinations(enumerate(gens, 1), 2):
        if not commutes(g, h):
            raise NotAbelianError(r, s)

    # Independence over GF(2), tracking signed products so that a dependent
    # row can be classified as +identity (redundant) or -identity (empty code).
    echelon: dict[int, tuple[int, PauliOperator]] = {}
    kept = []
    dropped = []
    for r, g in enumerate(gens, 1):
        v = g.x_bits | (g.z_bits << n)
        prod = g
        while v:
            h = v.bit_length() - 1
            if h not in echelon:
                break
            row, row_prod = echelon[h]
            v ^= row
            prod = multiply(prod, row_prod)
        if v == 0:
            if prod.sign == -1:
                raise MinusIdentityError(r)
            dropped.append(r)
        else:
            echelon[v.bit_length() - 1] = (v, prod)
            kept.append(g)
    if dropped:
        warnings.warn(
            f"dropped dependent generators at positions {dropped}",
            DependentGeneratorsWarning,
            stacklevel=2,
        )
    return StabilizerGroup(n, tuple(kept))


def syndrome(group: StabilizerGroup, e: PauliOperator) -> Syndrome:
    """f(E): bit r is 0 iff E commutes with M_r.  f is a homomorphism."""
    if e.n != group.n:
        raise ValueError(f"error acts on {e.n} qubits, expected {group.n}")
    value = 0
    for g in group.generators:
        value = (value << 1) | (0 if commutes(g, e) else 1)
    return Syndrome(value, group.a)


def enumerate_elements(group: StabilizerGroup) -> list[PauliOperator]:
    """All 2^a signed subset products of the generators."""
    if group.a > 24:
        raise GroupTooLargeError(f"2^{group.a} elements is too many to enumerate")
    elems = [identity(group.n)]
    for g in group.generators:
        elems += [multiply(e, g) for e in elems]
    return elems


@dataclass(frozen=True)
class CorrectabilityReport:
    ok: bool
    t: int
    total_errors: int
    distinct_syndromes: int
    collision: Optional[tuple[PauliOperator, PauliOperator]] = None


def iter_errors(n: int, t: int) -> Iterator[PauliOperator]:
    """Pauli errors of weight <= t: weight ascending, then qubits, then XYZ."""
    yield identity(n)
    for ell in range(1, t + 1):
        for qubits in itertools.combinations(range(1, n + 1), ell):
            for letters in itertools.product("XYZ", repeat=ell):
                err = identity(n)
                for i, L in zip(qubits, letters):
                    err = multiply(err, single(n, i, L))
                yield err


def weight_one_syndromes(group: StabilizerGroup) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Syndrome values of (X_i, Y_i, Z_i) for all i at once.

    A single-qubit error anticommutes with M_r exactly when M_r carries the
    conjugate component on that qubit, so the syndromes are bit columns of
    the generators: f(X_i)_r = z-bit of M_r at i, f(Z_i)_r = x-bit at i.
    Returns int64 arrays (sx, sy, sz) indexed by i-1, M_1 as the high bit.
    Requires a <= 62 so the values fit an int64.
    """
    n, a = group.n, group.a
    if a > 62:
        raise ValueError("vectorized weight-1 syndromes need a <= 62")
    nbytes = (n + 7) // 8
    sx = np.zeros(n, dtype=np.int64)
    sz = np.zeros(n, dtype=np.int64)
    for r, g in enumerate(group.generators):
        w = 1 << (a - 1 - r)
        zcol = np.unpackbits(
            np.frombuffer(g.z_bits.to_bytes(nbytes, "little"), dtype=np.uint8),
            bitorder="little", count=n,
        )
        xcol = np.unpackbits(
            np.frombuffer(g.x_bits.to_bytes(nbytes, "little"), dtype=np.uint8),
            bitorder="little", count=n,
        )
        sx += zcol.astype(np.int64) * w
        sz += xcol.astype(np.int64) * w
    return sx, sx ^ sz, sz


def _iter_error_syndromes(group: StabilizerGroup, t: int):
    """(descriptor, syndrome value) pairs in iter_errors order.

    Weight-1 syndromes come from the vectorized bit columns, which keeps the
    t=1 scan O(n) cheap small-int work even at n = 2^16.
    """
    n = group.n
    yield (), 0
    if t >= 1:
        if group.a <= 62:
            sx, sy, sz = weight_one_syndromes(group)
            for i in range(1, n + 1):
                yield ((i, "X"),), int(sx[i - 1])
                yield ((i, "Y"),), int(sy[i - 1])
                yield ((i, "Z"),), int(sz[i - 1])
        else:
            for i in range(1, n + 1):
                for L in "XYZ":
                    yield ((i, L),), syndrome(group, single(n, i, L)).value
    for ell in range(2, t + 1):
        for qubits in itertools.combinations(range(1, n + 1), ell):
            for letters in itertools.product("XYZ", repeat=ell):
                err = identity(n)
                for i, L in zip(qubits, letters):
                    err = multiply(err, single(n, i, L))
                yield tuple(zip(qubits, letters)), syndrome(group, err).value


def _materialize(n: int, desc) -> PauliOperator:
    err = identity(n)
    for i, L in desc:
        err = multiply(err, single(n, i, L))
    return err


def check_correctability(group: StabilizerGroup, t: int) -> CorrectabilityReport:
    """Verify that f is injective on errors of weight <= t.

    A collision is a report outcome, not an exception; the first colliding
    pair in enumeration order is returned as the witness.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    seen: dict[int, tuple] = {}
    total = 0
    for desc, value in _iter_error_syndromes(group, t):
        total += 1
        if value in seen:
            first = _materialize(group.n, seen[value])
            second = _materialize(group.n, desc)
            return CorrectabilityReport(False, t, total, len(seen), (first, second))
        seen[value] = desc
    return CorrectabilityReport(True, t, total, len(seen))
