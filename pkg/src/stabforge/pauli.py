"""Exact sign-tracking algebra of the n-qubit Pauli group.

Operators are stored in binary-symplectic form: two n-bit integers
``x_bits`` and ``z_bits`` plus a sign in {+1, -1}.  Bit ``i-1`` of
``x_bits`` (``z_bits``) is set iff the operator has an X (Z) component
on qubit ``i``; qubit indices are 1-based in every interface.  The
represented operator is::

    sign * prod_i X_i^{x_i} Z_i^{z_i}

with the per-qubit convention Y := X*Z, i.e. the real matrix
[[0, -1], [1, 0]].  All four basis matrices are real, so products only
ever pick up signs, never imaginary phases.

Text form: an explicit "+" or "-" followed by one character per qubit
from {I, X, Y, Z}, qubit 1 leftmost, e.g. "+XIXIZYZY".
"""

from __future__ import annotations

from dataclasses import dataclass

LETTERS = "IXYZ"

# (x_bit, z_bit) per letter
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {v: k for k, v in _LETTER_BITS.items()}


@dataclass(frozen=True)
class PauliOperator:
    """Immutable n-qubit Pauli group element; safe to share across tasks."""

    n: int
    x_bits: int
    z_bits: int
    sign: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"qubit count must be positive, got {self.n}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.x_bits < 0 or self.x_bits >> self.n:
            raise ValueError("x_bits out of range for n qubits")
        if self.z_bits < 0 or self.z_bits >> self.n:
            raise ValueError("z_bits out of range for n qubits")

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        return format(self)


def identity(n: int) -> PauliOperator:
    """The +1 identity on n qubits."""
    return PauliOperator(n, 0, 0, 1)


def single(n: int, i: int, letter: str) -> PauliOperator:
    """Single-qubit X_i, Y_i or Z_i on n qubits (1-based i)."""
    if not 1 <= i <= n:
        raise ValueError(f"qubit index {i} out of range 1..{n}")
    if letter not in ("X", "Y", "Z"):
        raise ValueError(f"letter must be X, Y or Z, got {letter!r}")
    x, z = _LETTER_BITS[letter]
    bit = 1 << (i - 1)
    return PauliOperator(n, x * bit, z * bit, 1)


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    """Product PQ.

    Commuting P's Z-components past Q's X-components gives one -1 per
    overlapping qubit, hence sign = p.sign * q.sign * (-1)^popcount(p.z & q.x).
    """
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    swaps = (p.z_bits & q.x_bits).bit_count()
    sign = p.sign * q.sign * (1 if swaps % 2 == 0 else -1)
    return PauliOperator(p.n, p.x_bits ^ q.x_bits, p.z_bits ^ q.z_bits, sign)


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """True iff PQ = QP; signs are irrelevant."""
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    return ((p.x_bits & q.z_bits).bit_count() + (p.z_bits & q.x_bits).bit_count()) % 2 == 0


def weight(p: PauliOperator) -> int:
    """Number of qubits on which p acts non-trivially."""
    return (p.x_bits | p.z_bits).bit_count()


def square_sign(p: PauliOperator) -> int:
    """Sign of p*p: +1 iff the number of Y positions is even."""
    return 1 if (p.x_bits & p.z_bits).bit_count() % 2 == 0 else -1


def letter(p: PauliOperator, i: int) -> str:
    """Letter (I, X, Y or Z) of p on qubit i."""
    if not 1 <= i <= p.n:
        raise ValueError(f"qubit index {i} out of range 1..{p.n}")
    bit = i - 1
    return _BITS_LETTER[((p.x_bits >> bit) & 1, (p.z_bits >> bit) & 1)]


def parse(s: str) -> PauliOperator:
    """Parse a sign-prefixed letter string; the sign prefix is optional."""
    if not s:
        raise ValueError("empty Pauli string")
    sign = 1
    if s[0] in "+-−":
        sign = 1 if s[0] == "+" else -1
        s = s[1:]
    if not s:
        raise ValueError("Pauli string has a sign but no letters")
    x_bits = 0
    z_bits = 0
    for pos, ch in enumerate(s):
        try:
            x, z = _LETTER_BITS[ch]
        except KeyError:
            raise ValueError(f"illegal character {ch!r} in Pauli string") from None
        x_bits |= x << pos
        z_bits |= z << pos
    return PauliOperator(len(s), x_bits, z_bits, sign)


def format(p: PauliOperator) -> str:
    """Canonical text form: explicit sign, then one letter per qubit."""
    body = "".join(
        _BITS_LETTER[((p.x_bits >> b) & 1, (p.z_bits >> b) & 1)] for b in range(p.n)
    )
    return ("+" if p.sign == 1 else "-") + body
