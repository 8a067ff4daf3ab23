"""GF(2) linear algebra on int bitsets (bit k of a row = column k)."""

from __future__ import annotations


class Echelon:
    """Row space in echelon form, rows keyed by highest set bit."""

    def __init__(self, rows=()):
        self.pivots: dict[int, int] = {}
        for row in rows:
            self.insert(row)

    def reduce(self, v: int) -> int:
        """Reduce v against the stored rows; 0 means v is in the span."""
        while v:
            h = v.bit_length() - 1
            row = self.pivots.get(h)
            if row is None:
                break
            v ^= row
        return v

    def insert(self, v: int) -> int:
        """Reduce v and store the residue if nonzero; returns the residue."""
        r = self.reduce(v)
        if r:
            self.pivots[r.bit_length() - 1] = r
        return r

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows) -> int:
    """Rank of a collection of int-bitset rows over GF(2)."""
    return Echelon(rows).rank


def nullspace_rref(constraints, n_cols: int):
    """Nullspace basis of a constraint system, one vector per free column.

    Constraints are echelonized with the *lowest* set bit as pivot, so each
    basis vector e_c + (pivot corrections) has c as its highest set bit.
    Yields (c, vector) in ascending c; the vectors are the minimal coset
    representatives modulo the span of the lower-c ones.
    """
    pivot_rows: dict[int, int] = {}
    for row in constraints:
        r = row
        while r:
            low = (r & -r).bit_length() - 1
            if low in pivot_rows:
                r ^= pivot_rows[low]
            else:
                pivot_rows[low] = r
                break
    # full reduction: clear every pivot bit from the other rows
    for low in sorted(pivot_rows):
        for other in pivot_rows:
            if other != low and (pivot_rows[other] >> low) & 1:
                pivot_rows[other] ^= pivot_rows[low]
    for c in range(n_cols):
        if c in pivot_rows:
            continue
        v = 1 << c
        for low, row in pivot_rows.items():
            if (row >> c) & 1:
                v |= 1 << low
        yield c, v
