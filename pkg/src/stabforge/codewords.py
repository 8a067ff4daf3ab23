"""Exact code words as signed integer sums of computational basis labels.

Generators are first classified: type-1 generators keep an independent
X-part after Gaussian elimination (each maps a basis label to a new label),
type-2 generators are pure products of Z's with sign +1 (each fixes labels
up to sign).  A code word is the orbit sum of a seed label under the group,
computed over type-1 subset products only; it has exactly 2^b terms with
coefficients +/-1, or is zero when a type-2 generator has eigenvalue -1 on
the seed.

Basis labels are ints with qubit i at bit i-1; their text form writes
qubit 1 leftmost, matching the Pauli string convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import gf2
from .pauli import PauliOperator, identity, multiply
from .stabilizer import GroupTooLargeError, StabilizerGroup


class MinusSignPureZError(ValueError):
    """A generator reduced to a pure-Z operator with sign -1.

    The all-zeros seed then produces no code word, so the seed-based
    construction cannot proceed.
    """


@dataclass(frozen=True)
class GeneratorClassification:
    type1: tuple[PauliOperator, ...]
    type2: tuple[PauliOperator, ...]

    @property
    def b(self) -> int:
        return len(self.type1)


@dataclass
class FormalState:
    """Unnormalized integer combination of basis labels; {} is the zero vector."""

    n: int
    terms: dict[int, int] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[int]:
        return frozenset(self.terms)

    def canonical(self) -> "FormalState":
        """Flip the global sign so the lexicographically smallest label has +1."""
        if not self.terms:
            return FormalState(self.n, {})
        smallest = min(self.terms, key=lambda lab: label_to_string(lab, self.n))
        if self.terms[smallest] > 0:
            return FormalState(self.n, dict(self.terms))
        return FormalState(self.n, {lab: -c for lab, c in self.terms.items()})

    def to_rows(self) -> list[dict]:
        """Serial form: [{"label": bits, "coeff": c}, ...], labels sorted ascending."""
        return [
            {"label": label_to_string(lab, self.n), "coeff": self.terms[lab]}
            for lab in sorted(self.terms, key=lambda lab: label_to_string(lab, self.n))
        ]


def label_to_string(label: int, n: int) -> str:
    return "".join("1" if (label >> b) & 1 else "0" for b in range(n))


def string_to_label(s: str) -> int:
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"bad basis label {s!r}")
    return sum(1 << b for b, ch in enumerate(s) if ch == "1")


def apply_pauli(op: PauliOperator, state: FormalState) -> FormalState:
    """Exact action of a Pauli on a formal state (label permutation with signs)."""
    if op.n != state.n:
        raise ValueError("qubit count mismatch")
    out: dict[int, int] = {}
    for label, coeff in state.terms.items():
        phase = -1 if (op.z_bits & label).bit_count() % 2 else 1
        out[label ^ op.x_bits] = coeff * op.sign * phase
    return FormalState(state.n, out)


def classify_generators(group: StabilizerGroup) -> GeneratorClassification:
    """Split the generators into type-1 and type-2 by eliminating X-parts.

    Generators are multiplied together (signs tracked) until each either has
    an X-part independent of the earlier type-1 ones or is a pure product of
    Z's.  A pure-Z result with sign -1 raises MinusSignPureZError.
    """
    type1: list[PauliOperator] = []
    type2: list[PauliOperator] = []
    pivots: dict[int, int] = {}  # high bit of x-part -> index into type1
    for g in group.generators:
        cur = g
        while cur.x_bits:
            h = cur.x_bits.bit_length() - 1
            if h not in pivots:
                break
            cur = multiply(cur, type1[pivots[h]])
        if cur.x_bits:
            pivots[cur.x_bits.bit_length() - 1] = len(type1)
            type1.append(cur)
        else:
            if cur.sign == -1:
                raise MinusSignPureZError(f"generator {g} reduces to {cur}")
            if cur.z_bits:  # a +identity residue adds nothing
                type2.append(cur)
    return GeneratorClassification(tuple(type1), tuple(type2))


def seed_generators(group: StabilizerGroup) -> list[PauliOperator]:
    """Pure-X operators N_1..N_{n-a} whose products seed all the code words.

    The X-vectors are (i) orthogonal over GF(2) to the Z-vector of every
    type-2 generator, so the seeds keep eigenvalue +1, and (ii) coset
    representatives of that kernel modulo the span of the type-1 X-parts,
    taken in ascending order of the X-vector read as an integer (qubit 1 the
    low bit).  For the 2^j family this rule lands on the X_1 X_c pairs.
    """
    cls = classify_generators(group)
    n = group.n
    constraints = [g.z_bits for g in cls.type2]
    span = gf2.Echelon(g.x_bits for g in cls.type1)
    seeds = []
    for _, vec in gf2.nullspace_rref(constraints, n):
        if span.insert(vec):
            seeds.append(PauliOperator(n, vec, 0, 1))
    return seeds


def check_seeds(group: StabilizerGroup, seeds) -> list[str]:
    """Problems with a claimed seed-generator list; empty means valid."""
    seeds = list(seeds)
    problems = []
    k = group.n - group.a
    if len(seeds) != k:
        problems.append(f"expected {k} seed generators, got {len(seeds)}")
    cls = classify_generators(group)
    span = gf2.Echelon(g.x_bits for g in cls.type1)
    for idx, s in enumerate(seeds, 1):
        if s.n != group.n:
            problems.append(f"seed {idx} acts on {s.n} qubits, expected {group.n}")
            continue
        if s.z_bits or s.sign != 1:
            problems.append(f"seed {idx} is not a +1 pure-X operator")
            continue
        if any((s.x_bits & g.z_bits).bit_count() % 2 for g in cls.type2):
            problems.append(f"seed {idx} anticommutes with a type-2 generator")
            continue
        if not span.insert(s.x_bits):
            problems.append(f"seed {idx} is dependent modulo the type-1 X-parts")
    return problems


def _type1_products(cls: GeneratorClassification, n: int) -> list[PauliOperator]:
    prods = [identity(n)]
    for g in cls.type1:
        prods += [multiply(p, g) for p in prods]
    return prods


def _as_label(seed, n: int) -> int:
    if isinstance(seed, str):
        seed = string_to_label(seed)
    if not 0 <= seed < (1 << n):
        raise ValueError(f"seed label out of range for {n} qubits")
    return seed


def codeword(group: StabilizerGroup, seed, _cls: GeneratorClassification | None = None) -> FormalState:
    """Orbit sum of a seed label under the group, canonically signed.

    Returns the zero state iff some type-2 generator has eigenvalue -1 on
    the seed; otherwise exactly 2^b terms with coefficients +/-1.
    """
    if group.a > 24:
        raise GroupTooLargeError(f"2^{group.a} group elements is too many")
    label = _as_label(seed, group.n)
    cls = _cls if _cls is not None else classify_generators(group)
    for g in cls.type2:
        if (g.z_bits & label).bit_count() % 2:
            return FormalState(group.n, {})
    terms: dict[int, int] = {}
    for p in _type1_products(cls, group.n):
        phase = -1 if (p.z_bits & label).bit_count() % 2 else 1
        terms[label ^ p.x_bits] = p.sign * phase
    return FormalState(group.n, terms).canonical()


def encode(group: StabilizerGroup, seeds, logical) -> FormalState:
    """Encode a k-bit logical word c_1..c_k (k = n - a) as a code word.

    The seed label is N_1^{c_1}..N_k^{c_k}|0..0>; the result is the
    unnormalized orbit sum (the 2^{b/2} normalization is left to callers).
    """
    seeds = list(seeds)
    if isinstance(logical, str):
        if set(logical) - {"0", "1"}:
            raise ValueError(f"bad logical word {logical!r}")
        bits = [int(ch) for ch in logical]
    else:
        bits = [int(b) for b in logical]
    if len(bits) != len(seeds) or len(seeds) != group.n - group.a:
        raise ValueError(
            f"logical word length {len(bits)} does not match k = {group.n - group.a}"
        )
    label = 0
    for bit, gen in zip(bits, seeds):
        if bit:
            label ^= gen.x_bits
    return codeword(group, label)


def basis(group: StabilizerGroup, seeds) -> list[FormalState]:
    """All 2^{n-a} encodings, logical word index i with c_1 as its low bit."""
    seeds = list(seeds)
    k = group.n - group.a
    cls = classify_generators(group)
    out = []
    for i in range(1 << k):
        label = 0
        for r in range(k):
            if (i >> r) & 1:
                label ^= seeds[r].x_bits
        out.append(codeword(group, label, _cls=cls))
    return out
