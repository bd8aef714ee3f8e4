"""Independent ground truth for the word algebra via exact matrices.

Every Pauli word is a signed permutation matrix of size 2^N, so instead of
dense arrays we store the permutation and the per-row sign, multiply in
O(2^N) integer arithmetic, and compare matrices exactly.  This gives a
second, representation-independent route to symmetry class, commutation
and products that never touches the coordinate bijection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import pauli_codec
from .errors import InternalConsistencyError, UsageError


@dataclass(frozen=True)
class SignedPermMatrix:
    """Matrix with one nonzero entry per row: M[i, perm[i]] = signs[i]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.perm)

    def __matmul__(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        if self.size != other.size:
            raise UsageError("size mismatch in matrix product")
        # Row i of the product: self picks column self.perm[i], i.e. row
        # self.perm[i] of `other`, scaled by signs[i].
        perm = tuple(other.perm[self.perm[i]] for i in range(self.size))
        signs = tuple(
            self.signs[i] * other.signs[self.perm[i]] for i in range(self.size)
        )
        return SignedPermMatrix(perm, signs)

    def is_plus_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and all(
            s == 1 for s in self.signs
        )

    def negated(self) -> "SignedPermMatrix":
        return SignedPermMatrix(self.perm, tuple(-s for s in self.signs))

    @classmethod
    def identity(cls, size: int) -> "SignedPermMatrix":
        return cls(tuple(range(size)), (1,) * size)

    def kron(self, other: "SignedPermMatrix") -> "SignedPermMatrix":
        n = other.size
        perm = tuple(
            self.perm[i] * n + other.perm[j]
            for i in range(self.size)
            for j in range(n)
        )
        signs = tuple(
            self.signs[i] * other.signs[j]
            for i in range(self.size)
            for j in range(n)
        )
        return SignedPermMatrix(perm, signs)


_BASE = {
    "I": SignedPermMatrix((0, 1), (1, 1)),
    "X": SignedPermMatrix((1, 0), (1, 1)),
    "Y": SignedPermMatrix((1, 0), (-1, 1)),
    "Z": SignedPermMatrix((0, 1), (1, -1)),
}


def realize(word: str) -> SignedPermMatrix:
    """Kronecker product of the base matrices in letter order."""
    pauli_codec.validate_word(word)
    out = _BASE[word[0]]
    for c in word[1:]:
        out = out.kron(_BASE[c])
    return out


def oracle_symmetric(word: str) -> bool:
    """True iff the realized matrix squares to plus identity."""
    m = realize(word)
    sq = m @ m
    if sq.is_plus_identity():
        return True
    if sq.negated().is_plus_identity():
        return False
    raise InternalConsistencyError(f"{word} does not square to +/- identity")


def oracle_commutes(a: str, b: str) -> bool:
    """Exact matrix-level commutation test."""
    ma, mb = realize(a), realize(b)
    return ma @ mb == mb @ ma


def _decode(m: SignedPermMatrix, n_qubits: int) -> str:
    """Recover the word of a matrix known to be +/- a Pauli realization."""
    flip = m.perm[0]
    if any(p != i ^ flip for i, p in enumerate(m.perm)):
        raise InternalConsistencyError("permutation is not a coordinate XOR")
    letters = []
    for q in range(n_qubits):
        pos = n_qubits - 1 - q
        xbit = (flip >> pos) & 1
        # The sign pattern depends on bit `pos` exactly for Z and Y.
        zbit = 0 if m.signs[0] == m.signs[1 << pos] else 1
        letters.append(pauli_codec._PAIR_LETTER[(zbit, xbit)])
    return "".join(letters)


def oracle_product(a: str, b: str) -> str:
    """Sign-stripped matrix product decoded back to a word."""
    pauli_codec.validate_word(a)
    pauli_codec.validate_word(b, len(a))
    m = realize(a) @ realize(b)
    word = _decode(m, len(a))
    check = realize(word)
    if m != check and m != check.negated():
        raise InternalConsistencyError("product is not +/- a Pauli realization")
    return word


def all_words(n_qubits: int, include_identity: bool = False):
    """All words in canonical point order (identity first when included)."""
    ctx = pauli_codec.GeometryContext(n_qubits)
    words = [pauli_codec.point_to_word(v, n_qubits) for v in ctx.points()]
    if include_identity:
        words.insert(0, pauli_codec.identity_word(n_qubits))
    return words


def check_agreement(
    n_qubits: int,
    exhaustive_products: bool = False,
    product_samples: int = 100_000,
    seed: int = 20120704,
) -> dict[str, int]:
    """Cross-check the codec against the matrix realization.

    Symmetry is checked on every word, commutation on every unordered
    pair, products either on every ordered pair or on a seeded random
    sample.  Returns the numbers of checks performed; raises on the first
    disagreement.
    """
    words = all_words(n_qubits)
    for w in words:
        if pauli_codec.is_symmetric(w) != oracle_symmetric(w):
            raise InternalConsistencyError(f"symmetry disagreement at {w}")
    pair_count = 0
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            if pauli_codec.commutes(a, b) != oracle_commutes(a, b):
                raise InternalConsistencyError(f"commutation disagreement {a},{b}")
            pair_count += 1
    if exhaustive_products:
        pairs = ((a, b) for a in words for b in words)
        n_products = len(words) ** 2
    else:
        rng = random.Random(seed)
        pairs = (
            (rng.choice(words), rng.choice(words)) for _ in range(product_samples)
        )
        n_products = product_samples
    for a, b in pairs:
        if oracle_product(a, b) != pauli_codec.word_product(a, b):
            raise InternalConsistencyError(f"product disagreement {a},{b}")
    return {
        "words": len(words),
        "commutation_pairs": pair_count,
        "product_pairs": n_products,
    }
