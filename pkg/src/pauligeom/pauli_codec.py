"""Dictionary between sign-free Pauli words and binary projective points.

A word is a string of N letters over {I, X, Y, Z}; signs are dropped
throughout (the factor group modulo the center), which is exactly the
setting where the group becomes the point set of a binary symplectic
space.  Each letter maps to the coordinate pair (x_i, x_{i+N}):

    I -> (0,0)   X -> (0,1)   Y -> (1,1)   Z -> (1,0)

so the word occupies one int with the first-letter pair in the highest
coordinates.  The sign-free product is then plain vector addition, and
commutation is vanishing of the alternating form sigma.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdentityNotAPointError, UsageError

LETTERS = "IXYZ"

_LETTER_PAIR = {"I": (0, 0), "X": (0, 1), "Y": (1, 1), "Z": (1, 0)}
_PAIR_LETTER = {v: k for k, v in _LETTER_PAIR.items()}


def validate_word(word: str, n_qubits: int | None = None) -> str:
    """Check a word's alphabet (and length when `n_qubits` is given)."""
    if not word or any(c not in _LETTER_PAIR for c in word):
        raise UsageError(f"not a Pauli word over I/X/Y/Z: {word!r}")
    if n_qubits is not None and len(word) != n_qubits:
        raise UsageError(f"expected {n_qubits} letters, got {word!r}")
    return word


def _encode(word: str) -> int:
    """Vector of a word; the identity encodes to 0 (not a point)."""
    n = len(word)
    hi = lo = 0
    for c in word:
        a, b = _LETTER_PAIR[c]
        hi = (hi << 1) | a
        lo = (lo << 1) | b
    return (hi << n) | lo


def word_to_point(word: str) -> int:
    """Projective point of a non-identity word."""
    validate_word(word)
    v = _encode(word)
    if v == 0:
        raise IdentityNotAPointError("the identity word is not a projective point")
    return v


def point_to_word(v: int, n_qubits: int) -> str:
    """Word of a nonzero point; inverse of :func:`word_to_point`."""
    if v == 0:
        raise IdentityNotAPointError("the zero vector has no word")
    if v < 0 or v >> (2 * n_qubits):
        raise UsageError(f"point {v} does not fit {n_qubits} qubits")
    hi, lo = v >> n_qubits, v & ((1 << n_qubits) - 1)
    return "".join(
        _PAIR_LETTER[(hi >> i) & 1, (lo >> i) & 1]
        for i in range(n_qubits - 1, -1, -1)
    )


def identity_word(n_qubits: int) -> str:
    return "I" * n_qubits


def word_product(a: str, b: str) -> str:
    """Sign-free product; addition of coordinate pairs letter by letter."""
    validate_word(a)
    validate_word(b, len(a))
    n = len(a)
    v = _encode(a) ^ _encode(b)
    return identity_word(n) if v == 0 else point_to_word(v, n)


def is_symmetric(word: str) -> bool:
    """Whether the word squares to plus identity: even number of Y letters."""
    validate_word(word)
    return word.count("Y") % 2 == 0


@dataclass(frozen=True)
class GeometryContext:
    """Ambient data for N qubits: dimension, alternating and quadratic forms.

    sigma(u, v) = sum_i (u_i v_{i+N} + u_{i+N} v_i) and
    Q(v) = sum_i v_i v_{i+N}, both mod 2; they satisfy the polarization
    identity Q(u+v) = Q(u) + Q(v) + sigma(u, v).
    """

    n_qubits: int
    dim: int = field(init=False)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise UsageError("need at least one qubit")
        object.__setattr__(self, "dim", 2 * self.n_qubits)

    @property
    def _lo_mask(self) -> int:
        return (1 << self.n_qubits) - 1

    def sigma(self, u: int, v: int) -> int:
        n, m = self.n_qubits, self._lo_mask
        return (((u >> n) & v & m).bit_count() + ((v >> n) & u & m).bit_count()) & 1

    def quadratic(self, v: int) -> int:
        return ((v >> self.n_qubits) & v & self._lo_mask).bit_count() & 1

    def is_on_quadric(self, v: int) -> bool:
        return v != 0 and self.quadratic(v) == 0

    def points(self) -> range:
        """All projective points, in canonical (integer) order."""
        return range(1, 1 << self.dim)

    def quadric_points(self) -> tuple[int, ...]:
        return tuple(v for v in self.points() if self.quadratic(v) == 0)

    def perp_mask(self, p: int) -> int:
        """Bitmask over point values v with sigma(p, v) = 0."""
        mask = 0
        for v in self.points():
            if self.sigma(p, v) == 0:
                mask |= 1 << v
        return mask


def commutes(a: str, b: str) -> bool:
    """Whether two words commute: sigma of their points vanishes."""
    validate_word(a)
    validate_word(b, len(a))
    return GeometryContext(len(a)).sigma(_encode(a), _encode(b)) == 0


def word_json(word: str, ctx: GeometryContext) -> dict:
    """The {word, coords, class} object used by exporters."""
    from . import gf2_core

    v = word_to_point(word)
    return {
        "word": word,
        "coords": gf2_core.to_string(v, ctx.dim),
        "class": "symmetric" if is_symmetric(word) else "skew",
    }


def points_to_words(points, n_qubits: int) -> tuple[str, ...]:
    return tuple(point_to_word(p, n_qubits) for p in points)


def words_to_points(words) -> tuple[int, ...]:
    return tuple(word_to_point(w) for w in words)
