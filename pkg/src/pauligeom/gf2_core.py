"""Exact linear and projective algebra over GF(2).

A vector of GF(2)^d is a plain Python int whose bit (d-1) holds the first
printed coordinate x1 and whose bit 0 holds x_d.  Reading a coordinate
tuple (x1, ..., xd) left to right therefore matches reading the integer
MSB to LSB, and the canonical order on projective points is ordinary
integer order.  The zero vector is a valid vector but never a projective
point; projective operations reject it.

Subspaces (flats) are kept in reduced row-echelon form, which is the
unique canonical basis of a subspace, so flats compare and hash by value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInputError, UsageError


def to_bits(v: int, dim: int) -> tuple[int, ...]:
    """Coordinate tuple (x1, ..., x_dim) of a vector."""
    if v < 0 or v >> dim:
        raise UsageError(f"value {v} does not fit in {dim} coordinates")
    return tuple((v >> (dim - 1 - i)) & 1 for i in range(dim))


def from_bits(bits: Sequence[int]) -> int:
    """Vector from a coordinate sequence (x1 first)."""
    v = 0
    for b in bits:
        if b not in (0, 1):
            raise UsageError(f"coordinate {b!r} is not a bit")
        v = (v << 1) | b
    return v


def to_string(v: int, dim: int) -> str:
    """Serialize as a '0'/'1' string in x1..x_dim order, e.g. '01100101'."""
    if v < 0 or v >> dim:
        raise UsageError(f"value {v} does not fit in {dim} coordinates")
    return format(v, f"0{dim}b")


def from_string(s: str) -> int:
    """Parse a '0'/'1' coordinate string (length fixes the dimension)."""
    if not s or any(c not in "01" for c in s):
        raise UsageError(f"not a binary coordinate string: {s!r}")
    return int(s, 2)


def vec_add(u: int, v: int) -> int:
    """Componentwise sum mod 2 (XOR); the third-point rule on lines."""
    return u ^ v


def line_through(p: int, q: int) -> frozenset[int]:
    """The projective line {p, q, p+q} through two distinct nonzero points."""
    if p == 0 or q == 0:
        raise DegenerateInputError("a line needs nonzero points")
    if p == q:
        raise DegenerateInputError("a line needs two distinct points")
    return frozenset((p, q, p ^ q))


def echelon(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row-echelon basis of the span of `rows`.

    Returns the unique canonical basis, ordered by descending pivot bit,
    with zero rows dropped.  Two inputs span the same subspace iff their
    echelon tuples are equal.
    """
    pivots: dict[int, int] = {}
    for r in rows:
        cur = r
        for b in sorted(pivots, reverse=True):
            if (cur >> b) & 1:
                cur ^= pivots[b]
        if not cur:
            continue
        nb = cur.bit_length() - 1
        for b, row in pivots.items():
            if (row >> nb) & 1:
                pivots[b] = row ^ cur
        pivots[nb] = cur
    return tuple(pivots[b] for b in sorted(pivots, reverse=True))


def rank(rows: Iterable[int]) -> int:
    """GF(2) rank of a collection of vectors."""
    return len(echelon(rows))


def span_points(basis: Iterable[int]) -> frozenset[int]:
    """All nonzero vectors in the span of `basis`."""
    pts = {0}
    for b in basis:
        pts |= {p ^ b for p in pts}
    pts.discard(0)
    return frozenset(pts)


@dataclass(frozen=True)
class Flat:
    """A projective subspace in canonical reduced row-echelon form."""

    basis: tuple[int, ...]

    @property
    def proj_dim(self) -> int:
        return len(self.basis) - 1

    def points(self) -> frozenset[int]:
        return span_points(self.basis)

    def __contains__(self, v: int) -> bool:
        cur = v
        for b in self.basis:
            if cur.bit_length() == b.bit_length():
                cur ^= b
        return cur == 0

    def __len__(self) -> int:
        return (1 << len(self.basis)) - 1


def span(points: Iterable[int]) -> Flat:
    """Canonical flat spanned by a set of points (empty input: proj_dim -1)."""
    return Flat(echelon(points))


def flat_points(f: Flat) -> frozenset[int]:
    """All 2^(proj_dim+1) - 1 points of a flat."""
    return f.points()


def flat_to_strings(f: Flat, dim: int) -> list[str]:
    """A flat as the sorted coordinate strings of its points."""
    return [to_string(p, dim) for p in sorted(f.points())]


# Coordinate change between the frame where the 8-dimensional hyperbolic
# quadric is the all-products form (sum over i<j of y_i y_j) and the split
# frame x1x5+x2x6+x3x7+x4x8.  Row i lists the 1-based y-indices entering x_i.
_EDGE_ROWS = (
    (1, 4, 6, 8),
    (2, 3, 6, 8),
    (2, 4, 5, 8),
    (2, 4, 6, 7),
    (3, 5, 8),
    (4, 7, 8),
    (2, 3, 7),
    (1, 2, 8),
)

_EDGE_MASKS = tuple(
    sum(1 << (8 - i) for i in row) for row in _EDGE_ROWS
)


def _apply_masks(masks: Sequence[int], v: int) -> int:
    out = 0
    for m in masks:
        out = (out << 1) | ((v & m).bit_count() & 1)
    return out


def _invert_masks(masks: Sequence[int]) -> tuple[int, ...]:
    # Gauss-Jordan on [M | I]; rows are 2d-bit ints with the identity half
    # in the low d bits.
    d = len(masks)
    rows = [(m << d) | (1 << (d - 1 - i)) for i, m in enumerate(masks)]
    for col in range(2 * d - 1, d - 1, -1):
        piv = next(i for i in range(2 * d - 1 - col, d) if (rows[i] >> col) & 1)
        target = 2 * d - 1 - col
        rows[piv], rows[target] = rows[target], rows[piv]
        for i in range(d):
            if i != target and (rows[i] >> col) & 1:
                rows[i] ^= rows[target]
    return tuple(r & ((1 << d) - 1) for r in rows)


_EDGE_INV_MASKS = _invert_masks(_EDGE_MASKS)


def edge_to_standard(y: int) -> int:
    """Map product-of-pairs (y) coordinates to split-frame (x) coordinates."""
    if y < 0 or y >> 8:
        raise UsageError("the coordinate change is defined on 8 coordinates")
    return _apply_masks(_EDGE_MASKS, y)


def standard_to_edge(x: int) -> int:
    """Inverse of :func:`edge_to_standard`."""
    if x < 0 or x >> 8:
        raise UsageError("the coordinate change is defined on 8 coordinates")
    return _apply_masks(_EDGE_INV_MASKS, x)
