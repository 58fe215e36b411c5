#!/usr/bin/env python3

# Core
from dataclasses import dataclass
from typing import Iterable, Sequence
import logging
# Third-party
from sympy.polys.domains import QQ
from sympy.polys.matrices.dense import ddm_irref

logger = logging.getLogger(__name__)

# =========================================================================== #

class DimensionMismatchError(Exception):
    pass

# =========================================================================== #

def to_rational(value):
    """
    Convert an int, sympy Rational or QQ element into a reduced QQ element.
    """
    return QQ.convert(value)

# --------------------------------------------------------------------------- #

def format_rational(value) -> str:
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"

# =========================================================================== #

@dataclass(frozen=True)
class RatMatrix:
    """
    Immutable row-major matrix of exact rationals (QQ elements).
    """
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(f"{self.rows}x{self.cols} matrix " \
                    f"needs {self.rows * self.cols} entries, got " \
                    f"{len(self.entries)}")

    # ----------------------------------------------------------------------- #

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int = None) -> 'RatMatrix':
        rows = [tuple(to_rational(v) for v in row) for row in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatchError("Column count is required for " \
                        "a matrix without rows")
            cols = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatchError(f"Row {index} has {len(row)} " \
                        f"entries, expected {cols}")
        return cls(len(rows), cols, tuple(v for row in rows for v in row))

    # ----------------------------------------------------------------------- #

    @classmethod
    def empty(cls, cols: int) -> 'RatMatrix':
        return cls(0, cols, ())

    # ----------------------------------------------------------------------- #

    def row(self, index: int) -> tuple:
        start = index * self.cols
        return self.entries[start:start + self.cols]

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    # ----------------------------------------------------------------------- #

    def stack(self, other: 'RatMatrix') -> 'RatMatrix':
        if self.cols != other.cols:
            raise DimensionMismatchError(f"Cannot stack a {self.cols}-column " \
                    f"matrix on a {other.cols}-column matrix")
        return RatMatrix(self.rows + other.rows, self.cols,
                self.entries + other.entries)

    def select_rows(self, indices: Iterable[int]) -> 'RatMatrix':
        return RatMatrix.from_rows([self.row(i) for i in indices], self.cols)

    def select_cols(self, indices: Sequence[int]) -> 'RatMatrix':
        indices = list(indices)
        return RatMatrix.from_rows(
                [[row[j] for j in indices] for row in self.to_rows()],
                len(indices))

    def append_zero_cols(self, count: int) -> 'RatMatrix':
        zeros = (QQ.zero,) * count
        return RatMatrix.from_rows([row + zeros for row in self.to_rows()],
                self.cols + count)

    def is_zero_row(self, index: int) -> bool:
        return not any(self.row(index))

    # ----------------------------------------------------------------------- #

    def to_strings(self) -> list:
        return [[format_rational(v) for v in row] for row in self.to_rows()]

# =========================================================================== #

def _reduce(m: RatMatrix):
    work = [list(row) for row in m.to_rows()]
    pivots = ddm_irref(work) if work and m.cols else []
    return work, tuple(pivots)

# --------------------------------------------------------------------------- #

def rref_with_pivots(m: RatMatrix):
    """
    Reduced row echelon form of m along with its pivot columns.

    Returns:
        tuple: (RatMatrix of the same shape as m, tuple of pivot columns)
    """
    work, pivots = _reduce(m)
    return RatMatrix.from_rows(work, m.cols), pivots

# --------------------------------------------------------------------------- #

def rref(m: RatMatrix):
    """
    Unique reduced row echelon form of m and its rank. Zero rows are kept
    at the bottom so the result has the shape of m.
    """
    reduced, pivots = rref_with_pivots(m)
    return reduced, len(pivots)

# --------------------------------------------------------------------------- #

def rank(m: RatMatrix) -> int:
    return len(_reduce(m)[1])

# --------------------------------------------------------------------------- #

def row_space(m: RatMatrix):
    """
    Canonical basis of the row space: the nonzero rows of the RREF.

    Returns:
        tuple: (RatMatrix with rank rows, rank)
    """
    work, pivots = _reduce(m)
    basis = RatMatrix.from_rows(work[:len(pivots)], m.cols)
    return basis, len(pivots)

# --------------------------------------------------------------------------- #

def span_key(m: RatMatrix) -> tuple:
    """
    Hashable canonical key of the row space of m. Two matrices share a key
    iff they have the same row space.
    """
    basis, _ = row_space(m)
    return (basis.cols,) + tuple((v.numerator, v.denominator)
            for v in basis.entries)

# --------------------------------------------------------------------------- #

def span_contains(a: RatMatrix, b: RatMatrix) -> bool:
    """
    True iff the row space of b lies inside the row space of a.
    """
    if a.cols != b.cols:
        raise DimensionMismatchError(f"Cannot compare spans of {a.cols}- and " \
                f"{b.cols}-column matrices")
    if b.rows == 0:
        return True
    return rank(a) == rank(a.stack(b))

# =========================================================================== #
