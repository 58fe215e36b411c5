#!/usr/bin/env python3

# Core
from collections import Counter
from dataclasses import dataclass, replace
from typing import Optional
import logging
# Project
from exactlin import DimensionMismatchError, RatMatrix, rank, row_space, \
    rref_with_pivots, span_contains, span_key

logger = logging.getLogger(__name__)

# =========================================================================== #

class ArrangementError(Exception):
    def __init__(self, message: str, indices: tuple = ()):
        super().__init__(message)
        self.indices = tuple(indices)

# =========================================================================== #

@dataclass(frozen=True)
class Arrangement:
    """
    Hyperplane arrangement in P^n, given by the linear forms of the
    corresponding central arrangement in k^(n+1), one form per row.
    """
    n: int
    forms: RatMatrix

    def __post_init__(self):
        if self.n < 0:
            raise ArrangementError(f"Ambient dimension must be >= 0, got {self.n}")
        if self.forms.cols != self.n + 1:
            raise ArrangementError(f"Forms for P^{self.n} need {self.n + 1} " \
                    f"coefficients, got {self.forms.cols}")
        if self.forms.rows < 1:
            raise ArrangementError("An arrangement needs at least one hyperplane")

        seen = {}
        for index in range(self.forms.rows):
            if self.forms.is_zero_row(index):
                raise ArrangementError(f"Form {index} is zero", (index,))
            key = span_key(self.forms.select_rows([index]))
            if key in seen:
                raise ArrangementError(f"Forms {seen[key]} and {index} define " \
                        "the same hyperplane", (seen[key], index))
            seen[key] = index

    # ----------------------------------------------------------------------- #

    @classmethod
    def from_rows(cls, n: int, rows) -> 'Arrangement':
        try:
            forms = RatMatrix.from_rows(rows, n + 1)
        except DimensionMismatchError as err:
            raise ArrangementError(f"Forms for P^{n} need {n + 1} " \
                    f"coefficients: {err}") from err
        return cls(n, forms)

    @property
    def d(self) -> int:
        return self.forms.rows

# =========================================================================== #

@dataclass(frozen=True)
class Flat:
    """
    Element of the intersection lattice: a linear subspace of k^(n+1)
    cut out by the forms spanning defining_span.
    """
    defining_span: RatMatrix
    codim: int
    dim: int
    members: frozenset
    mobius: Optional[int] = None

# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class IntersectionLattice:
    """
    Flats ordered by reverse inclusion. flats[0] is the whole space V and
    below[i] holds the indices of the flats strictly below flat i.
    """
    n: int
    d: int
    flats: tuple
    below: tuple

    # ----------------------------------------------------------------------- #

    def levels(self) -> dict:
        levels = {}
        for flat in self.flats:
            levels.setdefault(flat.codim, []).append(flat)
        return dict(sorted(levels.items()))

    def level_counts(self) -> dict:
        return {codim: len(flats) for codim, flats in self.levels().items()}

    def mobius_by_level(self) -> dict:
        """
        Sorted Möbius values on each codimension level.
        """
        self._require_mobius()
        return {codim: sorted(flat.mobius for flat in flats)
                for codim, flats in self.levels().items()}

    def mobius_multisets(self) -> dict:
        return {codim: Counter(values)
                for codim, values in self.mobius_by_level().items()}

    # ----------------------------------------------------------------------- #

    @property
    def top(self) -> Flat:
        return max(self.flats, key=lambda flat: flat.codim)

    @property
    def has_mobius(self) -> bool:
        return all(flat.mobius is not None for flat in self.flats)

    def _require_mobius(self) -> None:
        if not self.has_mobius:
            raise ValueError("Möbius values have not been assigned")

# =========================================================================== #

def _whole_space(n: int) -> Flat:
    return Flat(RatMatrix.empty(n + 1), 0, n + 1, frozenset(), None)

# --------------------------------------------------------------------------- #

def build_lattice(a: Arrangement) -> IntersectionLattice:
    """
    Enumerate the flats breadth-first by codimension: each frontier flat is
    intersected with every hyperplane not containing it, and the result is
    deduplicated through its canonical span key.

    Args:
        a (Arrangement): The arrangement to analyse.

    Returns:
        IntersectionLattice: Flats and order relation, without Möbius values.
    """
    logger.info(f"Building lattice for {a.d} hyperplanes in P^{a.n}..")
    hyperplanes = [a.forms.select_rows([i]) for i in range(a.d)]

    flats = [_whole_space(a.n)]
    index = {span_key(flats[0].defining_span): 0}
    frontier = [0]

    while frontier:
        next_frontier = []
        for flat_id in frontier:
            flat = flats[flat_id]
            for i in range(a.d):
                if i in flat.members:
                    continue
                span, codim = row_space(flat.defining_span.stack(hyperplanes[i]))
                key = span_key(span)
                if key in index:
                    continue
                members = frozenset(j for j in range(a.d)
                        if span_contains(span, hyperplanes[j]))
                index[key] = len(flats)
                next_frontier.append(len(flats))
                flats.append(Flat(span, codim, a.n + 1 - codim, members))
        frontier = next_frontier
        if frontier:
            logger.debug(f"Found {len(frontier)} flats of codim " \
                    f"{flats[frontier[0]].codim}")

    below = []
    for x in flats:
        below.append(frozenset(
            y_id for y_id, y in enumerate(flats)
            if y.codim < x.codim
            and y.members <= x.members
            and span_contains(x.defining_span, y.defining_span)))

    logger.info(f"Lattice built: {len(flats)} flats")
    return IntersectionLattice(a.n, a.d, tuple(flats), tuple(below))

# --------------------------------------------------------------------------- #

def mobius_assign(lattice: IntersectionLattice) -> IntersectionLattice:
    """
    Assign mu(x) = mu(V, x): mu(V) = 1 and the values on and below every
    other flat sum to zero.
    """
    order = sorted(range(len(lattice.flats)),
            key=lambda i: lattice.flats[i].codim)
    values = {}
    for flat_id in order:
        if lattice.flats[flat_id].codim == 0:
            values[flat_id] = 1
        else:
            values[flat_id] = -sum(values[y] for y in lattice.below[flat_id])

    flats = tuple(replace(flat, mobius=values[i])
            for i, flat in enumerate(lattice.flats))
    return replace(lattice, flats=flats)

# --------------------------------------------------------------------------- #

def lattice_of(a: Arrangement) -> IntersectionLattice:
    return mobius_assign(build_lattice(a))

# =========================================================================== #

def center(a: Arrangement) -> Flat:
    """
    The intersection of all hyperplanes, as a flat (Möbius value unset).
    """
    span, codim = row_space(a.forms)
    return Flat(span, codim, a.n + 1 - codim, frozenset(range(a.d)))

# --------------------------------------------------------------------------- #

def is_essential(a: Arrangement) -> bool:
    return center(a).dim == 0

# --------------------------------------------------------------------------- #

def cone(a: Arrangement, k: int) -> Arrangement:
    """
    The arrangement in P^(n+k) defined by the same forms, none of which
    depends on the k new coordinates.
    """
    if k < 0:
        raise ArrangementError(f"Cone dimension must be >= 0, got {k}")
    if k == 0:
        return a
    return Arrangement(a.n + k, a.forms.append_zero_cols(k))

# --------------------------------------------------------------------------- #

def essentialize(a: Arrangement):
    """
    Quotient by the center. The forms are rewritten in the coordinates given
    by the canonical basis of their span: since that basis is in RREF, the
    coordinates of a form are its entries in the pivot columns.

    Returns:
        tuple: (essential Arrangement in P^(n-k), k = dim of the center)
    """
    _, pivots = rref_with_pivots(a.forms)
    k = a.n + 1 - len(pivots)
    if k == 0:
        return a, 0
    logger.debug(f"Essentializing: center has dim {k}, pivots {pivots}")
    return Arrangement(len(pivots) - 1, a.forms.select_cols(pivots)), k

# =========================================================================== #
