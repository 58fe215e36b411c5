#!/usr/bin/env python3

# Core
from dataclasses import dataclass
from typing import Optional, Sequence
import logging
import time
# Third-party
from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.matrices.dense import ddm_irref
# Project
from charpoly import IntPoly, char_poly, reduced_char
from count_service import get_count_service
from lattice import Arrangement, IntersectionLattice, lattice_of
from models import PointCountCheck
import settings

logger = logging.getLogger(__name__)

CANDIDATE_PRIMES = (2, 3, 5, 7, 11, 13)

# =========================================================================== #

class BadPrimeError(Exception):
    pass

class CountBudgetError(Exception):
    pass

# =========================================================================== #

@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise BadPrimeError(f"{self.p} is not prime")

    # ----------------------------------------------------------------------- #

    def reduce(self, value) -> int:
        """
        Residue of a rational number mod p.

        Raises:
            BadPrimeError: If p divides the denominator.
        """
        if value.denominator % self.p == 0:
            raise BadPrimeError(f"{self.p} divides the denominator of {value}")
        return int(value.numerator * pow(int(value.denominator), -1, self.p)
                % self.p)

# --------------------------------------------------------------------------- #

def _mod_reduce(rows: Sequence[Sequence[int]], p: int):
    field = GF(p)
    work = [[field(v) for v in row] for row in rows]
    pivots = ddm_irref(work) if work and work[0] else []
    basis = tuple(tuple(int(v) % p for v in row)
            for row in work[:len(pivots)])
    return basis, len(pivots)

def mod_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return _mod_reduce(rows, p)[1]

def mod_span_key(rows: Sequence[Sequence[int]], p: int) -> tuple:
    return _mod_reduce(rows, p)[0]

# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class ModArrangement:
    """
    Reduction of an arrangement mod p: residues of the forms, one row per
    hyperplane.
    """
    p: int
    n: int
    forms: tuple

    def __post_init__(self):
        seen = {}
        for index, row in enumerate(self.forms):
            if not any(row):
                raise BadPrimeError(f"Form {index} vanishes mod {self.p}")
            key = mod_span_key([row], self.p)
            if key in seen:
                raise BadPrimeError(f"Forms {seen[key]} and {index} are " \
                        f"proportional mod {self.p}")
            seen[key] = index

    # ----------------------------------------------------------------------- #

    @classmethod
    def reduce(cls, a: Arrangement, p: int) -> 'ModArrangement':
        field = PrimeField(p)
        return cls(p, a.n, tuple(tuple(field.reduce(v) for v in row)
                for row in a.forms.to_rows()))

    @property
    def d(self) -> int:
        return len(self.forms)

    # ----------------------------------------------------------------------- #

    def strip_free_coordinates(self):
        """
        Drop coordinates on which no form depends.

        Returns:
            tuple: (forms on the remaining coordinates, number dropped)
        """
        support = [j for j in range(self.n + 1)
                if any(row[j] for row in self.forms)]
        stripped = [[row[j] for j in support] for row in self.forms]
        return stripped, self.n + 1 - len(support)

# =========================================================================== #

def good_prime_check(a: Arrangement, p: int,
        lattice: Optional[IntersectionLattice] = None) -> bool:
    """
    Whether reduction mod p keeps the intersection lattice: the reduced forms
    are nonzero and pairwise non-proportional, every flat keeps its
    codimension, and distinct flats stay distinct.

    Args:
        a (Arrangement): The arrangement over Q.
        p (int): The candidate prime.
        lattice (IntersectionLattice): The lattice of a, built if omitted.

    Returns:
        bool: True for a good prime.
    """
    try:
        reduced = ModArrangement.reduce(a, p)
    except BadPrimeError as err:
        logger.debug(f"Bad prime {p}: {err}")
        return False

    if lattice is None:
        lattice = lattice_of(a)

    keys = set()
    for flat in lattice.flats:
        rows = [reduced.forms[i] for i in sorted(flat.members)]
        basis, flat_rank = _mod_reduce(rows, p)
        if flat_rank != flat.codim:
            logger.debug(f"Bad prime {p}: a codim {flat.codim} flat drops " \
                    f"to rank {flat_rank}")
            return False
        if basis in keys:
            logger.debug(f"Bad prime {p}: two flats merge")
            return False
        keys.add(basis)
    return True

# --------------------------------------------------------------------------- #

def good_primes(a: Arrangement, count: int = 2,
        candidates: Sequence[int] = CANDIDATE_PRIMES,
        lattice: Optional[IntersectionLattice] = None) -> list:
    if lattice is None:
        lattice = lattice_of(a)
    found = [p for p in candidates if good_prime_check(a, p, lattice)]
    return found[:count]

# =========================================================================== #

def projective_point_total(m: int, p: int) -> int:
    """
    Number of points of P^(m-1) over F_p.
    """
    return (p ** m - 1) // (p - 1)

# --------------------------------------------------------------------------- #

def _enumerate_complement(a: Arrangement, p: int, budget: Optional[int],
        backend: str, strip_free: bool, affine: bool) -> int:
    budget = budget if budget is not None else settings.count_budget()
    reduced = ModArrangement.reduce(a, p)
    if strip_free:
        forms, free = reduced.strip_free_coordinates()
    else:
        forms, free = [list(row) for row in reduced.forms], 0

    m = len(forms[0])
    total = p ** m - 1 if affine else projective_point_total(m, p)
    space = f"F_{p}^{m} minus the origin" if affine else f"P^{m - 1}(F_{p})"
    if total > budget:
        raise CountBudgetError(f"Enumerating {space} needs {total} points, " \
                f"above the budget of {budget}")

    logger.info(f"Enumerating {total} points of {space}..")
    start_time = time.time()
    service = get_count_service(backend)
    counts = service.count_strata(forms, p, list(range(m)),
            settings.chunk_size(), affine=affine)
    time_taken = round(time.time() - start_time, 1)
    logger.info(f"Time taken for enumeration: {time_taken} seconds")
    return sum(counts) * p ** free

# --------------------------------------------------------------------------- #

def count_projective_complement(a: Arrangement, p: int,
        budget: Optional[int] = None, backend: str = 'local',
        strip_free: bool = True) -> int:
    """
    Count the points of P^n(F_p) on none of the reduced hyperplanes by
    enumerating normalized representatives (first nonzero coordinate 1).

    Coordinates on which no form depends contribute a factor p each, so with
    strip_free only the remaining coordinates are enumerated.

    Raises:
        BadPrimeError: If the forms degenerate mod p.
        CountBudgetError: If more than `budget` points would be enumerated.
    """
    return _enumerate_complement(a, p, budget, backend, strip_free, False)

# --------------------------------------------------------------------------- #

def count_affine_complement(a: Arrangement, p: int,
        budget: Optional[int] = None, backend: str = 'local',
        strip_free: bool = True) -> int:
    """
    Count the vectors of F_p^(n+1) on none of the reduced hyperplanes. The
    origin lies on every hyperplane, so only nonzero vectors are enumerated.

    Raises:
        BadPrimeError: If the forms degenerate mod p.
        CountBudgetError: If more than `budget` vectors would be enumerated.
    """
    return _enumerate_complement(a, p, budget, backend, strip_free, True)

# =========================================================================== #

def verify_point_count(a: Arrangement, p: int,
        lattice: Optional[IntersectionLattice] = None,
        budget: Optional[int] = None, backend: str = 'local') -> PointCountCheck:
    """
    Compare chibar(p) and chi(p) with the enumerated projective and affine
    complement counts, and the two counts with each other: every projective
    point has exactly p-1 affine representatives.

    Raises:
        BadPrimeError: If p is not a good prime for a.
        CountBudgetError: If enumeration would exceed the budget.
    """
    if lattice is None:
        lattice = lattice_of(a)
    if not good_prime_check(a, p, lattice):
        raise BadPrimeError(f"{p} is not a good prime for this arrangement")

    chi = char_poly(lattice)
    chibar = reduced_char(chi)
    projective = count_projective_complement(a, p, budget, backend)
    affine = count_affine_complement(a, p, budget, backend)

    projective_ok = projective == chibar(p)
    affine_ok = affine == chi(p)
    scaling_ok = affine == (p - 1) * projective
    passed = projective_ok and affine_ok and scaling_ok
    if passed:
        logger.info(f"Point count mod {p} matches: {projective} projective, " \
                f"{affine} affine")
    else:
        logger.error(f"Point count mod {p} mismatch: counted {projective} " \
                f"projective and {affine} affine, but chibar({p}) = " \
                f"{chibar(p)} and chi({p}) = {chi(p)}")

    return PointCountCheck(p=p, status='pass' if passed else 'fail',
            chibar_value=chibar(p), projective_count=projective,
            chi_value=chi(p), affine_count=affine,
            projective_matches=projective_ok, affine_matches=affine_ok,
            affine_scaling_matches=scaling_ok)

# =========================================================================== #
