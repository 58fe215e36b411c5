#!/usr/bin/env python3

# Core
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence
import logging
# Third-party
from sympy import binomial
from sympy.utilities.iterables import partitions
# Project
from charpoly import ConsistencyError, IntPoly, char_poly, reduced_char
from lattice import IntersectionLattice

logger = logging.getLogger(__name__)

# =========================================================================== #

@dataclass(frozen=True)
class ChowClass:
    """
    Class sum c_k [P^k] in the Chow group of P^n, stored on the [P^k]
    basis with coeffs[k] = c_k.
    """
    n: int
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.n + 1:
            raise ValueError(f"A class in P^{self.n} needs {self.n + 1} " \
                    f"coefficients, got {len(coeffs)}")
        object.__setattr__(self, 'coeffs', coeffs)

    # ----------------------------------------------------------------------- #

    @classmethod
    def zero(cls, n: int) -> 'ChowClass':
        return cls(n, (0,) * (n + 1))

    @classmethod
    def from_h_powers(cls, n: int, h_coeffs: Sequence[int]) -> 'ChowClass':
        """
        Cap a polynomial in the hyperplane class h with [P^n]: h^j becomes
        [P^(n-j)] and powers beyond n vanish.
        """
        coeffs = [0] * (n + 1)
        for j, c in enumerate(h_coeffs):
            if j <= n:
                coeffs[n - j] += c
        return cls(n, tuple(coeffs))

    def h_powers(self) -> tuple:
        return tuple(reversed(self.coeffs))

    # ----------------------------------------------------------------------- #

    def __add__(self, other: 'ChowClass') -> 'ChowClass':
        self._check(other)
        return ChowClass(self.n, tuple(a + b for a, b in
                zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'ChowClass') -> 'ChowClass':
        self._check(other)
        return ChowClass(self.n, tuple(a - b for a, b in
                zip(self.coeffs, other.coeffs)))

    def _check(self, other: 'ChowClass') -> None:
        if self.n != other.n:
            raise ValueError(f"Classes live in P^{self.n} and P^{other.n}")

    # ----------------------------------------------------------------------- #

    @property
    def degree_zero(self) -> int:
        return self.coeffs[0]

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __str__(self) -> str:
        terms = [f"{c}[P^{k}]" for k, c in reversed(list(enumerate(self.coeffs)))
                if c != 0]
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class GrothClass:
    """
    Polynomial in the class L of the affine line.
    """
    poly: IntPoly

    @property
    def affine(self) -> IntPoly:
        # [M(central)] = (L - 1) [M(projective)]
        return IntPoly((-1, 1)) * self.poly

    def evaluate(self, q: int) -> int:
        return self.poly(q)

    def __str__(self) -> str:
        return self.poly.format('L')

# --------------------------------------------------------------------------- #

@dataclass(frozen=True)
class BettiVector:
    """
    Ranks r_0..r_n of the rational cohomology of the projective complement.
    """
    ranks: tuple

    @property
    def affine(self) -> tuple:
        ranks = self.ranks + (0,)
        return tuple(ranks[k] + (ranks[k - 1] if k else 0)
                for k in range(len(ranks)))

    @property
    def n(self) -> int:
        return len(self.ranks) - 1

# =========================================================================== #

def grothendieck_class(chibar: IntPoly) -> GrothClass:
    return GrothClass(chibar)

# --------------------------------------------------------------------------- #

def tangent_class(n: int) -> ChowClass:
    """
    c(TP^n) cap [P^n] = (1+h)^(n+1) cap [P^n].
    """
    return ChowClass(n, tuple(comb(n + 1, n - k) for k in range(n + 1)))

# --------------------------------------------------------------------------- #

def csm_complement(chibar: IntPoly, n: int) -> ChowClass:
    """
    CSM class of the complement: the coefficient of t^k in chibar(t+1) is
    the coefficient of [P^k].
    """
    if chibar.degree > n:
        raise ConsistencyError(f"Reduced characteristic polynomial {chibar} " \
                f"has degree above {n}")
    return ChowClass(n, chibar.shift(1).padded(n + 1))

# --------------------------------------------------------------------------- #

def csm_complement_from_poincare(pibar: IntPoly, n: int) -> ChowClass:
    """
    CSM class of the complement as (1+h)^n pibar(-h/(1+h)) cap [P^n].
    """
    h_coeffs = [0] * (n + 1)
    for k, b in enumerate(pibar.padded(n + 1)):
        for j in range(k, n + 1):
            h_coeffs[j] += b * (-1) ** k * comb(n - k, j - k)
    return ChowClass.from_h_powers(n, h_coeffs)

# --------------------------------------------------------------------------- #

def csm_arrangement_mobius(lattice: IntersectionLattice) -> ChowClass:
    """
    CSM class of the arrangement as -sum over x != V of mu(x) times the CSM
    class of the projective flat, (1+h)^dim(x) h^(n+1-dim(x)) cap [P^n].
    """
    lattice._require_mobius()
    n = lattice.n
    coeffs = [0] * (n + 1)
    for flat in lattice.flats:
        if flat.codim == 0:
            continue
        for k in range(min(flat.dim, n + 1)):
            coeffs[k] -= flat.mobius * comb(flat.dim, k + 1)
    return ChowClass(n, tuple(coeffs))

# --------------------------------------------------------------------------- #

def csm_arrangement_from_char(chibar: IntPoly, n: int) -> ChowClass:
    return tangent_class(n) - csm_complement(chibar, n)

# --------------------------------------------------------------------------- #

def csm_arrangement(lattice: IntersectionLattice,
        chibar: Optional[IntPoly] = None) -> ChowClass:
    """
    CSM class of the union of the hyperplanes, by inclusion-exclusion from the
    complement, checked against the Möbius sum over the flats.

    Raises:
        ConsistencyError: If the two computations disagree.
    """
    if chibar is None:
        chibar = reduced_char(char_poly(lattice))
    by_complement = csm_arrangement_from_char(chibar, lattice.n)
    by_flats = csm_arrangement_mobius(lattice)
    if by_complement != by_flats:
        raise ConsistencyError(f"CSM class of the arrangement: " \
                f"{by_complement} from the complement but {by_flats} from " \
                "the flats")
    return by_complement

# =========================================================================== #

def effectivity_poly(lattice: IntersectionLattice) -> IntPoly:
    """
    -sum over x != V of mu(x) (t+1)^dim(x). Its t^k coefficient (k >= 1) is
    the [P^(k-1)] coefficient of the CSM class of the arrangement and its
    constant term is 1.
    """
    lattice._require_mobius()
    coeffs = [0] * (lattice.n + 2)
    for flat in lattice.flats:
        if flat.codim == 0:
            continue
        for k in range(flat.dim + 1):
            coeffs[k] -= flat.mobius * comb(flat.dim, k)
    poly = IntPoly(coeffs)
    if poly.coeff(0) != 1:
        raise ConsistencyError(f"Effectivity polynomial {poly} has constant " \
                "term other than 1")
    return poly

# --------------------------------------------------------------------------- #

def effectivity_from_chibar(chibar: IntPoly, n: int) -> IntPoly:
    csm = csm_arrangement_from_char(chibar, n)
    return IntPoly((1,) + csm.coeffs)

# --------------------------------------------------------------------------- #

def is_effective(poly: IntPoly) -> bool:
    return all(c >= 0 for c in poly.coeffs)

# =========================================================================== #

def betti(pibar: IntPoly, n: int) -> BettiVector:
    """
    Betti numbers of the projective complement, read off pibar.

    Raises:
        ConsistencyError: If a coefficient is negative, which cannot happen
            for an arrangement defined over Q.
    """
    ranks = pibar.padded(n + 1)
    negative = [k for k, r in enumerate(ranks) if r < 0]
    if negative:
        raise ConsistencyError(f"Reduced Poincaré polynomial {pibar} has " \
                f"negative coefficients in degrees {negative}")
    if ranks[0] != 1:
        raise ConsistencyError(f"Reduced Poincaré polynomial {pibar} has " \
                "constant term other than 1")
    return BettiVector(ranks)

# --------------------------------------------------------------------------- #

def hodge_deligne(chibar: IntPoly) -> IntPoly:
    """
    chibar(uv), as a polynomial in the single symbol uv.
    """
    return chibar

# --------------------------------------------------------------------------- #

def stable_birational_constant(chibar: IntPoly,
        betti_vector: Optional[BettiVector] = None) -> int:
    """
    Class of the arrangement in Z[SB], 1 - chibar(0).

    When Betti numbers are supplied, the value is checked against
    1 - (-1)^n r_n, since chibar(0) = (-1)^n r_n is the top coefficient of
    the reversal pibar(t) = (-t)^n chibar(-1/t).
    """
    constant = 1 - chibar(0)
    if betti_vector is not None:
        n = betti_vector.n
        other = 1 - (-1) ** n * betti_vector.ranks[n]
        if other != constant:
            raise ConsistencyError(f"1 - chibar(0) = {constant} but " \
                    f"1 - (-1)^n r_n = {other}")
    return constant

# --------------------------------------------------------------------------- #

def euler_characteristics(chibar: IntPoly, n: int) -> tuple:
    """
    Returns:
        tuple: (Euler characteristic of the complement, of the arrangement)
    """
    complement = chibar(1)
    return complement, n + 1 - complement

# =========================================================================== #

def generic_effectivity(n: int, d: int) -> bool:
    """
    Whether a generic arrangement of d hyperplanes in P^n has effective CSM
    class.
    """
    if n < 1 or d < 1:
        raise ValueError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    if n == 1:
        return True
    if n % 2 == 0:
        return d <= n + 3
    return d <= n + 4

# --------------------------------------------------------------------------- #

def generic_csm_arrangement(n: int, d: int) -> ChowClass:
    """
    Closed form for generic arrangements: the h^k coefficient is
    C(n+1, k) - (-1)^k C(k+d-n-2, k), with generalized binomials.
    """
    h_coeffs = [comb(n + 1, k) - (-1) ** k * int(binomial(k + d - n - 2, k))
            for k in range(n + 1)]
    return ChowClass.from_h_powers(n, h_coeffs)

# =========================================================================== #

def chern_product_class(roots: Sequence[int], n: int) -> ChowClass:
    """
    prod (1 + (1 - a) h) cap [P^n] over the given roots.
    """
    product = IntPoly((1,))
    for root in roots:
        product = product * IntPoly((1, 1 - root))
    return ChowClass.from_h_powers(n, product.coeffs)

# --------------------------------------------------------------------------- #

def free_chern_identity(chibar: IntPoly, n: int, roots: Sequence[int]) -> bool:
    """
    When chibar = prod (t - a_i), h^n chibar(1 + 1/h) = prod (1 + (1-a_i) h),
    so the CSM class of the complement equals the Chern product class.
    """
    return csm_complement(chibar, n) == chern_product_class(roots, n)

# --------------------------------------------------------------------------- #

def _exponent_tuples(n: int):
    # Nonnegative exponent tuples (d_1 >= ... >= d_n) with sum <= n-1
    yield (0,) * n
    for total in range(1, n):
        for parts in partitions(total, m=n):
            roots = [part for part, mult in sorted(parts.items(), reverse=True)
                    for _ in range(mult)]
            yield tuple(roots) + (0,) * (n - len(roots))

# --------------------------------------------------------------------------- #

def free_effectivity_sweep(max_n: int) -> list:
    """
    Check effectivity for every characteristic polynomial (t-1) prod (t-d_i)
    allowed for a free arrangement of at most n hyperplanes in P^n.

    Returns:
        list: (n, exponents, effectivity polynomial) for every failure.
    """
    failures = []
    for n in range(1, max_n + 1):
        checked = 0
        for roots in _exponent_tuples(n):
            chibar = IntPoly.from_roots(roots)
            poly = effectivity_from_chibar(chibar, n)
            checked += 1
            if not is_effective(poly):
                failures.append((n, (1,) + roots, poly))
        logger.info(f"Checked {checked} exponent patterns in P^{n}")
    return failures

# =========================================================================== #
