#!/usr/bin/env python3

# Core
from dataclasses import dataclass
from typing import Optional
import logging
# Third-party
from sympy import Poly, Symbol, divisors
from sympy.polys.domains import ZZ
# Project
from lattice import IntersectionLattice

logger = logging.getLogger(__name__)

T = Symbol('t')

# =========================================================================== #

class ConsistencyError(Exception):
    """
    Raised when an identity that holds for every arrangement fails, which
    means a bug upstream rather than bad input.
    """
    pass

# =========================================================================== #

@dataclass(frozen=True)
class IntPoly:
    """
    Dense integer polynomial, coeffs[k] is the coefficient of t^k.
    """
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, 'coeffs', coeffs)

    # ----------------------------------------------------------------------- #

    @classmethod
    def from_poly(cls, poly: Poly) -> 'IntPoly':
        return cls(tuple(reversed(poly.all_coeffs())))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> 'IntPoly':
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_roots(cls, roots) -> 'IntPoly':
        result = cls((1,))
        for root in roots:
            result = result * cls((-root, 1))
        return result

    def as_poly(self) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], T, domain=ZZ)

    # ----------------------------------------------------------------------- #

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def padded(self, length: int) -> tuple:
        if len(self.coeffs) > length:
            raise ValueError(f"Degree {self.degree} does not fit in " \
                    f"{length} coefficients")
        return self.coeffs + (0,) * (length - len(self.coeffs))

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    # ----------------------------------------------------------------------- #

    def __add__(self, other: 'IntPoly') -> 'IntPoly':
        return IntPoly.from_poly(self.as_poly() + other.as_poly())

    def __sub__(self, other: 'IntPoly') -> 'IntPoly':
        return IntPoly.from_poly(self.as_poly() - other.as_poly())

    def __mul__(self, other: 'IntPoly') -> 'IntPoly':
        return IntPoly.from_poly(self.as_poly() * other.as_poly())

    def shift(self, a: int) -> 'IntPoly':
        """
        The polynomial p(t + a).
        """
        return IntPoly.from_poly(self.as_poly().shift(a))

    def exact_div(self, divisor: 'IntPoly') -> 'IntPoly':
        quotient, remainder = self.as_poly().div(divisor.as_poly())
        if not remainder.is_zero:
            raise ConsistencyError(f"{self} is not divisible by {divisor}")
        return IntPoly.from_poly(quotient)

    # ----------------------------------------------------------------------- #

    def format(self, var: str = 't') -> str:
        if not self.coeffs:
            return "0"
        if len(var) > 1:
            var = f"({var})"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.format()

# =========================================================================== #

@dataclass(frozen=True)
class SplitResult:
    """
    Integer roots of a reduced characteristic polynomial, if it splits.
    roots is None when the polynomial does not factor into integer linear
    factors.
    """
    roots: Optional[tuple]
    exponent_sum_ok: Optional[bool] = None

    @property
    def splits(self) -> bool:
        return self.roots is not None

    @property
    def exponents(self) -> Optional[tuple]:
        if self.roots is None:
            return None
        return tuple(sorted((1,) + self.roots, reverse=True))

# =========================================================================== #

def char_poly(lattice: IntersectionLattice) -> IntPoly:
    """
    Sum of mu(x) t^dim(x) over the lattice.
    """
    lattice._require_mobius()
    coeffs = [0] * (lattice.n + 2)
    for flat in lattice.flats:
        coeffs[flat.dim] += flat.mobius
    chi = IntPoly(coeffs)
    if chi(1) != 0 or not chi.is_monic or chi.degree != lattice.n + 1:
        raise ConsistencyError(f"Characteristic polynomial {chi} is not " \
                "monic of full degree with chi(1) = 0")
    return chi

# --------------------------------------------------------------------------- #

def reduced_char(chi: IntPoly) -> IntPoly:
    return chi.exact_div(IntPoly((-1, 1)))

# --------------------------------------------------------------------------- #

def _reverse(p: IntPoly, degree: int) -> IntPoly:
    # (-t)^degree p(-1/t)
    return IntPoly([(-1) ** k * p.coeff(degree - k) for k in range(degree + 1)])

# --------------------------------------------------------------------------- #

def poincare(chi: IntPoly) -> IntPoly:
    """
    pi(t) = (-t)^(n+1) chi(-1/t) for chi monic of degree n+1.
    """
    if not chi.is_monic:
        raise ConsistencyError(f"Characteristic polynomial {chi} is not monic")
    pi = _reverse(chi, chi.degree)
    if pi(-1) != 0:
        raise ConsistencyError(f"Poincaré polynomial {pi} does not vanish at -1")
    return pi

# --------------------------------------------------------------------------- #

def reduced_poincare(pi: IntPoly) -> IntPoly:
    return pi.exact_div(IntPoly((1, 1)))

# --------------------------------------------------------------------------- #

def reduced_poincare_from_char(chibar: IntPoly) -> IntPoly:
    """
    pibar(t) = (-t)^n chibar(-1/t) with n = deg chibar.
    """
    return _reverse(chibar, chibar.degree)

# --------------------------------------------------------------------------- #

def split_over_Z(chibar: IntPoly, d: Optional[int] = None) -> SplitResult:
    """
    Try to factor a monic integer polynomial into integer linear factors by
    the rational root theorem.

    Args:
        chibar (IntPoly): Reduced characteristic polynomial (monic).
        d (int): Optional hyperplane count; when given, the candidate
            exponents (roots plus the removed root 1) must sum to d.

    Returns:
        SplitResult: roots with multiplicity, or roots=None if it does not
        split.
    """
    if not chibar.is_monic:
        raise ConsistencyError(f"Cannot split non-monic polynomial {chibar}")

    zeros = next(k for k, c in enumerate(chibar.coeffs) if c != 0)
    roots = [0] * zeros
    rest = IntPoly(chibar.coeffs[zeros:])

    candidates = sorted({s * q for q in divisors(abs(rest.coeff(0)))
            for s in (1, -1)}) if rest.degree > 0 else []
    for candidate in candidates:
        while rest.degree > 0 and rest(candidate) == 0:
            rest = rest.exact_div(IntPoly((-candidate, 1)))
            roots.append(candidate)

    if rest.degree > 0:
        logger.debug(f"{chibar} does not split over Z")
        return SplitResult(None)

    roots = tuple(sorted(roots, reverse=True))
    exponent_sum_ok = None
    if d is not None:
        exponent_sum_ok = sum(roots) + 1 == d
    return SplitResult(roots, exponent_sum_ok)

# =========================================================================== #
