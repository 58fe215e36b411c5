#!/usr/bin/env python3

# Core
from dataclasses import dataclass
from math import comb
import logging
# Project
from charpoly import IntPoly
from classes import BettiVector, ChowClass

logger = logging.getLogger(__name__)

# =========================================================================== #

class SegreError(Exception):
    pass

# =========================================================================== #

@dataclass(frozen=True)
class SigmaVector:
    """
    Coefficients of [P^n] - i_* s(S, P^n) = sum sigma_i h^i cap [P^n], where S
    is the singularity subscheme of the arrangement.
    """
    n: int
    sigma: tuple

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        if len(sigma) != self.n + 1:
            raise SegreError(f"Sigma vector for P^{self.n} needs {self.n + 1} " \
                    f"entries, got {len(sigma)}")
        if sigma[0] != 1:
            raise SegreError(f"sigma_0 must be 1, got {sigma[0]}")
        object.__setattr__(self, 'sigma', sigma)

# =========================================================================== #

def _check_degree(d: int) -> None:
    if d < 1:
        raise SegreError(f"Degree must be >= 1, got {d}")

# --------------------------------------------------------------------------- #

def pi_from_sigma(s: SigmaVector, d: int) -> IntPoly:
    """
    Reduced Poincaré polynomial from the Segre data of a degree-d
    arrangement: b_k = sum_i C(k, i) (d-1)^(k-i) sigma_i.
    """
    _check_degree(d)
    return IntPoly([sum(comb(k, i) * (d - 1) ** (k - i) * s.sigma[i]
            for i in range(k + 1)) for k in range(s.n + 1)])

# --------------------------------------------------------------------------- #

def sigma_from_pi(pibar: IntPoly, d: int, n: int) -> SigmaVector:
    """
    Inverse binomial transform: sigma_k = sum_i C(k, i) (1-d)^(k-i) b_i.
    """
    _check_degree(d)
    if pibar.degree > n:
        raise SegreError(f"{pibar} has degree above {n}")
    b = pibar.padded(n + 1)
    return SigmaVector(n, tuple(sum(comb(k, i) * (1 - d) ** (k - i) * b[i]
            for i in range(k + 1)) for k in range(n + 1)))

# --------------------------------------------------------------------------- #

def segre_pushforward(s: SigmaVector) -> ChowClass:
    """
    i_* s(S, P^n) = sum s_i [P^i] with s_i = -sigma_(n-i) for i < n and
    s_n = 0.
    """
    coeffs = [-s.sigma[s.n - i] for i in range(s.n)] + [0]
    return ChowClass(s.n, tuple(coeffs))

# --------------------------------------------------------------------------- #

def betti_from_sigma(s: SigmaVector, d: int) -> BettiVector:
    """
    Ranks of H^k of the projective complement computed from the Segre data.

    Raises:
        SegreError: If a rank comes out negative, so the vector cannot come
            from an arrangement of degree d.
    """
    ranks = pi_from_sigma(s, d).padded(s.n + 1)
    negative = [k for k, r in enumerate(ranks) if r < 0]
    if negative:
        raise SegreError(f"Sigma vector {s.sigma} with d={d} gives negative " \
                f"ranks in degrees {negative}")
    return BettiVector(ranks)

# =========================================================================== #

def pencil_segre_pushforward(d: int, n: int) -> ChowClass:
    """
    Closed form for a pencil of d hyperplanes through a codimension-2
    subspace: (d-1)^2 [P^(n-2)] / (1 + (d-1) h)^2.
    """
    _check_degree(d)
    if n < 2:
        raise SegreError(f"A pencil needs n >= 2, got {n}")
    coeffs = [0] * (n + 1)
    for j in range(n - 1):
        coeffs[n - 2 - j] = (-1) ** j * (j + 1) * (d - 1) ** (j + 2)
    return ChowClass(n, tuple(coeffs))

# =========================================================================== #
