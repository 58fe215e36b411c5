#!/usr/bin/env python3

# Third-party
import pytest
# Project
from charpoly import IntPoly, char_poly, poincare, reduced_poincare
from classes import ChowClass, betti
from generator import generate
from lattice import lattice_of
from segre import SegreError, SigmaVector, betti_from_sigma, \
    pencil_segre_pushforward, pi_from_sigma, segre_pushforward, sigma_from_pi

COUNTEREXAMPLE_SIGMA = (1, 0, -49, 664, -6528, 54272, -389120, 2260992,
        -7340032, -58720256)

# =========================================================================== #

def test_xyz(xyz):
    pibar = reduced_poincare(poincare(char_poly(lattice_of(xyz))))
    sigma = sigma_from_pi(pibar, 3, 3)
    assert sigma.sigma == (1, 0, -3, 10)
    assert pi_from_sigma(sigma, 3) == IntPoly((1, 2, 1))
    push = segre_pushforward(sigma)
    assert push == ChowClass(3, (-10, 3, 0, 0))
    assert str(push) == "3[P^1] - 10[P^0]"

def test_counterexample():
    sigma = sigma_from_pi(IntPoly((1, 8, 15)), 9, 9)
    assert sigma.sigma == COUNTEREXAMPLE_SIGMA
    assert pi_from_sigma(SigmaVector(9, COUNTEREXAMPLE_SIGMA), 9) == \
            IntPoly((1, 8, 15))

def test_four_lines():
    sigma = sigma_from_pi(IntPoly((1, 3, 2)), 4, 2)
    assert sigma.sigma == (1, 0, -7)
    assert betti_from_sigma(sigma, 4) == betti(IntPoly((1, 3, 2)), 2)

@pytest.mark.parametrize('d', [1, 2, 5])
def test_smooth_sigma(d):
    sigma = SigmaVector(4, (1, 0, 0, 0, 0))
    assert pi_from_sigma(sigma, d) == \
            IntPoly([(d - 1) ** k for k in range(5)])
    assert segre_pushforward(sigma) == ChowClass.zero(4)

# --------------------------------------------------------------------------- #

def test_pencil_sigma():
    assert sigma_from_pi(IntPoly((1, 2)), 3, 2).sigma == (1, 0, -4)

@pytest.mark.parametrize('d, n', [(2, 2), (3, 2), (3, 3), (4, 5), (7, 4)])
def test_pencil_closed_form(d, n):
    lattice = lattice_of(generate('pencil', {'d': d, 'n': n}))
    pibar = reduced_poincare(poincare(char_poly(lattice)))
    assert segre_pushforward(sigma_from_pi(pibar, d, n)) == \
            pencil_segre_pushforward(d, n)

def test_pencil_closed_form_values():
    assert pencil_segre_pushforward(3, 3) == ChowClass(3, (-16, 4, 0, 0))

# --------------------------------------------------------------------------- #

def test_sigma_requires_unit_constant():
    with pytest.raises(SegreError):
        SigmaVector(2, (2, 0, 0))

def test_sigma_wrong_length():
    with pytest.raises(SegreError):
        SigmaVector(2, (1, 0))

def test_invalid_degree():
    with pytest.raises(SegreError):
        sigma_from_pi(IntPoly((1,)), 0, 2)

def test_negative_ranks_rejected():
    with pytest.raises(SegreError):
        betti_from_sigma(SigmaVector(2, (1, -5, 0)), 3)
