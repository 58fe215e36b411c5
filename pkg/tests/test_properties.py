#!/usr/bin/env python3

# Core
import random
# Third-party
from sympy.polys.domains import QQ
# Project
from charpoly import IntPoly, char_poly, poincare, reduced_char, \
    reduced_poincare, reduced_poincare_from_char
from classes import betti, csm_arrangement, csm_complement, \
    csm_complement_from_poincare, effectivity_from_chibar, effectivity_poly
from exactlin import RatMatrix, rank, rref
from lattice import Arrangement, ArrangementError, cone, essentialize, \
    lattice_of
from segre import SigmaVector, pi_from_sigma, sigma_from_pi

# =========================================================================== #

def _random_arrangements(seed: int, count: int, max_n: int = 3,
        max_d: int = 6, spread: int = 3):
    rng = random.Random(seed)
    found = 0
    while found < count:
        n = rng.randint(1, max_n)
        d = rng.randint(1, max_d)
        rows = [[rng.randint(-spread, spread) for _ in range(n + 1)]
                for _ in range(d)]
        try:
            a = Arrangement.from_rows(n, rows)
        except ArrangementError:
            continue
        found += 1
        yield a

# --------------------------------------------------------------------------- #

def test_structural_invariants():
    for a in _random_arrangements(7, 100):
        lattice = lattice_of(a)
        flats = lattice.flats
        assert lattice.level_counts()[1] == a.d

        for i, flat in enumerate(flats):
            if flat.codim:
                assert flat.mobius + sum(flats[j].mobius
                        for j in lattice.below[i]) == 0
            assert (-1) ** flat.codim * flat.mobius > 0

        chi = char_poly(lattice)
        pi = poincare(chi)
        chibar, pibar = reduced_char(chi), reduced_poincare(pi)
        assert chi(1) == 0 and pi(-1) == 0
        assert pibar == reduced_poincare_from_char(chibar)
        assert all(c >= 0 for c in pi.coeffs)
        assert betti(pibar, a.n).ranks[0] == 1

        assert csm_complement(chibar, a.n) == \
                csm_complement_from_poincare(pibar, a.n)
        csm_arrangement(lattice, chibar)
        assert effectivity_poly(lattice) == effectivity_from_chibar(chibar, a.n)

def test_cone_scales_chi():
    for a in _random_arrangements(11, 20, max_d=5):
        chi = char_poly(lattice_of(a))
        coned = cone(a, 2)
        assert char_poly(lattice_of(coned)) == chi * IntPoly.monomial(2)
        essential, k = essentialize(coned)
        assert k >= 2
        assert char_poly(lattice_of(essential)) * IntPoly.monomial(k) == \
                char_poly(lattice_of(coned))

# --------------------------------------------------------------------------- #

def _shuffled(a: Arrangement, rng: random.Random) -> Arrangement:
    rows = a.forms.to_rows()
    rng.shuffle(rows)
    return Arrangement.from_rows(a.n, rows)

def test_lattice_ignores_row_order():
    rng = random.Random(13)
    for a in _random_arrangements(17, 40):
        lattice = lattice_of(a)
        shuffled = lattice_of(_shuffled(a, rng))
        assert shuffled.level_counts() == lattice.level_counts()
        assert shuffled.mobius_by_level() == lattice.mobius_by_level()
        assert len({flat.members for flat in shuffled.flats}) == \
                len(shuffled.flats)
        assert char_poly(shuffled) == char_poly(lattice)

def test_rank_ignores_row_order():
    rng = random.Random(19)
    for a in _random_arrangements(23, 60):
        assert rank(_shuffled(a, rng).forms) == rank(a.forms)

def _row_operations(rows: list, rng: random.Random) -> list:
    rows = [list(row) for row in rows]
    for _ in range(2 * len(rows)):
        i, j = rng.randrange(len(rows)), rng.randrange(len(rows))
        kind = rng.randrange(3)
        if kind == 0:
            scale = QQ(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
            rows[i] = [scale * v for v in rows[i]]
        elif kind == 1 and i != j:
            factor = QQ(rng.randint(-3, 3), rng.randint(1, 3))
            rows[i] = [u + factor * v for u, v in zip(rows[i], rows[j])]
        else:
            rows[i], rows[j] = rows[j], rows[i]
    return rows

def test_rref_invariant_under_row_operations():
    rng = random.Random(29)
    for a in _random_arrangements(31, 60):
        rows = _row_operations(a.forms.to_rows(), rng)
        transformed = RatMatrix.from_rows(rows, a.n + 1)
        assert rref(transformed) == rref(a.forms)

# --------------------------------------------------------------------------- #

def test_sigma_transform_round_trip():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(0, 10)
        d = rng.randint(1, 12)
        pibar = IntPoly([1] + [rng.randint(-10 ** 6, 10 ** 6)
                for _ in range(n)])
        sigma = sigma_from_pi(pibar, d, n)
        assert pi_from_sigma(sigma, d) == pibar
        assert sigma_from_pi(pi_from_sigma(sigma, d), d, n) == sigma

def test_pi_transform_round_trip():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(0, 10)
        d = rng.randint(1, 12)
        sigma = SigmaVector(n, (1,) + tuple(rng.randint(-10 ** 6, 10 ** 6)
                for _ in range(n)))
        assert sigma_from_pi(pi_from_sigma(sigma, d), d, n) == sigma
