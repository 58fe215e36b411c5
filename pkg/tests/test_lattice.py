#!/usr/bin/env python3

# Core
from collections import Counter
# Third-party
import pytest
# Project
from charpoly import IntPoly, char_poly
from generator import generate
from lattice import Arrangement, ArrangementError, build_lattice, center, \
    cone, essentialize, is_essential, lattice_of, mobius_assign

# =========================================================================== #

def test_boolean_lattice():
    lattice = lattice_of(generate('boolean', {'n': 2}))
    assert len(lattice.flats) == 8
    assert lattice.level_counts() == {0: 1, 1: 3, 2: 3, 3: 1}
    for flat in lattice.flats:
        assert flat.mobius == (-1) ** flat.codim

def test_four_line_lattice(four_lines_lattice):
    assert four_lines_lattice.level_counts() == {0: 1, 1: 4, 2: 4, 3: 1}
    assert four_lines_lattice.mobius_by_level() == {
        0: [1], 1: [-1, -1, -1, -1], 2: [1, 1, 1, 2], 3: [-2]}
    assert four_lines_lattice.mobius_multisets() == {
        0: Counter({1: 1}), 1: Counter({-1: 4}), 2: Counter({1: 3, 2: 1}),
        3: Counter({-2: 1})}

def test_four_line_triple_point(four_lines_lattice):
    triple = [flat for flat in four_lines_lattice.flats
            if flat.members == frozenset({0, 1, 2})]
    assert len(triple) == 1
    assert triple[0].codim == 2
    assert triple[0].mobius == 2

def test_single_hyperplane():
    lattice = lattice_of(Arrangement.from_rows(3, [[1, 2, 3, 4]]))
    assert len(lattice.flats) == 2
    assert lattice.mobius_by_level() == {0: [1], 1: [-1]}

def test_counterexample_levels(counterexample_lattice):
    assert counterexample_lattice.level_counts() == {0: 1, 1: 9, 2: 13, 3: 1}
    assert counterexample_lattice.top.mobius == -15
    assert sum(counterexample_lattice.mobius_by_level()[2]) == 23

# --------------------------------------------------------------------------- #

def test_build_then_assign():
    lattice = build_lattice(generate('boolean', {'n': 1}))
    assert not lattice.has_mobius
    with pytest.raises(ValueError):
        lattice.mobius_by_level()
    assert mobius_assign(lattice).has_mobius

def test_mobius_recursion(counterexample_lattice):
    flats = counterexample_lattice.flats
    for i, flat in enumerate(flats):
        if flat.codim:
            total = flat.mobius + sum(flats[j].mobius
                    for j in counterexample_lattice.below[i])
            assert total == 0

# --------------------------------------------------------------------------- #

@pytest.mark.parametrize('rows, indices', [
    ([[1, 0, 0], [0, 0, 0]], (1,)),
    ([[1, 2, 0], [0, 1, 0], [2, 4, 0]], (0, 2)),
])
def test_invalid_forms(rows, indices):
    with pytest.raises(ArrangementError) as err:
        Arrangement.from_rows(2, rows)
    assert err.value.indices == indices

def test_wrong_width():
    with pytest.raises(ArrangementError):
        Arrangement.from_rows(2, [[1, 0]])

# --------------------------------------------------------------------------- #

def test_center(xyz):
    assert center(generate('boolean', {'n': 2})).dim == 0
    assert is_essential(generate('boolean', {'n': 2}))
    assert center(xyz).dim == 1
    assert center(generate('pencil', {'d': 4, 'n': 5})).dim == 4

def test_cone(four_lines, counterexample):
    assert cone(four_lines, 0) == four_lines
    coned = cone(counterexample, 7)
    assert (coned.n, coned.d) == (9, 9)
    assert center(coned).dim == center(counterexample).dim + 7
    assert char_poly(lattice_of(coned)) == \
            IntPoly.from_roots([5, 3, 1] + [0] * 7)

def test_cone_single_point():
    chi = char_poly(lattice_of(cone(Arrangement.from_rows(1, [[1, 0]]), 1)))
    assert chi == IntPoly((0, 0, -1, 1))

def test_cone_negative():
    with pytest.raises(ArrangementError):
        cone(generate('boolean', {'n': 1}), -1)

# --------------------------------------------------------------------------- #

def test_essentialize_essential(four_lines):
    assert essentialize(four_lines) == (four_lines, 0)

def test_essentialize_coned(counterexample, coned_counterexample):
    essential, k = essentialize(coned_counterexample)
    assert k == 7
    assert (essential.n, essential.d) == (2, 9)
    assert is_essential(essential)
    assert char_poly(lattice_of(essential)) == \
            char_poly(lattice_of(counterexample))

@pytest.mark.parametrize('d, n', [(2, 2), (3, 4), (5, 3)])
def test_essentialize_pencil(d, n):
    essential, k = essentialize(generate('pencil', {'d': d, 'n': n}))
    assert k == n - 1
    assert (essential.n, essential.d) == (1, d)
    assert char_poly(lattice_of(essential)) == \
            char_poly(lattice_of(generate('pencil', {'d': d, 'n': 1})))
