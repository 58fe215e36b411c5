#!/usr/bin/env python3

# Third-party
import pytest
# Project
from generator import generate
from lattice import Arrangement, lattice_of

# =========================================================================== #

@pytest.fixture
def four_lines() -> Arrangement:
    # Three concurrent lines plus a transversal
    return Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0],
            [0, 0, 1]])

@pytest.fixture
def xyz() -> Arrangement:
    return Arrangement.from_rows(3, [[0, 1, 0, 0], [0, 0, 1, 0],
            [0, 0, 0, 1]])

@pytest.fixture
def counterexample() -> Arrangement:
    return generate('counterexample')

@pytest.fixture
def coned_counterexample(counterexample) -> Arrangement:
    return generate('cone', {'base': 'counterexample', 'k': 7})

@pytest.fixture
def six_lines() -> Arrangement:
    return generate('generic', {'d': 6, 'n': 2})

# --------------------------------------------------------------------------- #

@pytest.fixture
def four_lines_lattice(four_lines):
    return lattice_of(four_lines)

@pytest.fixture
def counterexample_lattice(counterexample):
    return lattice_of(counterexample)
