# Project
from generator import ArrangementGenerator
from lattice import Arrangement

# The factors of x0 x1 x2 (x0-x1)(x0-x2)(x1-x2)(x0+x1)(x0+x2)(x1+x2)
FORMS = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, -1, 0],
    [1, 0, -1],
    [0, 1, -1],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
]

# =========================================================================== #

class CounterexampleGenerator(ArrangementGenerator):
    """
    Free arrangement of 9 lines in P^2 with exponents 1, 3, 5. Coned to P^9
    it is free of degree 9 with non-effective CSM class.
    """
    def __init__(self):
        super().__init__('counterexample')

    def generate(self, params: dict) -> Arrangement:
        return Arrangement.from_rows(2, FORMS)

# =========================================================================== #

ArrangementGenerator.register('counterexample', CounterexampleGenerator)
