# Project
from generator import ArrangementGenerator
from lattice import Arrangement

# =========================================================================== #

class BooleanGenerator(ArrangementGenerator):
    """
    The n+1 coordinate hyperplanes of P^n.
    """
    def __init__(self):
        super().__init__('boolean')

    def generate(self, params: dict) -> Arrangement:
        n = self.require_int(params, 'n')
        return Arrangement.from_rows(n, [[1 if i == j else 0
                for j in range(n + 1)] for i in range(n + 1)])

# =========================================================================== #

ArrangementGenerator.register('boolean', BooleanGenerator)
