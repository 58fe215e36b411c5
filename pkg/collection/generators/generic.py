# Project
from generator import ArrangementGenerator
from lattice import Arrangement

# =========================================================================== #

class GenericGenerator(ArrangementGenerator):
    """
    d hyperplanes with normal crossings: row i is (1, a, a^2, ..., a^n) with
    a = i, so any n+1 rows form an invertible Vandermonde matrix.
    """
    def __init__(self):
        super().__init__('generic')

    def generate(self, params: dict) -> Arrangement:
        d = self.require_int(params, 'd')
        n = self.require_int(params, 'n')
        return Arrangement.from_rows(n, [[a ** k for k in range(n + 1)]
                for a in range(1, d + 1)])

# =========================================================================== #

ArrangementGenerator.register('generic', GenericGenerator)
