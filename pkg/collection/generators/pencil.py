# Project
from generator import ArrangementGenerator
from lattice import Arrangement

# =========================================================================== #

class PencilGenerator(ArrangementGenerator):
    """
    d hyperplanes x_0 + i x_1 (i = 0..d-1) through the codimension-2
    subspace x_0 = x_1 = 0.
    """
    def __init__(self):
        super().__init__('pencil')

    def generate(self, params: dict) -> Arrangement:
        d = self.require_int(params, 'd')
        n = self.require_int(params, 'n')
        return Arrangement.from_rows(n, [[1, i] + [0] * (n - 1)
                for i in range(d)])

# =========================================================================== #

ArrangementGenerator.register('pencil', PencilGenerator)
