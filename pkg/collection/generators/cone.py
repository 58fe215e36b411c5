# Project
from generator import ArrangementGenerator, GeneratorError, generate
from lattice import Arrangement, cone

# =========================================================================== #

class ConeGenerator(ArrangementGenerator):
    """
    Cone over another builtin: params are 'base', 'k' and the base's own
    parameters.
    """
    def __init__(self):
        super().__init__('cone')

    def generate(self, params: dict) -> Arrangement:
        base = params.pop('base', None)
        if not base or base == 'cone':
            raise GeneratorError("The cone builtin needs a 'base' builtin " \
                    "other than 'cone'")
        k = self.require_int(params, 'k', minimum=0)
        params.pop('k')
        return cone(generate(base, params), k)

# =========================================================================== #

ArrangementGenerator.register('cone', ConeGenerator)
