#!/usr/bin/env python3

# Core
import logging
# Project
from count_service import CountService
from tasks.count import count_affine_stratum_points, count_stratum_points

# =========================================================================== #

class LocalCount(CountService):
    """
    Single-threaded reference path: strata are counted in order in-process.
    """
    def __init__(self):
        super().__init__('local')

    # ----------------------------------------------------------------------- #

    def count_strata(self, forms: list, p: int, leads: list,
            chunk_size: int, affine: bool = False) -> list:
        logging.debug(f"LocalCount() counting {len(leads)} strata mod {p}")
        count = count_affine_stratum_points if affine else count_stratum_points
        return [count(forms, p, lead, chunk_size)
                for lead in leads]

# =========================================================================== #

CountService.register('local', LocalCount)
