#!/usr/bin/env python3

# Core
import logging
# Third-party
from celery.exceptions import CeleryError
from kombu.exceptions import OperationalError
# Project
from count_service import CountService, CountServiceException
from tasks.count import count_affine_stratum, count_stratum

# =========================================================================== #

class CeleryCount(CountService):
    """
    Send one count_stratum task per stratum to the 'counting' queue and sum
    the results as they come back.
    """
    TIMEOUT = 3600

    def __init__(self):
        super().__init__('celery')

    # ----------------------------------------------------------------------- #

    def count_strata(self, forms: list, p: int, leads: list,
            chunk_size: int, affine: bool = False) -> list:
        logging.info(f"CeleryCount() dispatching {len(leads)} strata mod {p}")
        task = count_affine_stratum if affine else count_stratum
        try:
            results = [task.apply_async(
                           args=[forms, p, lead, chunk_size],
                           queue='counting')
                       for lead in leads]
            return [int(result.get(timeout=self.TIMEOUT)) for result in results]
        except OperationalError as err:
            raise CountServiceException(f"Could not reach the Celery " \
                    f"broker: {err}") from err
        except CeleryError as err:
            raise CountServiceException(f"Counting task failed: {err}") \
                    from err

# =========================================================================== #

CountService.register('celery', CeleryCount)
