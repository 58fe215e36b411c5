#!/usr/bin/env python3

# Core
import logging
logger = logging.getLogger(__name__)
# Third-party
from celery import Celery, shared_task
import numpy as np
# Project
import settings

app = Celery('count',
        broker=settings.broker_url() or 'amqp://localhost',
        backend='rpc://')

# --------------------------------------------------------------------------- #

def _count_nonvanishing(forms: list, p: int, lead: int, lead_values: list,
        chunk_size: int) -> int:
    # Points are zero before `lead`, take a value from lead_values at `lead`
    # and range over F_p after it
    matrix = np.array(forms, dtype=np.int64)
    m = matrix.shape[1]
    free = m - lead - 1
    choices = len(lead_values)
    total = choices * p ** free
    place_values = [p ** j for j in range(free)]
    leads = np.array(lead_values, dtype=np.int64)

    count = 0
    for start in range(0, total, chunk_size):
        indices = np.arange(start, min(start + chunk_size, total),
                dtype=np.int64)
        points = np.zeros((len(indices), m), dtype=np.int64)
        points[:, lead] = leads[indices % choices]
        rest = indices // choices
        for j, place in enumerate(place_values):
            points[:, lead + 1 + j] = (rest // place) % p
        values = (points @ matrix.T) % p
        count += int(np.count_nonzero(np.all(values != 0, axis=1)))

    logger.debug(f"Stratum {lead} mod {p}: {count} of {total} points")
    return count

# --------------------------------------------------------------------------- #

def count_stratum_points(forms: list, p: int, lead: int,
        chunk_size: int = 65_536) -> int:
    """
    Count the projective points whose first nonzero coordinate is at index
    `lead` (normalized to 1) and on which no form vanishes mod p.

    Args:
        forms: d x m list of residues mod p.
        p: The prime.
        lead: Index of the leading coordinate.
        chunk_size: Number of points evaluated per numpy batch.

    Returns:
        int: Number of complement points in the stratum.
    """
    return _count_nonvanishing(forms, p, lead, [1], chunk_size)

def count_affine_stratum_points(forms: list, p: int, lead: int,
        chunk_size: int = 65_536) -> int:
    """
    Count the vectors of F_p^m whose first nonzero coordinate is at index
    `lead` (any of its p-1 nonzero values) and on which no form vanishes.
    """
    return _count_nonvanishing(forms, p, lead, list(range(1, p)), chunk_size)

# --------------------------------------------------------------------------- #

@shared_task(name='count_stratum')
def count_stratum(forms: list, p: int, lead: int, chunk_size: int) -> int:
    logging.info(f"Counting stratum {lead} of a {len(forms)}-form " \
            f"arrangement mod {p}")
    return count_stratum_points(forms, p, lead, chunk_size)

@shared_task(name='count_affine_stratum')
def count_affine_stratum(forms: list, p: int, lead: int,
        chunk_size: int) -> int:
    logging.info(f"Counting affine stratum {lead} of a {len(forms)}-form " \
            f"arrangement mod {p}")
    return count_affine_stratum_points(forms, p, lead, chunk_size)

# --------------------------------------------------------------------------- #
