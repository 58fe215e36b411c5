#!/usr/bin/env python3

# Core
from abc import ABC, abstractmethod
from pathlib import Path
import importlib
import logging

# =========================================================================== #

class CountServiceException(Exception):
    pass

# =========================================================================== #

class CountService(ABC):
    """
    Backend that counts complement points stratum by stratum. Strata are
    independent, so the total does not depend on how they are scheduled.
    """

    _registry = {}

    # ----------------------------------------------------------------------- #

    def __init__(self, uid: str):
        self.uid = uid

    # ----------------------------------------------------------------------- #

    @classmethod
    def register(cls, uid, service_cls):
        cls._registry[uid] = service_cls

    # ----------------------------------------------------------------------- #

    @classmethod
    def get_service(cls, uid):
        return cls._registry.get(uid)

    # ----------------------------------------------------------------------- #

    @abstractmethod
    def count_strata(self, forms: list, p: int, leads: list,
            chunk_size: int, affine: bool = False) -> list:
        pass

# =========================================================================== #

def load_count_services() -> None:
    """
    Import every module under services/counting; each registers itself.
    """
    base_path = Path(__file__).parent / 'services' / 'counting'
    for path in sorted(base_path.glob('*.py')):
        if path.name != '__init__.py':
            importlib.import_module(f"services.counting.{path.stem}")

# --------------------------------------------------------------------------- #

def get_count_service(uid: str) -> CountService:
    load_count_services()
    service = CountService.get_service(uid)
    if not service:
        raise CountServiceException(f"No counting backend named '{uid}'")
    return service()

# =========================================================================== #
