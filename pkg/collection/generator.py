#!/usr/bin/env python3

# Core
from abc import ABC, abstractmethod
from pathlib import Path
import importlib
import logging
# Project
from lattice import Arrangement

# =========================================================================== #

class GeneratorError(Exception):
    pass

# =========================================================================== #

class ArrangementGenerator(ABC):
    """
    Builtin arrangement family. Subclasses register themselves under a name
    when their module is imported.
    """

    _registry = {}

    # ----------------------------------------------------------------------- #

    def __init__(self, uid: str):
        self.uid = uid

    # ----------------------------------------------------------------------- #

    @classmethod
    def register(cls, uid, generator_cls):
        cls._registry[uid] = generator_cls

    # ----------------------------------------------------------------------- #

    @classmethod
    def get_generator(cls, uid):
        return cls._registry.get(uid)

    # ----------------------------------------------------------------------- #

    @classmethod
    def names(cls) -> list:
        return sorted(cls._registry)

    # ----------------------------------------------------------------------- #

    @staticmethod
    def require_int(params: dict, name: str, minimum: int = 1) -> int:
        if name not in params:
            raise GeneratorError(f"Missing parameter '{name}'")
        try:
            value = int(params[name])
        except (TypeError, ValueError) as err:
            raise GeneratorError(f"Parameter '{name}' must be an integer, " \
                    f"got '{params[name]}'") from err
        if value < minimum:
            raise GeneratorError(f"Parameter '{name}' must be >= {minimum}, " \
                    f"got {value}")
        return value

    # ----------------------------------------------------------------------- #

    @abstractmethod
    def generate(self, params: dict) -> Arrangement:
        pass

# =========================================================================== #

def load_generators() -> None:
    """
    Import every module in the generators directory so that each builtin
    registers itself.
    """
    base_path = Path(__file__).parent / 'generators'
    for path in sorted(base_path.glob('*.py')):
        if path.name != '__init__.py':
            importlib.import_module(f"generators.{path.stem}")

# --------------------------------------------------------------------------- #

def generate(name: str, params: dict = None) -> Arrangement:
    """
    Build a builtin arrangement.

    Args:
        name (str): Registered generator name, e.g. 'pencil'.
        params (dict): Generator parameters, e.g. {'d': 3, 'n': 2}.

    Returns:
        Arrangement: The generated arrangement.

    Raises:
        GeneratorError: For unknown names or invalid parameters.
    """
    load_generators()
    generator_cls = ArrangementGenerator.get_generator(name)
    if not generator_cls:
        raise GeneratorError(f"Unknown builtin '{name}', choose one of " \
                f"{', '.join(ArrangementGenerator.names())}")
    arrangement = generator_cls().generate(dict(params or {}))
    logging.info(f"Generated '{name}': {arrangement.d} hyperplanes in " \
            f"P^{arrangement.n}")
    return arrangement

# =========================================================================== #
