#!/usr/bin/env python3

# Core
from pathlib import Path
from typing import Union
import json
import logging
import re
# Third-party
from pydantic import ValidationError
from sympy.polys.domains import QQ
# Project
from exactlin import RatMatrix
from lattice import Arrangement
from models import ArrangementDocument

RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')

# =========================================================================== #

class InputError(Exception):
    pass

# =========================================================================== #

def parse_rational(text: str, row: int = None, col: int = None):
    """
    Parse "3/4", "-2" or "+5" into an exact QQ element.

    Raises:
        InputError: With the row/column location when given.
    """
    where = f" at row {row}, column {col}" if row is not None else ""
    match = RATIONAL_PATTERN.match(str(text))
    if not match:
        raise InputError(f"Malformed rational '{text}'{where}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InputError(f"Zero denominator in '{text}'{where}")
    return QQ(numerator, denominator)

# --------------------------------------------------------------------------- #

def arrangement_from_document(document: ArrangementDocument) -> Arrangement:
    width = document.n + 1
    rows = []
    for i, row in enumerate(document.forms):
        if len(row) != width:
            raise InputError(f"Row {i} has {len(row)} entries, expected " \
                    f"{width} for P^{document.n}")
        rows.append([parse_rational(entry, i, j) for j, entry in enumerate(row)])
    return Arrangement(document.n, RatMatrix.from_rows(rows, width))

# --------------------------------------------------------------------------- #

def parse_input(source: Union[str, Path]) -> Arrangement:
    """
    Read an arrangement from a JSON file path or from inline JSON text.

    Args:
        source: Path to a file, or the JSON document itself.

    Returns:
        Arrangement: The parsed arrangement. Invariant violations (zero or
        repeated forms) surface as ArrangementError.

    Raises:
        InputError: If the document cannot be read or parsed.
    """
    text = str(source)
    if not text.lstrip().startswith('{'):
        try:
            with open(text, 'r') as file_handle:
                text = file_handle.read()
        except OSError as err:
            raise InputError(f"Cannot read input file '{source}': {err}") \
                    from err

    try:
        document = ArrangementDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as err:
        raise InputError(f"Input is not valid JSON: {err}") from err
    except ValidationError as err:
        raise InputError(f"Input does not match the arrangement schema: " \
                f"{err}") from err

    arrangement = arrangement_from_document(document)
    logging.info(f"Parsed {arrangement.d} hyperplanes in P^{arrangement.n}")
    return arrangement

# =========================================================================== #
