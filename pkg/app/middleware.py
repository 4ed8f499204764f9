"""Record serialization and error mapping"""

import json
from enum import Enum
from fractions import Fraction

import numpy as np
from pydantic import ValidationError as PydanticValidationError

from hecke.constants import EXIT_INTERNAL, EXIT_MATH_DOMAIN, EXIT_OK, EXIT_VALIDATION, logger
from hecke.errors import HeckeError
from hecke.exact.fields import GFElement

from app.models import ErrorRecord


# Custom JSON encoder for enums and exact scalars
class RecordJSONEncoder(json.JSONEncoder):
    def default(self, obj):
        return json_default(obj)


def json_default(obj):
    """Enums by value, exact scalars as decimal strings"""
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, GFElement):
        return str(obj.value)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def encode_record(record: dict) -> str:
    """One line of the record stream; keys sorted for byte-identical output"""
    return json.dumps(record, cls=RecordJSONEncoder, sort_keys=True)


def error_to_record(error: Exception) -> dict:
    if isinstance(error, HeckeError):
        return ErrorRecord(**error.to_record()).model_dump()
    if isinstance(error, PydanticValidationError):
        return ErrorRecord(code="validation_error", message=str(error)).model_dump()
    logger.error(f"Unexpected error: {type(error).__name__}: {error}")
    return ErrorRecord(code="internal_error", message=f"{type(error).__name__}: {error}").model_dump()


EXIT_CODES = {
    "validation_error": EXIT_VALIDATION,
    "math_domain_error": EXIT_MATH_DOMAIN,
    "internal_error": EXIT_INTERNAL,
}


def exit_code_for(job: dict) -> int:
    error = job.get("error") if job else None
    if not error:
        return EXIT_OK
    return EXIT_CODES.get(error.get("code"), EXIT_INTERNAL)
