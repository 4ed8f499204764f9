"""Exception hierarchy shared by the library and the CLI"""


class HeckeError(Exception):
    """Base class; every subclass carries a stable code"""

    code = "hecke_error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_record(self) -> dict:
        return {"code": self.code, "message": self.message}


class ValidationError(HeckeError):
    code = "validation_error"


class MathDomainError(HeckeError, ValueError):
    code = "math_domain_error"


class InternalError(HeckeError, RuntimeError):
    code = "internal_error"
