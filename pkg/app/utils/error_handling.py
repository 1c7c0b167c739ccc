# app/utils/error_handling.py

import logging
import traceback
from typing import Any, Dict, Optional, Tuple

import pydantic

from app.utils.response_formatter import error_response

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2


class QdhaError(Exception):
    """Base class for toolkit errors"""
    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_USAGE,
        error_code: str = "internal_error",
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code
        self.details = details or {}
        super().__init__(message)


class ConductorMismatch(QdhaError):
    """Binary scalar operation across different cyclotomic fields"""
    def __init__(self, left: int, right: int):
        super().__init__(
            message=f"conductor mismatch: {left} vs {right} (embed first)",
            exit_code=EXIT_USAGE,
            error_code="conductor_mismatch",
            details={"left": left, "right": right}
        )


class FieldDivisionByZero(QdhaError, ZeroDivisionError):
    """Inversion of the zero scalar"""
    def __init__(self, message: str = "division by zero in cyclotomic field"):
        super().__init__(
            message=message,
            exit_code=EXIT_MATH_FAILURE,
            error_code="division_by_zero"
        )


class EmbedError(QdhaError):
    """Embedding into a field whose conductor is not a multiple"""
    def __init__(self, source: int, target: int):
        super().__init__(
            message=f"cannot embed Q(zeta_{source}) into Q(zeta_{target})",
            exit_code=EXIT_USAGE,
            error_code="embed_error",
            details={"source": source, "target": target}
        )


class DimensionMismatch(QdhaError):
    """Objects of different dimension were combined"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_USAGE,
            error_code="dimension_mismatch",
            details=details
        )


class ClosureCapExceeded(QdhaError):
    """Group closure grew beyond the configured cap"""
    def __init__(self, cap: int):
        super().__init__(
            message=f"group closure exceeded cap of {cap} elements",
            exit_code=EXIT_MATH_FAILURE,
            error_code="closure_cap_exceeded",
            details={"cap": cap}
        )


class NonInvertibleGenerator(QdhaError):
    """A generator matrix is singular"""
    def __init__(self, name: str):
        super().__init__(
            message=f"generator {name} is not invertible",
            exit_code=EXIT_USAGE,
            error_code="non_invertible_generator",
            details={"generator": name}
        )


class PreconditionFailed(QdhaError):
    """Action checks required by the cocycle solver did not pass"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_MATH_FAILURE,
            error_code="precondition_failed",
            details=details
        )


class AntisymmetryViolation(QdhaError):
    """kappa(v_i, v_j) != -q_ij kappa(v_j, v_i) for some group component"""
    def __init__(self, g: int, i: int, j: int):
        super().__init__(
            message=f"kappa violates quantum antisymmetry at g={g}, (i,j)=({i},{j})",
            exit_code=EXIT_MATH_FAILURE,
            error_code="antisymmetry_violation",
            details={"g": g, "i": i, "j": j}
        )


class PbwPreconditionFailed(QdhaError):
    """Rewriting in the deformed algebra requested for a kappa failing the criteria"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_MATH_FAILURE,
            error_code="pbw_precondition_failed",
            details=details
        )


class NotDiagonal(QdhaError):
    """A diagonal-action routine was handed a non-diagonal group"""
    def __init__(self, element: int):
        super().__init__(
            message=f"group element {element} does not act diagonally",
            exit_code=EXIT_MATH_FAILURE,
            error_code="not_diagonal",
            details={"element": element}
        )


class InvalidFamilySpec(QdhaError):
    """Reflection group or family parameters are inconsistent"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            message=message,
            exit_code=EXIT_USAGE,
            error_code="invalid_family_spec",
            details=details
        )


class FamilyOrderMismatch(QdhaError):
    """Closure of family generators produced the wrong group order"""
    def __init__(self, expected: int, actual: int):
        super().__init__(
            message=f"family closure has order {actual}, expected {expected}",
            exit_code=EXIT_MATH_FAILURE,
            error_code="family_order_mismatch",
            details={"expected": expected, "actual": actual}
        )


class ProblemParseError(QdhaError):
    """Syntax error in a problem file or expression"""
    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(
            message=f"{prefix}{message}",
            exit_code=EXIT_USAGE,
            error_code="parse_error",
            details={"line": line}
        )
        self.line = line


class ProblemInvariantError(QdhaError):
    """Problem file parsed but violates a structural invariant"""
    def __init__(self, message: str, line: Optional[int] = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(
            message=f"{prefix}{message}",
            exit_code=EXIT_USAGE,
            error_code="invariant_error",
            details={"line": line}
        )
        self.line = line


def handle_cli_error(error: Exception) -> Tuple[int, Dict[str, Any]]:
    """
    Convert any exception to an exit code and an error envelope.

    Args:
        error: The exception to handle

    Returns:
        (exit code, error response dictionary)
    """
    if isinstance(error, QdhaError):
        logger.warning(f"{error.error_code}: {error.message}")
        return error.exit_code, error_response(
            message=error.message,
            error_code=error.error_code,
            details=error.details
        )

    if isinstance(error, pydantic.ValidationError):
        problems = [f"{'.'.join(str(p) for p in e['loc'])}: {e['msg']}" for e in error.errors()]
        logger.warning(f"validation_error: {problems}")
        return EXIT_USAGE, error_response(
            message="invalid parameters: " + "; ".join(problems),
            error_code="validation_error",
            details={"errors": problems}
        )

    tb = traceback.format_exc()
    logger.error(f"Unexpected error: {str(error)}\n{tb}")
    return EXIT_USAGE, error_response(
        message="An unexpected error occurred",
        error_code="internal_error",
        details={"error_type": type(error).__name__}
    )

