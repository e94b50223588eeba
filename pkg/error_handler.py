import functools
import sys
from typing import Any, Callable, Dict, Optional, Sequence

from enhanced_logging import get_enhanced_logger

# Setup enhanced logging
enhanced_logger = get_enhanced_logger("error_handler")

# ---------- EXIT CODES ----------
EXIT_OK = 0
EXIT_USER_ERROR = 1
EXIT_SOLVER_FAILURE = 2
EXIT_MISMATCH = 3


# ---------- CUSTOM EXCEPTIONS ----------
class WreathCountError(Exception):
    """Base exception for all wreathcount errors."""
    exit_code = EXIT_USER_ERROR


class DimensionError(WreathCountError):
    """Raised when operands live on different sizes n (or different groups)."""
    pass


class GroupValidationError(WreathCountError):
    """Raised when a Cayley table violates a group law or is malformed."""

    def __init__(self, message: str, law: str):
        super().__init__(f"{law} law violated: {message}")
        self.law = law


class IndexSetSyntaxError(WreathCountError):
    """Raised when an index-set expression cannot be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PreconditionError(WreathCountError):
    """Raised when an operation is called outside its contract."""
    pass


class IntegralityError(WreathCountError):
    """Raised when n! times an EGF coefficient fails to be an integer."""
    pass


class UnsupportedCaseError(WreathCountError):
    """Raised for parameter ranges the formulas deliberately do not cover."""
    pass


class OracleInfeasibleError(WreathCountError):
    """Raised when brute-force enumeration would exceed the configured budget."""

    def __init__(self, candidates: int, budget: int):
        super().__init__(
            f"oracle infeasible: {candidates} candidate elements exceed budget {budget}"
        )
        self.candidates = candidates
        self.budget = budget


class DomainError(WreathCountError):
    """Raised when a numeric routine is evaluated outside its domain."""
    pass


class NumericOverflowError(DomainError):
    """Raised when a value leaves double range and no log-scale fallback applies."""
    pass


class SolverError(WreathCountError):
    """Raised when a root finder or Newton iteration does not converge."""
    exit_code = EXIT_SOLVER_FAILURE

    def __init__(
        self,
        message: str,
        iterate: Optional[Sequence[float]] = None,
        residuals: Optional[Sequence[float]] = None,
        trace: Optional[Sequence[Any]] = None,
    ):
        super().__init__(message)
        self.iterate = tuple(iterate) if iterate is not None else None
        self.residuals = tuple(residuals) if residuals is not None else None
        self.trace = list(trace) if trace is not None else []


class VerificationMismatchError(WreathCountError):
    """Raised when two independent computations of the same count disagree."""
    exit_code = EXIT_MISMATCH

    def __init__(self, message: str, mismatches: Optional[Sequence[Dict[str, Any]]] = None):
        super().__init__(message)
        self.mismatches = list(mismatches or [])


class ConfigurationError(WreathCountError):
    """Raised when settings cannot be loaded or fail validation."""
    pass


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit code."""
    if isinstance(exc, WreathCountError):
        return exc.exit_code
    if isinstance(exc, (ValueError, FileNotFoundError, PermissionError)):
        return EXIT_USER_ERROR
    return EXIT_SOLVER_FAILURE


# ---------- ERROR HANDLER DECORATOR ----------
def handle_errors(command: Optional[str] = None, stream=None):
    """
    Error handling decorator for CLI commands.

    The wrapped function returns an exit code. Any exception is logged with
    structured context, reported on one line to ``stream`` (stderr by default)
    and converted to its exit code.

    Args:
        command: Name used in log records (defaults to the function name)
        stream: Where the one-line diagnostic goes
    """
    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> int:
            name = command or func.__name__
            enhanced_logger.set_context(command=name)
            out = stream or sys.stderr

            try:
                return func(*args, **kwargs)

            except SolverError as e:
                enhanced_logger.error(
                    "Solver failure",
                    exception=e,
                    iterate=e.iterate,
                    residuals=e.residuals,
                )
                print(f"error: {e}", file=out)
                return e.exit_code

            except VerificationMismatchError as e:
                enhanced_logger.error(
                    "Verification mismatch", exception=e, mismatches=len(e.mismatches)
                )
                print(f"error: {e}", file=out)
                return e.exit_code

            except OracleInfeasibleError as e:
                enhanced_logger.warning(
                    "Oracle budget exceeded", candidates=e.candidates, budget=e.budget
                )
                print(f"error: {e}", file=out)
                return e.exit_code

            except WreathCountError as e:
                enhanced_logger.error("Invalid request", exception=e)
                print(f"error: {e}", file=out)
                return e.exit_code

            except (FileNotFoundError, PermissionError, ValueError) as e:
                enhanced_logger.error("Input error", exception=e)
                print(f"error: {e}", file=out)
                return exit_code_for(e)

            except KeyboardInterrupt:
                enhanced_logger.info("User interrupted command")
                raise

            except Exception as e:
                enhanced_logger.error("Unexpected failure", exception=e)
                print(f"error: {type(e).__name__}: {e}", file=out)
                return exit_code_for(e)

            finally:
                enhanced_logger.clear_context()

        return wrapper
    return decorator
