# thetaspan/errors.py
from typing import Any


class ThetaSpanError(Exception):
    """Base error; `status` doubles as the CLI exit code"""

    status = 2

    def __init__(self, detail: str, **context: Any):
        super().__init__(detail)
        self.detail = detail
        self.context = context

    def to_dict(self) -> dict:
        body = {"message": type(self).__name__, "detail": self.detail}
        if self.context:
            body["context"] = {k: _plain(v) for k, v in self.context.items()}
        return body


def _plain(value: Any) -> Any:
    if hasattr(value, "model_dump"):
        return value.model_dump()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


# ==================== INPUT ====================
class DegenerateInputError(ThetaSpanError):
    status = 3


class PointParseError(ThetaSpanError):
    status = 4

    def __init__(self, detail: str, line: int, column: int | None = None):
        super().__init__(f"line {line}: {detail}", line=line, column=column)
        self.line = line
        self.column = column


class DuplicatePointError(PointParseError):
    pass


class NonFiniteCoordinateError(PointParseError):
    pass


class UnknownFormatError(ThetaSpanError):
    status = 5


# ==================== CONSTRUCTION ====================
class GraphIntegrityError(ThetaSpanError):
    status = 6


class ExhaustivenessError(ThetaSpanError):
    """No case of the path construction matched; signals a degeneracy"""

    status = 7


class ConstructionFailure(ThetaSpanError):
    status = 8


class CheckpointMismatchError(ThetaSpanError):
    status = 9

    def __init__(self, detail: str, step: int, **context: Any):
        super().__init__(f"step {step}: {detail}", step=step, **context)
        self.step = step


class AdversaryValidationError(ThetaSpanError):
    status = 10

    def __init__(self, detail: str, cycle: int, **context: Any):
        super().__init__(f"cycle {cycle}: {detail}", cycle=cycle, **context)
        self.cycle = cycle
