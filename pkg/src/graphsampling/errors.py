from __future__ import annotations

import enum


class ValidationKind(str, enum.Enum):
    NOT_CONNECTED = "NotConnected"
    NON_CONSECUTIVE_IDS = "NonConsecutiveIds"
    SELF_LOOP = "SelfLoop"
    DUPLICATE_EDGE = "DuplicateEdge"
    EMPTY = "Empty"


class ValidationError(ValueError):
    """The input graph violates one of the sampling input assumptions.

    ``kind`` names the violated assumption; ``detail`` is meant for the user.
    """

    def __init__(self, kind: ValidationKind, detail: str):
        self.kind = ValidationKind(kind)
        self.detail = detail
        super().__init__(f"{self.kind.value}: {detail}")


class EdgeListParseError(ValueError):
    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"line {line_number}: {reason}: {line!r}")


class SamplingError(RuntimeError):
    """A sampler gave up; ``guard`` names the non-termination guard that fired."""

    def __init__(self, method: str, guard: str, detail: str):
        self.method = method
        self.guard = guard
        super().__init__(f"{method}: {guard}: {detail}")


class GenerationError(RuntimeError):
    pass


class DegenerateStatistic(ArithmeticError):
    def __init__(self, statistic: str, condition: str):
        self.statistic = statistic
        self.condition = condition
        super().__init__(f"{statistic} is undefined: {condition}")


class HarnessError(RuntimeError):
    pass
