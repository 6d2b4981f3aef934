# src/hermrank/errors.py
"""
hermrank 공통 예외.

각 예외는 같은 상황에서 원래 던졌을 builtin 예외(ValueError 등)를 상속하므로
`except ValueError` 로도 잡을 수 있다.
"""
from __future__ import annotations

from typing import Any, Optional, Tuple


class HermrankError(Exception):
    """hermrank 에서 발생하는 모든 도메인 예외의 공통 부모."""


class DivisionByZero(HermrankError, ZeroDivisionError):
    pass


class DimensionMismatch(HermrankError, ValueError):
    pass


class ZeroPolynomial(HermrankError, ValueError):
    pass


class ZeroProduct(HermrankError, ValueError):
    """A·‖z‖² ≡ 0 (degenerate form 이 A 의 support 를 모두 지운 경우)."""


class NotBihomogeneous(HermrankError, ValueError):
    pass


class RankDeficientParametrization(HermrankError, ValueError):
    pass


class InvalidInput(HermrankError, ValueError):
    pass


class TrivialSignature(HermrankError, ValueError):
    """tau >= n-1: gap 정리가 다루지 않는 자명한 signature."""


class HypothesisViolated(HermrankError, ValueError):
    pass


class SpecError(HermrankError, ValueError):
    pass


class PolySyntaxError(HermrankError, ValueError):
    """PolyText 문법 오류. offset 은 입력 문자열의 바이트 위치."""

    def __init__(self, message: str, offset: int = 0) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnknownVariable(PolySyntaxError):
    pass


class NotHermitian(HermrankError, ValueError):
    """
    Hermitian 대칭 c_{βα} = conj(c_{αβ}) 위반.
    pair: 문제가 된 (alpha, beta), found/expected: 켤레 위치의 실제 값과 기대 값
    """

    def __init__(
        self,
        message: str,
        pair: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None,
        found: Any = None,
        expected: Any = None,
    ) -> None:
        super().__init__(message)
        self.pair = pair
        self.found = found
        self.expected = expected


class SchemaError(HermrankError, ValueError):
    """JSON 스키마 오류. pointer 는 RFC 6901 JSON pointer (예: /terms/3/re)."""

    def __init__(self, message: str, pointer: str = "") -> None:
        super().__init__(f"{message} (at {pointer or '/'})")
        self.pointer = pointer
