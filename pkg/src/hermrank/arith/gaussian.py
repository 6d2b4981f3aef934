# src/hermrank/arith/gaussian.py
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from hermrank.arith.rational import bit_size, format_rational, parse_rational
from hermrank.errors import DivisionByZero, InvalidInput

_ZERO = Fraction(0)
_ONE = Fraction(1)

# a, a/b, bi, b/ci, a+bi, a/b-c/di, i, -i
_GAUSSIAN_RE = re.compile(
    r"^\s*(?:(?P<re>[+-]?\d+(?:/\d+)?)(?=$|\s*[+-]))?"
    r"\s*(?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?)?)i)?\s*$"
)


class GaussianRational:
    """
    유리수 실수부/허수부를 갖는 정확한 복소수.

    불변(immutable) 값 객체이며 프로세스 간에 자유롭게 전달 가능하다.
    (랭크 파이프라인의 hot path 에서 쓰이므로 dataclass 대신 __slots__ 클래스로 둔다.)
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0) -> None:
        object.__setattr__(self, "re", _coerce(re))
        object.__setattr__(self, "im", _coerce(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # --- field operations ---

    def __add__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> "GaussianRational":
        return self

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if not n:
            raise DivisionByZero("[GaussianRational.inverse] division by zero")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|x|^2 (유리수)."""
        return self.re * self.re + self.im * self.im

    def __pow__(self, k: int) -> "GaussianRational":
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("[GaussianRational.__pow__] exponent must be a non-negative int")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # --- predicates / comparison ---

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        o = _lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def bit_size(self) -> int:
        return bit_size(self.re) + bit_size(self.im)

    # --- conversions ---

    def to_complex(self) -> complex:
        """표시용 손실 변환. rank 파이프라인에서는 절대 사용하지 않는다."""
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianRational({format_gaussian(self)!r})"


def _coerce(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise InvalidInput(f"[GaussianRational] exact int/Fraction required, got {type(x).__name__}")


def _lift(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, Fraction):
        return GaussianRational._raw(x, _ZERO)
    if isinstance(x, int) and not isinstance(x, bool):
        return GaussianRational._raw(Fraction(x), _ZERO)
    return NotImplemented


ZERO = GaussianRational._raw(_ZERO, _ZERO)
ONE = GaussianRational._raw(_ONE, _ZERO)
I = GaussianRational._raw(_ZERO, _ONE)


def gaussian(x) -> GaussianRational:
    """int / Fraction / GaussianRational 을 GaussianRational 로."""
    g = _lift(x)
    if g is NotImplemented:
        raise InvalidInput(f"[gaussian] cannot convert {type(x).__name__}")
    return g


def conj(x: GaussianRational) -> GaussianRational:
    return x.conj()


def format_gaussian(x: GaussianRational) -> str:
    """
    텍스트 표현: 실수면 'a/b', 순허수면 'c/di', 그 외 'a/b+c/di' (부호 명시, i 접미사).
    """
    if not x.im:
        return format_rational(x.re)
    im_abs = abs(x.im)
    im_txt = "" if im_abs == 1 else format_rational(im_abs)
    if not x.re:
        return f"{'-' if x.im < 0 else ''}{im_txt}i"
    return f"{format_rational(x.re)}{'-' if x.im < 0 else '+'}{im_txt}i"


def parse_gaussian(text: str) -> GaussianRational:
    m = _GAUSSIAN_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise InvalidInput(f"[parse_gaussian] not a Gaussian-rational literal: {text!r}")
    re_part = parse_rational(m.group("re")) if m.group("re") is not None else _ZERO
    im_part = _ZERO
    if m.group("im") is not None:
        body = m.group("im").replace(" ", "")
        if body in ("", "+"):
            im_part = _ONE
        elif body == "-":
            im_part = -_ONE
        else:
            im_part = parse_rational(body)
    return GaussianRational._raw(re_part, im_part)
