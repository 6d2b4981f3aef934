# src/hermrank/poly/monomials.py
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

from hermrank.errors import DimensionMismatch, InvalidInput

MultiIndex = Tuple[int, ...]


def degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def grlex_key(alpha: MultiIndex) -> Tuple[int, Tuple[int, ...]]:
    """
    graded-lex 정렬 키: 차수 오름차순, 같은 차수면 z1 지수가 큰 것이 먼저.
    (n=2, d=2: z1^2 < z1*z2 < z2^2)
    """
    return sum(alpha), tuple(-a for a in alpha)


def term_key(alpha: MultiIndex, beta: MultiIndex):
    return sum(alpha) + sum(beta), grlex_key(alpha), grlex_key(beta)


def unit(n: int, j: int) -> MultiIndex:
    return tuple(1 if i == j else 0 for i in range(n))


def add(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(alpha, beta))


def homogeneous_monomials(n: int, d: int) -> Iterator[MultiIndex]:
    """차수가 정확히 d 인 n변수 단항식을 graded-lex 순서로."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in homogeneous_monomials(n - 1, d - first):
            yield (first,) + rest


def monomials_up_to(n: int, d: int) -> List[MultiIndex]:
    """차수 <= d 인 단항식 전체 (graded-lex)."""
    out: List[MultiIndex] = []
    for k in range(d + 1):
        out.extend(homogeneous_monomials(n, k))
    return out


@dataclass(frozen=True)
class MonomialBasis:
    """
    단항식 basis. 기본 생성자는 n변수 d차 동차 단항식 전체이며,
    from_monomials 로 (support 만 남긴) 부분 basis 도 만들 수 있다.
    index(m1) < index(m2) 이면 m1 이 graded-lex 에서 앞선다.
    """

    n: int
    d: int
    monomials: Tuple[MultiIndex, ...] = ()
    _index: Dict[MultiIndex, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 0:
            raise InvalidInput(f"[MonomialBasis] invalid n={self.n}, d={self.d}")
        mons = self.monomials or tuple(homogeneous_monomials(self.n, self.d))
        for m in mons:
            if len(m) != self.n or sum(m) != self.d:
                raise DimensionMismatch(f"[MonomialBasis] {m} is not a degree-{self.d} monomial in {self.n} variables")
        mons = tuple(sorted(set(mons), key=grlex_key))
        object.__setattr__(self, "monomials", mons)
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(mons)})

    @classmethod
    def from_monomials(cls, n: int, d: int, monomials: Sequence[MultiIndex]) -> "MonomialBasis":
        if not monomials:
            raise InvalidInput("[MonomialBasis.from_monomials] empty monomial list")
        return cls(n=n, d=d, monomials=tuple(monomials))

    @property
    def size(self) -> int:
        return len(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def index(self, alpha: MultiIndex) -> int:
        try:
            return self._index[alpha]
        except KeyError:
            raise KeyError(f"[MonomialBasis.index] monomial {alpha} not in basis") from None

    def __contains__(self, alpha: MultiIndex) -> bool:
        return alpha in self._index

    def monomial(self, i: int) -> MultiIndex:
        return self.monomials[i]

    def is_full(self) -> bool:
        return len(self.monomials) == comb(self.n + self.d - 1, self.d)
