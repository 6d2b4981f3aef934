# src/hermrank/macaulay/representation.py
"""
Macaulay 표현과 lowering operator.

A = C(a_n, n) + C(a_{n-1}, n-1) + ... + C(a_δ, δ),  a_n > ... > a_δ, a_j >= j, δ >= 1
A^{-<n>} = C(a_n - 1, n - 1) + ... + C(a_δ - 1, δ - 1)   (C(a, b) = 0 if a < b or b = 0)

N(n; a, b) = C(n+1, n) + ... + C(n-a+1, n-a) + b   (0 <= b <= n-a-1)
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from hermrank.errors import InvalidInput


def _lowered_binom(a: int, b: int) -> int:
    if b == 0 or a < b:
        return 0
    return comb(a, b)


def _largest_top(rem: int, j: int) -> int:
    """C(a, j) <= rem 인 가장 큰 a (rem >= 1)."""
    lo = j  # C(j, j) = 1 <= rem
    hi = j + 1
    while comb(hi, j) <= rem:
        lo, hi = hi, hi * 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if comb(mid, j) <= rem:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class MacaulayRep:
    n: int
    coefficients: Tuple[int, ...]  # (a_n, a_{n-1}, ..., a_δ)

    def __post_init__(self) -> None:
        if self.n < 1 or not self.coefficients or len(self.coefficients) > self.n:
            raise InvalidInput(f"[MacaulayRep] invalid representation n={self.n}, {self.coefficients}")
        for (a, j), (a_next, _) in zip(self.terms(), self.terms()[1:]):
            if a <= a_next:
                raise InvalidInput(f"[MacaulayRep] coefficients must strictly decrease: {self.coefficients}")
        for a, j in self.terms():
            if a < j:
                raise InvalidInput(f"[MacaulayRep] a_{j} = {a} < {j}")

    @property
    def delta(self) -> int:
        return self.n - len(self.coefficients) + 1

    def terms(self) -> List[Tuple[int, int]]:
        """[(a_n, n), (a_{n-1}, n-1), ...]"""
        return [(a, self.n - i) for i, a in enumerate(self.coefficients)]

    def value(self) -> int:
        return sum(comb(a, j) for a, j in self.terms())

    def lowered(self) -> int:
        return sum(_lowered_binom(a - 1, j - 1) for a, j in self.terms())

    def __str__(self) -> str:
        return " + ".join(f"C({a},{j})" for a, j in self.terms())


def macaulay_rep(a: int, n: int) -> MacaulayRep:
    if a < 1 or n < 1:
        raise InvalidInput(f"[macaulay_rep] need A >= 1 and n >= 1, got A={a}, n={n}")
    coeffs: List[int] = []
    rem = a
    j = n
    while rem > 0:
        # j 가 1 에 도달하면 C(rem, 1) = rem 으로 반드시 끝난다
        top = _largest_top(rem, j)
        coeffs.append(top)
        rem -= comb(top, j)
        j -= 1
    return MacaulayRep(n=n, coefficients=tuple(coeffs))


def reconstruct(rep: MacaulayRep) -> int:
    return rep.value()


def lower_op(a: int, n: int) -> int:
    """A^{-<n>}."""
    return macaulay_rep(a, n).lowered()


def _check_nab(n: int, a: int, b: int, fn: str) -> None:
    if n < 1 or a < 0 or b < 0 or b > n - a - 1:
        raise InvalidInput(f"[{fn}] need n >= 1, a >= 0, 0 <= b <= n-a-1; got n={n}, a={a}, b={b}")


def n_ab(n: int, a: int, b: int) -> int:
    _check_nab(n, a, b, "n_ab")
    return sum(comb(n + 1 - i, n - i) for i in range(a + 1)) + b


def n_ab_closed_form(n: int, a: int, b: int) -> int:
    """(a+1)(n+1-a/2) + b 를 정수 연산으로."""
    _check_nab(n, a, b, "n_ab_closed_form")
    return (a + 1) * (n + 1) - a * (a + 1) // 2 + b


def n_ab_representation(n: int, a: int, b: int) -> MacaulayRep:
    """
    C(n+1, n) + ... + C(n-a+1, n-a) + C(n-a-1, n-a-1) + ... + C(n-a-b, n-a-b)
    """
    _check_nab(n, a, b, "n_ab_representation")
    head = [n + 1 - i for i in range(a + 1)]
    tail = [n - a - 1 - i for i in range(b)]
    return MacaulayRep(n=n, coefficients=tuple(head + tail))


@dataclass(frozen=True)
class LemmaCheck:
    n: int
    a: int
    b: int
    lowered: int
    predicted: int

    @property
    def holds(self) -> bool:
        return self.lowered == self.predicted


def lemma_nab(n: int, a: int, b: int) -> LemmaCheck:
    """
    N(n;a,b)^{-<n>} 와 예측값 비교:
      n-a-b >= 2            -> N(n-1; a, b)
      n-a-b == 1 and b >= 1 -> N(n-1; a, b-1)
    """
    _check_nab(n, a, b, "lemma_nab")
    gap = n - a - b
    if gap >= 2:
        predicted = n_ab(n - 1, a, b)
    elif gap == 1 and b >= 1:
        predicted = n_ab(n - 1, a, b - 1)
    else:
        raise InvalidInput(f"[lemma_nab] (n={n}, a={a}, b={b}) outside the lemma's range")
    return LemmaCheck(n=n, a=a, b=b, lowered=lower_op(n_ab(n, a, b), n), predicted=predicted)


def lemma_nab_range(n: int) -> List[Tuple[int, int]]:
    """lemma 가 적용되는 모든 (a, b)."""
    out = []
    for a in range(n):
        for b in range(n - a):
            gap = n - a - b
            if gap >= 2 or (gap == 1 and b >= 1):
                out.append((a, b))
    return out


def find_n_ab(big_n: int, n: int) -> Optional[Tuple[int, int]]:
    """n+1 <= N < C(n+2, 2) 이면 N = N(n;a,b) 인 (a, b), 아니면 None."""
    if n < 1 or not (n + 1 <= big_n < comb(n + 2, 2)):
        return None
    a = 0
    while a + 1 <= n - 1 and n_ab(n, a + 1, 0) <= big_n:
        a += 1
    b = big_n - n_ab(n, a, 0)
    if b > n - a - 1:
        return None
    return a, b


def iterated_lower_bound(big_n: int, n: int, m: int) -> int:
    """
    일반적인 hyperplane 제한을 n 차원에서 m 차원까지 반복했을 때의 하한.
    N_n = N, N_{k-1} = N_k^{-<k>}.
    """
    if not (0 <= m <= n):
        raise InvalidInput(f"[iterated_lower_bound] need 0 <= m <= n, got m={m}, n={n}")
    bound = big_n
    for k in range(n, m, -1):
        if bound < 1:
            return 0
        bound = lower_op(bound, k)
    return bound


def dim_prop_bound(n: int, a: int, b: int, m: int) -> Optional[int]:
    """
    span 이 N(n;a,b) 인 사상의 일반 m-평면 상의 span 하한:
      a+b+1 <= m <= n-1 -> N(m; a, b)
      a+1 <= m <= a+b   -> N(m; a, m-a-1)
    범위 밖이면 None.
    """
    _check_nab(n, a, b, "dim_prop_bound")
    if a + b + 1 <= m <= n - 1:
        return n_ab(m, a, b)
    if a + 1 <= m <= a + b:
        return n_ab(m, a, m - a - 1)
    return None
