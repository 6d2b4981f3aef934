# src/hermrank/poly/polynomial.py
"""
희소 다항식 타입들.

- Polynomial   : C[z, z̄] 의 일반 원소, (alpha, beta) -> 계수
- HermitianPoly: Hermitian 대칭 c_{βα} = conj(c_{αβ}) 이 검증된 Polynomial
- HoloPoly     : z 만의 (holomorphic) 다항식, alpha -> 계수 (g_k, F 성분 등)

모든 인스턴스는 생성 후 변경하지 않는다(연산은 항상 새 객체를 반환).
0 계수는 저장하지 않는다.
"""
from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from hermrank.arith import ONE, ZERO, GaussianRational, gaussian
from hermrank.errors import DimensionMismatch, InvalidInput, NotHermitian
from hermrank.poly.monomials import MultiIndex, add, grlex_key, term_key, unit

Pair = Tuple[MultiIndex, MultiIndex]


def _clean(n: int, terms: Iterable[Tuple[Pair, object]]) -> Dict[Pair, GaussianRational]:
    out: Dict[Pair, GaussianRational] = {}
    for (alpha, beta), c in terms:
        alpha, beta = tuple(alpha), tuple(beta)
        if len(alpha) != n or len(beta) != n:
            raise DimensionMismatch(f"[Polynomial] exponent length mismatch for n={n}: {alpha}, {beta}")
        if any(a < 0 for a in alpha) or any(b < 0 for b in beta):
            raise InvalidInput(f"[Polynomial] negative exponent in {alpha}, {beta}")
        c = gaussian(c)
        key = (alpha, beta)
        prev = out.get(key)
        out[key] = c if prev is None else prev + c
    return {k: v for k, v in out.items() if v}


class Polynomial:
    """C[z1..zn, z̄1..z̄n] 의 희소 표현."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Pair, object] | Iterable[Tuple[Pair, object]] = ()) -> None:
        if n < 1:
            raise InvalidInput(f"[Polynomial] n must be positive, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.n = n
        self._terms = _clean(n, items)

    @classmethod
    def _trusted(cls, n: int, terms: Dict[Pair, GaussianRational]):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    # --- 생성 헬퍼 ---

    @classmethod
    def constant(cls, n: int, c) -> "Polynomial":
        zero = (0,) * n
        return cls(n, {(zero, zero): c})

    @classmethod
    def variable(cls, n: int, j: int) -> "Polynomial":
        """z_{j+1} (0-based j)."""
        return cls(n, {(unit(n, j), (0,) * n): ONE})

    @classmethod
    def conj_variable(cls, n: int, j: int) -> "Polynomial":
        return cls(n, {((0,) * n, unit(n, j)): ONE})

    # --- 조회 ---

    @property
    def terms(self) -> Mapping[Pair, GaussianRational]:
        return MappingProxyType(self._terms)

    def coeff(self, alpha: MultiIndex, beta: MultiIndex) -> GaussianRational:
        return self._terms.get((tuple(alpha), tuple(beta)), ZERO)

    def sorted_terms(self) -> List[Tuple[Pair, GaussianRational]]:
        return sorted(self._terms.items(), key=lambda kv: term_key(*kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Pair, GaussianRational]]:
        return iter(self.sorted_terms())

    def max_degree(self) -> int:
        """max(|alpha|, |beta|) over terms (0 for the zero polynomial)."""
        return max((max(sum(a), sum(b)) for a, b in self._terms), default=0)

    # --- Hermitian 구조 ---

    def adjoint(self) -> "Polynomial":
        """f* : (alpha, beta, c) -> (beta, alpha, conj(c)). f 가 Hermitian 이면 f* = f."""
        return Polynomial._trusted(self.n, {(b, a): c.conj() for (a, b), c in self._terms.items()})

    def hermitian_violation(self) -> Optional[Tuple[Pair, GaussianRational, GaussianRational]]:
        """대칭이 깨진 첫 (alpha, beta) 와 (실제 켤레 계수, 기대값). 없으면 None."""
        for (a, b), c in self.sorted_terms():
            found = self._terms.get((b, a), ZERO)
            expected = c.conj()
            if found != expected:
                return (a, b), found, expected
        return None

    def is_hermitian(self) -> bool:
        return self.hermitian_violation() is None

    # --- 산술 ---

    def _check(self, other: "Polynomial") -> None:
        if other.n != self.n:
            raise DimensionMismatch(f"[Polynomial] variable count {self.n} != {other.n}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Polynomial._trusted(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = gaussian(c)
        if not c:
            return Polynomial._trusted(self.n, {})
        return Polynomial._trusted(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: Dict[Pair, GaussianRational] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (add(a1, a2), add(b1, b2))
                out[k] = out.get(k, ZERO) + c1 * c2
        return Polynomial._trusted(self.n, {k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("[Polynomial.__pow__] exponent must be a non-negative int")
        result = Polynomial.constant(self.n, ONE)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __reduce__(self):
        return (type(self), (self.n, dict(self._terms)))

    def __repr__(self) -> str:
        from hermrank.polyio.formatter import format_poly

        return f"{type(self).__name__}(n={self.n}, {format_poly(self)!r})"


class HermitianPoly(Polynomial):
    """Hermitian 대칭이 보장되는 Polynomial. 생성 시마다 검사한다."""

    __slots__ = ()

    def __init__(self, n: int, terms: Mapping[Pair, object] | Iterable[Tuple[Pair, object]] = ()) -> None:
        super().__init__(n, terms)
        _require_hermitian(self)

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> "HermitianPoly":
        obj = cls._trusted(f.n, dict(f._terms))
        _require_hermitian(obj)
        return obj

    @classmethod
    def constant(cls, n: int, c) -> "HermitianPoly":
        return cls.from_polynomial(Polynomial.constant(n, c))


def _require_hermitian(f: Polynomial) -> None:
    bad = f.hermitian_violation()
    if bad is not None:
        (a, b), found, expected = bad
        raise NotHermitian(
            f"[HermitianPoly] coefficient of (alpha={list(a)}, beta={list(b)}) has conjugate partner "
            f"(alpha={list(b)}, beta={list(a)}) = {found}, expected {expected}",
            pair=(a, b),
            found=found,
            expected=expected,
        )


class HoloPoly:
    """holomorphic 다항식 Σ c_α z^α."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[MultiIndex, object] | Iterable[Tuple[MultiIndex, object]] = ()) -> None:
        if n < 1:
            raise InvalidInput(f"[HoloPoly] n must be positive, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: Dict[MultiIndex, GaussianRational] = {}
        for alpha, c in items:
            alpha = tuple(alpha)
            if len(alpha) != n or any(a < 0 for a in alpha):
                raise DimensionMismatch(f"[HoloPoly] bad exponent {alpha} for n={n}")
            out[alpha] = out.get(alpha, ZERO) + gaussian(c)
        self.n = n
        self._terms = {k: v for k, v in out.items() if v}

    @classmethod
    def _trusted(cls, n: int, terms: Dict[MultiIndex, GaussianRational]) -> "HoloPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, n: int, c) -> "HoloPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "HoloPoly":
        n = len(coeffs)
        return cls(n, {unit(n, j): c for j, c in enumerate(coeffs)})

    @property
    def terms(self) -> Mapping[MultiIndex, GaussianRational]:
        return MappingProxyType(self._terms)

    def coeff(self, alpha: MultiIndex) -> GaussianRational:
        return self._terms.get(tuple(alpha), ZERO)

    def sorted_terms(self) -> List[Tuple[MultiIndex, GaussianRational]]:
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {sum(a) for a in self._terms}

    def homogeneous_degree(self) -> Optional[int]:
        degs = self.degrees()
        return next(iter(degs)) if len(degs) == 1 else None

    def __add__(self, other: "HoloPoly") -> "HoloPoly":
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return HoloPoly._trusted(self.n, out)

    def __neg__(self) -> "HoloPoly":
        return HoloPoly._trusted(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "HoloPoly") -> "HoloPoly":
        return self + (-other)

    def scale(self, c) -> "HoloPoly":
        c = gaussian(c)
        if not c:
            return HoloPoly._trusted(self.n, {})
        return HoloPoly._trusted(self.n, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HoloPoly):
            return self.scale(other)
        out: Dict[MultiIndex, GaussianRational] = {}
        for a1, c1 in self._terms.items():
            for a2, c2 in other._terms.items():
                k = add(a1, a2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return HoloPoly._trusted(self.n, {k: v for k, v in out.items() if v})

    def evaluate(self, z: Sequence) -> GaussianRational:
        if len(z) != self.n:
            raise DimensionMismatch(f"[HoloPoly.evaluate] expected {self.n} coordinates, got {len(z)}")
        zs = [gaussian(x) for x in z]
        acc = ZERO
        for alpha, c in self._terms.items():
            term = c
            for x, e in zip(zs, alpha):
                if e:
                    term = term * x**e
            acc = acc + term
        return acc

    def conj_product(self, other: "HoloPoly") -> Polynomial:
        """self(z) · conj(other(z)) 를 C[z, z̄] 원소로."""
        out: Dict[Pair, GaussianRational] = {}
        for a, c1 in self._terms.items():
            for b, c2 in other._terms.items():
                out[(a, b)] = out.get((a, b), ZERO) + c1 * c2.conj()
        return Polynomial._trusted(self.n, {k: v for k, v in out.items() if v})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HoloPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __reduce__(self):
        return (HoloPoly, (self.n, dict(self._terms)))

    def __repr__(self) -> str:
        from hermrank.polyio.formatter import format_holomorphic

        return f"HoloPoly(n={self.n}, {format_holomorphic(self)!r})"
