# src/hermrank/harness/families.py
"""
FamilySpec -> HermitianPoly stream.

- 모든 instance 는 Hermitian 대칭을 만족하도록 orbit 단위로 만든다:
  대각 orbit (α, α) 는 실수 계수, off-diagonal orbit {(α, β), (β, α)} 는 c / conj(c).
- 같은 다항식은 canonical hash (정렬된 PolyJSON 의 sha256) 로 한 번만 내보낸다.
- 랜덤 kind 는 draw 번호별 시드 derive_seed(seed, kind, attempt) 로 결정적이다.
"""
from __future__ import annotations

import hashlib
from abc import ABC, abstractmethod
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Set, Tuple

import numpy as np

from hermrank.arith import GaussianRational
from hermrank.errors import SpecError
from hermrank.harness.configs import (
    MONOMIAL_EXHAUSTIVE,
    RANDOM_BIHOMOGENEOUS,
    RANDOM_GENERAL,
    FamilySpec,
)
from hermrank.poly import HermitianPoly, MultiIndex, Pair, homogeneous_monomials, is_bihomogeneous, monomials_up_to
from hermrank.polyio import json_line, poly_to_json
from hermrank.utils.logging_utils import get_logger
from hermrank.utils.seeding import make_rng

log = get_logger(__name__)

Orbit = Tuple[MultiIndex, MultiIndex]


def canonical_hash(poly: HermitianPoly) -> str:
    return hashlib.sha256(json_line(poly_to_json(poly)).encode("utf-8")).hexdigest()


def hermitian_orbits(monomials: List[MultiIndex], diagonal_only: bool = False) -> List[Orbit]:
    """(α, α) 먼저, 그 다음 basis 순서상 α < β 인 (α, β)."""
    orbits: List[Orbit] = [(a, a) for a in monomials]
    if not diagonal_only:
        orbits.extend((monomials[i], monomials[j]) for i in range(len(monomials)) for j in range(i + 1, len(monomials)))
    return orbits


def poly_from_orbits(n: int, items: List[Tuple[Orbit, GaussianRational]]) -> HermitianPoly:
    terms: Dict[Pair, GaussianRational] = {}
    for (alpha, beta), c in items:
        if alpha == beta:
            terms[(alpha, alpha)] = GaussianRational(c.re)
        else:
            terms[(alpha, beta)] = c
            terms[(beta, alpha)] = c.conj()
    return HermitianPoly(n, terms)


@dataclass(frozen=True)
class FamilyInstance:
    index: int
    poly: HermitianPoly
    digest: str


class BaseFamily(ABC):
    def __init__(self, spec: FamilySpec, attempt_factor: int = 10) -> None:
        self.spec = spec
        self.attempt_factor = max(int(attempt_factor), 1)

    @abstractmethod
    def candidates(self) -> Iterator[Optional[HermitianPoly]]:
        """
        중복/불량을 거르기 전 후보들.
        None 은 버려진 draw (0 다항식 등) 이며 시도 횟수에는 포함된다.
        """

    @property
    def limit(self) -> Optional[int]:
        return None

    @property
    def max_attempts(self) -> Optional[int]:
        return None

    def instances(self) -> Iterator[FamilyInstance]:
        seen: Set[str] = set()
        attempts = 0
        index = 0
        for poly in self.candidates():
            if self.limit is not None and index >= self.limit:
                return
            attempts += 1
            if self.max_attempts is not None and attempts > self.max_attempts:
                break
            if poly is None:
                continue
            digest = canonical_hash(poly)
            if digest in seen:
                log.debug(f"duplicate instance {digest[:12]} dropped")
                continue
            seen.add(digest)
            yield FamilyInstance(index=index, poly=poly, digest=digest)
            index += 1

        if self.limit is not None and index < self.limit:
            raise SpecError(
                f"[{type(self).__name__}] only {index} distinct instances after {attempts - 1} draws "
                f"(wanted {self.limit}); widen degree/coeff_range/max_terms"
            )


class MonomialExhaustiveFamily(BaseFamily):
    """support_cap 개 이하의 orbit 에 signs 의 계수를 붙인 모든 조합."""

    def candidates(self) -> Iterator[Optional[HermitianPoly]]:
        spec = self.spec
        orbits = hermitian_orbits(monomials_up_to(spec.n, spec.degree), spec.diagonal_only)
        for size in range(1, min(spec.support_cap, len(orbits)) + 1):
            for chosen in combinations(orbits, size):
                for signs in product(spec.signs, repeat=size):
                    yield poly_from_orbits(spec.n, [(o, GaussianRational(s)) for o, s in zip(chosen, signs)])


class _RandomFamily(BaseFamily):
    def monomials(self) -> List[MultiIndex]:
        raise NotImplementedError

    def accept(self, poly: HermitianPoly) -> bool:
        return True

    @property
    def limit(self) -> Optional[int]:
        return self.spec.count

    @property
    def max_attempts(self) -> Optional[int]:
        return self.spec.count * self.attempt_factor

    def _coeff(self, rng: np.random.Generator, diagonal: bool) -> GaussianRational:
        c = self.spec.coeff_range
        re = int(rng.integers(-c, c + 1))
        if diagonal or not self.spec.complex_coeffs:
            return GaussianRational(re)
        return GaussianRational(re, int(rng.integers(-c, c + 1)))

    def draw(self, rng: np.random.Generator, orbits: List[Orbit]) -> HermitianPoly:
        k = self.spec.max_terms
        if k and k < len(orbits):
            picks = sorted(int(i) for i in rng.choice(len(orbits), size=k, replace=False))
            chosen = [orbits[i] for i in picks]
        else:
            chosen = orbits
        items = [(o, self._coeff(rng, o[0] == o[1])) for o in chosen]
        return poly_from_orbits(self.spec.n, items)

    def candidates(self) -> Iterator[Optional[HermitianPoly]]:
        spec = self.spec
        orbits = hermitian_orbits(self.monomials(), spec.diagonal_only)
        attempt = 0
        while True:
            rng = make_rng(spec.seed, spec.kind, attempt)
            attempt += 1
            poly = self.draw(rng, orbits)
            if poly.is_zero() or not self.accept(poly):
                yield None
                continue
            yield poly


class RandomBihomogeneousFamily(_RandomFamily):
    """bidegree (d, d): α, β 모두 |·| = d."""

    def monomials(self) -> List[MultiIndex]:
        return list(homogeneous_monomials(self.spec.n, self.spec.degree))


class RandomGeneralFamily(_RandomFamily):
    """|α|, |β| <= d, bihomogeneous 인 draw 는 버린다."""

    def monomials(self) -> List[MultiIndex]:
        return monomials_up_to(self.spec.n, self.spec.degree)

    def accept(self, poly: HermitianPoly) -> bool:
        return is_bihomogeneous(poly) is None


_FAMILIES = {
    MONOMIAL_EXHAUSTIVE: MonomialExhaustiveFamily,
    RANDOM_BIHOMOGENEOUS: RandomBihomogeneousFamily,
    RANDOM_GENERAL: RandomGeneralFamily,
}


def make_family(spec: FamilySpec, attempt_factor: int = 10) -> BaseFamily:
    return _FAMILIES[spec.kind](spec, attempt_factor=attempt_factor)


def generate_family(spec: FamilySpec, attempt_factor: int = 10) -> Iterator[HermitianPoly]:
    for inst in make_family(spec, attempt_factor).instances():
        yield inst.poly
