# src/hermrank/harness/configs.py
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Tuple

from hermrank.errors import HermrankError, SpecError
from hermrank.poly import SignatureForm

MONOMIAL_EXHAUSTIVE = "monomial-exhaustive"
RANDOM_BIHOMOGENEOUS = "random-bihomogeneous"
RANDOM_GENERAL = "random-general"
FAMILY_KINDS = (MONOMIAL_EXHAUSTIVE, RANDOM_BIHOMOGENEOUS, RANDOM_GENERAL)


@dataclass(frozen=True)
class FamilySpec:
    """
    polynomial family 정의
    - kind:
        * "monomial-exhaustive": ±|monomial| 조합을 support 크기 제한까지 모두 나열
        * "random-bihomogeneous": bidegree (d, d) 의 랜덤 Hermitian B
        * "random-general": 차수 <= d 의 랜덤 Hermitian A (bihomogeneous 는 버림)
    - degree: monomial 차수 상한 d (bihomogeneous 면 정확히 d)
    - coeff_range: 정수 계수 범위 [-c, c]
    - count: 랜덤 kind 의 instance 수
    - support_cap: monomial-exhaustive 의 Hermitian orbit 개수 상한
    - signs: monomial-exhaustive 의 계수 후보
    - diagonal_only: |z^m|² 형태(α = β)만 사용
    - max_terms: 랜덤 kind 에서 0 이 아닌 orbit 수 상한 (0 이면 제한 없음)
    - complex_coeffs: off-diagonal 계수를 Gaussian 정수로 뽑는다
    """

    kind: str
    n: int
    form: SignatureForm
    degree: int
    coeff_range: int = 3
    count: int = 0
    seed: int = 0
    support_cap: int = 1
    signs: Tuple[int, ...] = (-1, 1)
    diagonal_only: bool = False
    max_terms: int = 0
    complex_coeffs: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise SpecError(f"[FamilySpec] unknown kind {self.kind!r} (choose from {list(FAMILY_KINDS)})")
        if self.n < 1:
            raise SpecError(f"[FamilySpec] n must be >= 1, got {self.n}")
        if self.form.n != self.n:
            raise SpecError(f"[FamilySpec] form {self.form} has n={self.form.n}, family has n={self.n}")
        if self.degree < 0:
            raise SpecError(f"[FamilySpec] degree must be >= 0, got {self.degree}")
        if self.coeff_range < 1:
            raise SpecError(f"[FamilySpec] coeff_range must be >= 1, got {self.coeff_range}")
        if self.seed < 0:
            raise SpecError(f"[FamilySpec] seed must be >= 0, got {self.seed}")
        if self.max_terms < 0:
            raise SpecError(f"[FamilySpec] max_terms must be >= 0, got {self.max_terms}")

        if self.kind == MONOMIAL_EXHAUSTIVE:
            if self.support_cap < 1:
                raise SpecError(f"[FamilySpec] support_cap must be >= 1, got {self.support_cap}")
            if not self.signs or any(s not in (-1, 1) for s in self.signs):
                raise SpecError(f"[FamilySpec] signs must be a non-empty subset of (-1, 1), got {self.signs}")
        else:
            if self.count < 1:
                raise SpecError(f"[FamilySpec] random families need count >= 1, got {self.count}")
            if self.kind == RANDOM_GENERAL and self.degree < 1:
                raise SpecError("[FamilySpec] random-general needs degree >= 1 (degree 0 is always bihomogeneous)")

    @property
    def random(self) -> bool:
        return self.kind != MONOMIAL_EXHAUSTIVE

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["form"] = str(self.form)
        out["signs"] = list(self.signs)
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FamilySpec":
        values = dict(data)
        try:
            form = values.get("form")
            values["form"] = form if isinstance(form, SignatureForm) else SignatureForm.parse(str(form))
            if "signs" in values:
                values["signs"] = tuple(int(s) for s in values["signs"])
            return cls(**values)
        except SpecError:
            raise
        except (HermrankError, TypeError, ValueError) as exc:
            raise SpecError(f"[FamilySpec.from_dict] {exc}") from None
