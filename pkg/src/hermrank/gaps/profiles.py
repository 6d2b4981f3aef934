# src/hermrank/gaps/profiles.py
"""
rank 의 허용 구간 / 금지 gap 계산.

모든 공개 함수는 affine 규약(ℂⁿ 의 n, form 의 0 고유값 중복도 τ)을 쓴다.
사영 규약(ℙⁿ, r+s+t = n+1)은 gap_thm_hypothesis 에서만 쓰며,
n_projective = n_affine - 1 로 변환한다.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

import pandas as pd

from hermrank.errors import InvalidInput, TrivialSignature

Interval = Tuple[int, int]


class TheoremVariant(str, Enum):
    CONJECTURE_SOS = "ConjectureSOS"
    GENERAL_THM = "GeneralThm"
    HOMO_THM = "HomoThm"
    COROLLARY_SOS = "CorollarySOS"
    COROLLARY_REMARK = "CorollaryRemark"

    @classmethod
    def parse(cls, name: str) -> "TheoremVariant":
        key = name.replace("-", "").replace("_", "").lower()
        key = _VARIANT_ALIASES.get(key, key)
        for v in cls:
            if v.value.lower() == key:
                return v
        raise InvalidInput(f"[TheoremVariant.parse] unknown variant {name!r} (choose from {[v.value for v in cls]})")

    @property
    def observational(self) -> bool:
        """증명되지 않은 추측: 위반은 반례 후보로만 기록한다."""
        return self is TheoremVariant.CONJECTURE_SOS

    @property
    def requires_nondegenerate(self) -> bool:
        return self in (
            TheoremVariant.CONJECTURE_SOS,
            TheoremVariant.COROLLARY_SOS,
            TheoremVariant.COROLLARY_REMARK,
        )


# CLI 에서 쓰는 짧은 이름
_VARIANT_ALIASES = {
    "conjecture": "conjecturesos",
    "general": "generalthm",
    "homo": "homothm",
    "homogeneous": "homothm",
    "corollary": "corollarysos",
    "remark": "corollaryremark",
}


@dataclass(frozen=True)
class GapProfile:
    n: int
    tau: int
    variant: TheoremVariant
    k0: int
    allowed: Tuple[Interval, ...]
    tail: int
    forbidden: Tuple[Interval, ...] = field(default=())

    def is_allowed(self, r: int) -> bool:
        return r >= self.tail or any(lo <= r <= hi for lo, hi in self.allowed)

    def interval_index(self, r: int) -> Optional[int]:
        """r 을 포함하는 I_k 의 k (1-based, merge 전 구간 기준)."""
        if r >= self.tail or not self.is_allowed(r):
            return None
        for k in range(1, self.k0 + 1):
            lo, hi = _interval(self.n, k, self.tau, self.variant)
            if lo <= r <= hi:
                return k
        return None

    def gap_of(self, r: int) -> Optional[Interval]:
        for lo, hi in self.forbidden:
            if lo <= r <= hi:
                return lo, hi
        return None


def _validate(n: int, tau: int, variant: TheoremVariant) -> None:
    if n < 1 or tau < 0:
        raise InvalidInput(f"[gap_profile] need n >= 1 and tau >= 0, got n={n}, tau={tau}")
    if tau >= n - 1:
        raise TrivialSignature(f"[gap_profile] tau={tau} >= n-1={n - 1}: trivial signature")
    if variant.requires_nondegenerate and tau != 0:
        raise InvalidInput(f"[gap_profile] {variant.value} is stated for non-degenerate forms only (tau=0)")


def _threshold(k: int, tau: int, variant: TheoremVariant) -> int:
    """k 가 허용되려면 n 이 넘어야 하는 값 (ConjectureSOS 는 strict)."""
    if variant is TheoremVariant.HOMO_THM:
        return k * k + k * (1 + 2 * tau) + 2 + tau
    if variant is TheoremVariant.CONJECTURE_SOS:
        return k * (k + 1) // 2
    # GeneralThm, Corollary: k^2 + k(3+2τ) + 2 + τ ( = (κ+2)(κ+1) at τ=0 )
    return k * k + k * (3 + 2 * tau) + 2 + tau


def _satisfies(n: int, k: int, tau: int, variant: TheoremVariant) -> bool:
    bound = _threshold(k, tau, variant)
    return n > bound if variant is TheoremVariant.CONJECTURE_SOS else n >= bound


def k0(n: int, tau: int, variant: TheoremVariant) -> int:
    _validate(n, tau, variant)
    k = 0
    while _satisfies(n, k + 1, tau, variant):
        k += 1
    return k


def _interval(n: int, k: int, tau: int, variant: TheoremVariant) -> Interval:
    if variant is TheoremVariant.CONJECTURE_SOS:
        return k * n - k * (k - 1) // 2, k * n
    lo = k * n - k * (k - 1 + tau)
    if variant is TheoremVariant.HOMO_THM:
        return lo, k * n + k * tau
    if variant is TheoremVariant.COROLLARY_REMARK:
        return lo, k * n
    return lo, k * n + k * (2 + tau)


def _tail(n: int, kk: int, tau: int, variant: TheoremVariant) -> int:
    if variant is TheoremVariant.CONJECTURE_SOS:
        return (kk + 1) * n - kk * (kk + 1) // 2 - 1
    return (kk + 1) * n - (kk + 1) * (kk + tau)


def merge_intervals(intervals: List[Interval]) -> List[Interval]:
    out: List[Interval] = []
    for lo, hi in sorted(i for i in intervals if i[0] <= i[1]):
        if out and lo <= out[-1][1] + 1:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def complement_within(allowed: List[Interval], lo: int, hi: int) -> List[Interval]:
    """[lo, hi] 에서 allowed 의 합집합을 뺀 구간들."""
    out: List[Interval] = []
    cur = lo
    for a, b in merge_intervals(allowed):
        if b < cur:
            continue
        if a > hi:
            break
        if a > cur:
            out.append((cur, min(a - 1, hi)))
        cur = max(cur, b + 1)
    if cur <= hi:
        out.append((cur, hi))
    return out


def gap_profile(n: int, tau: int, variant: TheoremVariant) -> GapProfile:
    kk = k0(n, tau, variant)
    tail = _tail(n, kk, tau, variant)
    raw = [_interval(n, k, tau, variant) for k in range(1, kk + 1)]
    # tail 이상은 이미 허용이므로 구간을 tail-1 까지 자른다
    clipped = [(lo, min(hi, tail - 1)) for lo, hi in raw if lo <= tail - 1]
    allowed = merge_intervals([(max(lo, 1), hi) for lo, hi in clipped])
    forbidden = complement_within(allowed, 1, tail - 1)
    return GapProfile(
        n=n,
        tau=tau,
        variant=variant,
        k0=kk,
        allowed=tuple(allowed),
        tail=tail,
        forbidden=tuple(forbidden),
    )


def gap_thm_hypothesis(n_proj: int, big_n: int, t: int, a: int) -> bool:
    """ℙⁿ -> ℙᴺ 직교 사상의 상이 hyperplane 에 들어가는 조건: (a+1)(n+t+1) <= N <= (a+2)(n-a-t)-2."""
    return (a + 1) * (n_proj + t + 1) <= big_n <= (a + 2) * (n_proj - a - t) - 2


def gap_thm_witness(n_proj: int, big_n: int, t: int) -> Optional[int]:
    a = 0
    while (a + 1) * (n_proj + t + 1) <= big_n:
        if gap_thm_hypothesis(n_proj, big_n, t, a):
            return a
        a += 1
    return None


def forbidden_intervals_Ia(n_affine: int, tau: int) -> List[Interval]:
    """
    R-1 이 들어갈 수 없는 I_a = [(a+1)(n+τ), (a+2)(n-1-a-τ)-2] (비어 있지 않은 것만).
    """
    if n_affine < 2 or tau < 0:
        raise InvalidInput(f"[forbidden_intervals_Ia] need n_affine >= 2 and tau >= 0, got {n_affine}, {tau}")
    n_proj = n_affine - 1
    out: List[Interval] = []
    a = 0
    while True:
        lo = (a + 1) * (n_proj + tau + 1)
        hi = (a + 2) * (n_proj - a - tau) - 2
        if lo > hi:
            break
        out.append((lo, hi))
        a += 1
    return out


def allowed_from_Ia(n_affine: int, tau: int) -> Tuple[List[Interval], int]:
    """
    I_a 의 여집합(R 기준)과 하한 R >= n - τ 를 합쳐 (허용 구간, tail) 을 만든다.
    HomoThm profile 의 교차 검증용.
    """
    gaps = [(lo + 1, hi + 1) for lo, hi in forbidden_intervals_Ia(n_affine, tau)]
    floor = max(n_affine - tau, 1)
    if not gaps:
        return [], floor
    tail = gaps[-1][1] + 1
    allowed = complement_within(gaps, floor, tail - 1)
    return allowed, tail


class RankClass(str, Enum):
    ALLOWED = "Allowed"
    FORBIDDEN = "Forbidden"
    BELOW_RANGE = "BelowRange"


@dataclass(frozen=True)
class RankClassification:
    rank: int
    kind: RankClass
    gap: Optional[Interval] = None
    interval: Optional[int] = None  # 허용 구간 k, tail 이면 None
    label: str = ""

    @property
    def allowed(self) -> bool:
        return self.kind is RankClass.ALLOWED


def classify_rank(r: int, profile: GapProfile) -> RankClassification:
    if r <= 0:
        return RankClassification(rank=r, kind=RankClass.BELOW_RANGE, label="below-range")

    if profile.is_allowed(r):
        k = None if r >= profile.tail else profile.interval_index(r)
        label = "conjecture-consistent" if profile.variant.observational else ("tail" if k is None else f"k={k}")
        return RankClassification(rank=r, kind=RankClass.ALLOWED, interval=k, label=label)

    gap = profile.gap_of(r)
    label = "counterexample-candidate" if profile.variant.observational else "violation"
    return RankClassification(rank=r, kind=RankClass.FORBIDDEN, gap=gap, label=label)


def format_profile_table(profile: GapProfile) -> str:
    rows = []
    for lo, hi in profile.allowed:
        k_lo, k_hi = profile.interval_index(lo), profile.interval_index(hi)
        rows.append({"kind": "allowed", "k": k_lo if k_lo == k_hi else f"{k_lo}-{k_hi}", "lo": lo, "hi": hi})
    for lo, hi in profile.forbidden:
        rows.append({"kind": "forbidden", "k": "", "lo": lo, "hi": hi})
    rows.append({"kind": "tail", "k": "", "lo": profile.tail, "hi": "inf"})
    df = pd.DataFrame(rows, columns=["kind", "k", "lo", "hi"])
    df["_order"] = pd.to_numeric(df["lo"])
    df = df.sort_values("_order", kind="stable").drop(columns="_order")

    header = f"{profile.variant.value}  n={profile.n}  tau={profile.tau}  k0={profile.k0}"
    return header + "\n" + df.to_string(index=False)
