# src/hermrank/spans/checks.py
"""
유도 사상 F 의 span 차원 실험.

- hyperplane : 일반 hyperplane Π 에서 span_dim(F, Π) >= N^{-<n>}          (>=, 재시도 허용)
- orthopair  : 직교하는 non-degenerate M1, M2 에서 D_{m1} + D_{m2} <= N - 1 (<=, 재시도 없음)
- dimprop    : span 이 N(n;a,b) 인 F 에서 D_m >= N(m;a,b) 류의 하한         (>=, 재시도 허용)

F 는 rational weight 를 갖는 대각 form 에 대해 직교한다. weight 로 target 좌표를
rescale 하면 (p, q) form 이 되며 linear span 은 rescale 에 대해 불변이므로
(p, q) 에 대한 부등식을 그대로 적용한다.

차원은 모두 사영 차원 (vector rank - 1) 이다.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from hermrank.arith import ZERO
from hermrank.errors import DimensionMismatch, HypothesisViolated, InvalidInput
from hermrank.linalg import matrix_rank
from hermrank.macaulay import dim_prop_bound, find_n_ab, iterated_lower_bound, lower_op, n_ab
from hermrank.poly import SignatureForm, restrict_to_subspace
from hermrank.sos import InducedMap, weighted_pairing
from hermrank.spans.subspace import (
    LinearSubspace,
    random_hyperplane,
    random_orthogonal_pair,
    random_subspace,
)
from hermrank.utils.logging_utils import get_logger
from hermrank.utils.seeding import derive_seed, make_rng

log = get_logger(__name__)


@dataclass(frozen=True)
class SpanConfig:
    coord_bound: int = 10**6
    complex_coords: bool = False
    retries: int = 3
    trials: int = 5


def make_span_config(settings: Optional[Dict[str, Any]] = None, **overrides: Any) -> SpanConfig:
    """setting.yaml 의 spans 섹션 -> SpanConfig. overrides 는 None 이 아닌 값만 반영."""
    section = (settings or {}).get("spans") or {}
    values = {
        "coord_bound": int(section.get("coord_bound", SpanConfig.coord_bound)),
        "complex_coords": bool(section.get("complex_coords", SpanConfig.complex_coords)),
        "retries": int(section.get("retries", SpanConfig.retries)),
        "trials": int(section.get("trials", SpanConfig.trials)),
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    if values["coord_bound"] < 1 or values["retries"] < 0 or values["trials"] < 1:
        raise InvalidInput(f"[make_span_config] invalid span settings {values}")
    return SpanConfig(**values)


@dataclass(frozen=True)
class SpanReport:
    """
    check 한 번(trial 하나)의 결과.
    passed 는 measured 와 bound 를 check 방향대로 비교한 값이다.
    status: OK | FAIL | SKIP
    """

    check: str
    trial: int
    seed: int
    dims: Tuple[int, ...] = ()
    measured: Tuple[int, ...] = ()
    bound: Optional[int] = None
    passed: bool = True
    status: str = "OK"
    reason: str = ""
    attempts: int = 1
    pairing_vanishes: Optional[bool] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def __hash__(self) -> int:
        return hash((self.check, self.trial, self.seed, self.dims, self.measured, self.bound, self.status))


def span_dim(fmap: InducedMap, m: Optional[LinearSubspace] = None) -> int:
    """dim span F(M) (사영). m 이 None 이면 전체 공간."""
    if m is None:
        vecs = [g.terms for g in fmap.components]
    else:
        if m.ambient != fmap.n:
            raise DimensionMismatch(f"[span_dim] subspace ambient {m.ambient} != map source dimension {fmap.n}")
        if not m.basis:
            return -1
        vecs = [g.terms for g in restrict_to_subspace(fmap.components, m.basis)]

    support = sorted({alpha for v in vecs for alpha in v})
    if not support:
        return -1
    rows = [[v.get(alpha, ZERO) for alpha in support] for v in vecs]
    return matrix_rank(rows) - 1


def pairing_vanishes(fmap: InducedMap, m1: LinearSubspace, m2: LinearSubspace) -> bool:
    """basis 쌍 z ∈ M1, w ∈ M2 에 대해 Σ d_k g_k(z) conj(g_k(w)) = 0."""
    return all(not weighted_pairing(fmap, z, w) for z in m1.basis for w in m2.basis)


def _projective_source_dim(fmap: InducedMap) -> int:
    return fmap.n - 1


def check_hyperplane_restriction(
    fmap: InducedMap,
    trials: int,
    seed: int,
    config: SpanConfig = SpanConfig(),
) -> List[SpanReport]:
    n = _projective_source_dim(fmap)
    big_n = span_dim(fmap)
    if big_n < 1 or n < 1:
        reason = f"span dimension N={big_n} < 1" if big_n < 1 else "source is a point"
        log.info(f"hyperplane check skipped: {reason}")
        return [SpanReport(check="hyperplane", trial=0, seed=seed, bound=None, status="SKIP", reason=reason)]

    bound = lower_op(big_n, n)
    reports = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, "hyperplane", trial)
        rng = make_rng(trial_seed)
        measured, attempts = -1, 0
        for attempts in range(1, config.retries + 2):
            pi = random_hyperplane(fmap.n, rng, config.coord_bound, config.complex_coords)
            measured = span_dim(fmap, pi)
            if measured >= bound:
                break
            log.warning(f"hyperplane trial {trial}: D={measured} < {bound}, retrying (non-generic sample?)")
        passed = measured >= bound
        reports.append(
            SpanReport(
                check="hyperplane",
                trial=trial,
                seed=trial_seed,
                dims=(n - 1,),
                measured=(measured,),
                bound=bound,
                passed=passed,
                status="OK" if passed else "FAIL",
                attempts=attempts,
                extra={"N": big_n, "n": n},
            )
        )
    return reports


def check_orthogonal_span_bound(
    fmap: InducedMap,
    form: SignatureForm,
    m1: int,
    m2: int,
    trials: int,
    seed: int,
    config: SpanConfig = SpanConfig(),
) -> List[SpanReport]:
    if form.n != fmap.n:
        raise DimensionMismatch(f"[check_orthogonal_span_bound] form n={form.n} != map source dimension {fmap.n}")
    if m1 + m2 > form.r + form.s - 2:
        raise HypothesisViolated(
            f"[check_orthogonal_span_bound] m1+m2={m1 + m2} exceeds r+s-2={form.r + form.s - 2}"
        )
    big_n = span_dim(fmap)
    bound = big_n - 1
    reports = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, "orthopair", trial)
        s1, s2 = random_orthogonal_pair(m1, m2, form, trial_seed, config.coord_bound, config.complex_coords)
        d1, d2 = span_dim(fmap, s1), span_dim(fmap, s2)
        vanishes = pairing_vanishes(fmap, s1, s2)
        passed = d1 + d2 <= bound
        reports.append(
            SpanReport(
                check="orthopair",
                trial=trial,
                seed=trial_seed,
                dims=(m1, m2),
                measured=(d1, d2),
                bound=bound,
                passed=passed,
                status="OK" if passed and vanishes else "FAIL",
                reason="" if vanishes else "weighted pairing does not vanish on M1 x M2",
                pairing_vanishes=vanishes,
                extra={"N": big_n},
            )
        )
    return reports


def dim_prop_target(fmap: InducedMap, m: int, a: Optional[int] = None, b: Optional[int] = None) -> Tuple[Optional[int], str]:
    """
    (하한, 근거). 적용할 수 없으면 (None, 이유).

    - span 이 n (선형 사상): 하한 m
    - span 이 N(n;a,b): 범위 안의 m 이면 N(m;a,b) 류의 하한, 밖이면 hyperplane 반복 하한
    """
    n = _projective_source_dim(fmap)
    if not (0 <= m <= n):
        raise InvalidInput(f"[check_dim_prop] need 0 <= m <= n={n}, got {m}")
    big_n = span_dim(fmap)

    if a is not None and b is not None:
        expected = n_ab(n, a, b)
        if big_n != expected:
            raise HypothesisViolated(
                f"[check_dim_prop] span dimension {big_n} is not N({n};{a},{b}) = {expected}"
            )
    elif big_n == n:
        return m, "linear"
    else:
        found = find_n_ab(big_n, n)
        if found is None:
            return None, f"span dimension {big_n} is not of the form N({n};a,b)"
        a, b = found

    if m == n:
        return big_n, f"N({n};{a},{b}) trivial m=n"
    bound = dim_prop_bound(n, a, b, m)
    if bound is not None:
        return bound, f"N({n};{a},{b})"
    return iterated_lower_bound(big_n, n, m), f"N({n};{a},{b}) iterated hyperplane"


def check_dim_prop(
    fmap: InducedMap,
    a: Optional[int],
    b: Optional[int],
    m: int,
    trials: int,
    seed: int,
    config: SpanConfig = SpanConfig(),
) -> List[SpanReport]:
    """a, b 가 None 이면 span 차원에서 (a, b) 를 찾는다 (auto)."""
    bound, basis = dim_prop_target(fmap, m, a, b)
    if bound is None:
        log.info(f"dim-prop check not applicable: {basis}")
        return [SpanReport(check="dimprop", trial=0, seed=seed, dims=(m,), status="SKIP", reason=f"not applicable: {basis}")]

    reports = []
    for trial in range(trials):
        trial_seed = derive_seed(seed, "dimprop", trial)
        rng = make_rng(trial_seed)
        measured, attempts = -1, 0
        for attempts in range(1, config.retries + 2):
            sub = random_subspace(fmap.n, m, rng, config.coord_bound, config.complex_coords)
            measured = span_dim(fmap, sub)
            if measured >= bound:
                break
            log.warning(f"dimprop trial {trial}: D={measured} < {bound}, retrying (non-generic sample?)")
        passed = measured >= bound
        reports.append(
            SpanReport(
                check="dimprop",
                trial=trial,
                seed=trial_seed,
                dims=(m,),
                measured=(measured,),
                bound=bound,
                passed=passed,
                status="OK" if passed else "FAIL",
                reason=basis,
                attempts=attempts,
                extra={"N": span_dim(fmap)},
            )
        )
    return reports
