# src/hermrank/harness/verification.py

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

import pandas as pd

from hermrank.errors import HermrankError, SpecError, ZeroProduct
from hermrank.gaps import GapProfile, RankClass, TheoremVariant, classify_rank, gap_profile
from hermrank.harness.configs import RANDOM_GENERAL, FamilySpec
from hermrank.harness.families import FamilyInstance, make_family
from hermrank.harness.metrics import rank_histogram, status_counts
from hermrank.harness.report import RECORD_COLUMNS, Report
from hermrank.linalg import matrix_rank
from hermrank.poly import SignatureForm, coefficient_matrix, is_bihomogeneous, support_basis
from hermrank.polyio import format_poly
from hermrank.sos import decompose, hermitian_product, verify_decomposition
from hermrank.utils.logging_utils import get_logger
from hermrank.utils.seeding import derive_seed

log = get_logger(__name__)


@dataclass
class InstanceResult:
    index: int
    digest: str
    seed: str
    status: str = "OK"          # OK / SKIP / ERROR
    reason: str = ""
    R: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    verified: Optional[bool] = None
    matrix_rank: Optional[int] = None
    bihomogeneous: Optional[bool] = None
    homogenized: Optional[bool] = None
    lower_bound: Optional[int] = None
    lower_bound_ok: Optional[bool] = None
    kind: str = ""
    label: str = ""
    interval: Optional[int] = None
    gap: str = ""
    terms: int = 0


@dataclass(frozen=True)
class VerifyJob:
    instance: FamilyInstance
    form: SignatureForm
    profile: GapProfile
    seed: int
    cross_check: bool = False
    pivot: str = "smallest"


def verify_instance(job: VerifyJob) -> InstanceResult:
    """
    instance 하나:
      1) A·‖z‖² 의 weighted SOS 분해 (R, p, q)
      2) verify_decomposition 으로 R 재검증
      3) R >= r + s
      4) gap profile 로 분류
    예외는 record 의 status/reason 으로 바꾼다.
    """
    inst = job.instance
    a = inst.poly
    res = InstanceResult(
        index=inst.index,
        digest=inst.digest,
        seed=str(job.seed),
        terms=len(a),
        bihomogeneous=is_bihomogeneous(a) is not None,
    )

    if job.profile.variant is TheoremVariant.HOMO_THM and not res.bihomogeneous:
        res.status, res.reason = "SKIP", "not_applicable:not_bihomogeneous"
        return res

    try:
        prod = hermitian_product(a, job.form)
        dec = decompose(a, job.form, job.pivot)
    except ZeroProduct:
        res.status, res.reason = "SKIP", "zero_product"
        return res
    except HermrankError as e:
        res.status, res.reason = "ERROR", f"decompose_error:{e}"
        return res

    res.R, res.p, res.q = dec.R, dec.p, dec.q
    res.homogenized = prod.homogenized
    res.verified = verify_decomposition(prod.poly, dec)
    if not res.verified:
        res.status, res.reason = "ERROR", "verify_failed"

    if job.cross_check:
        basis = support_basis(prod.poly)
        c = coefficient_matrix(prod.poly, (basis.d, basis.d), basis)
        res.matrix_rank = matrix_rank(c.to_rows())

    res.lower_bound = job.form.r + job.form.s
    res.lower_bound_ok = dec.R >= res.lower_bound

    cls = classify_rank(dec.R, job.profile)
    res.kind = cls.kind.value
    res.label = cls.label
    res.interval = cls.interval
    res.gap = f"{cls.gap[0]}-{cls.gap[1]}" if cls.gap else ""
    return res


def check_variant(spec: FamilySpec, variant: TheoremVariant) -> GapProfile:
    """family / form / variant 가 서로 맞는지 확인하고 profile 을 만든다."""
    if variant is TheoremVariant.HOMO_THM and spec.kind == RANDOM_GENERAL:
        raise SpecError("[run_verification] HomoThm needs a bihomogeneous family (random-general given)")
    try:
        return gap_profile(spec.n, spec.form.t, variant)
    except HermrankError as e:
        raise SpecError(f"[run_verification] no {variant.value} profile for n={spec.n}, form={spec.form}: {e}") from None


def _violations(res: InstanceResult, profile: GapProfile) -> List[Dict[str, Any]]:
    base = {"index": res.index, "digest": res.digest, "R": res.R}
    out = []
    if res.verified is False:
        out.append({**base, "check": "verify_decomposition", "detail": "expansion does not reproduce the product"})
    if res.matrix_rank is not None and res.R is not None and res.matrix_rank != res.R:
        out.append({**base, "check": "matrix_rank", "detail": f"p+q={res.R} but matrix rank {res.matrix_rank}"})
    if res.lower_bound_ok is False:
        out.append({**base, "check": "lower_bound", "detail": f"R={res.R} < r+s={res.lower_bound}"})
    if res.kind == RankClass.FORBIDDEN.value and not profile.variant.observational:
        out.append({**base, "check": "gap", "detail": f"R={res.R} in forbidden gap [{res.gap}]"})
    return out


class FamilyVerifier:
    """
    FamilySpec 의 모든 instance 를 검증하고 Report 를 만든다.

    - instance 생성은 호출 프로세스에서 순서대로 (결정적)
    - 검증은 worker pool (workers > 1), 결과는 index 순으로 다시 모은다
    """

    def __init__(
        self,
        spec: FamilySpec,
        variant: TheoremVariant,
        workers: int = 1,
        attempt_factor: int = 10,
        cross_check: bool = False,
        include_timing: bool = False,
        pivot: str = "smallest",
    ) -> None:
        self.spec = spec
        self.variant = variant
        self.workers = max(int(workers), 1)
        self.attempt_factor = attempt_factor
        self.cross_check = bool(cross_check)
        self.include_timing = bool(include_timing)
        self.pivot = pivot
        self.profile = check_variant(spec, variant)

    def jobs(self) -> List[VerifyJob]:
        return [
            VerifyJob(
                instance=inst,
                form=self.spec.form,
                profile=self.profile,
                seed=derive_seed(self.spec.seed, "instance", inst.index),
                cross_check=self.cross_check,
                pivot=self.pivot,
            )
            for inst in make_family(self.spec, self.attempt_factor).instances()
        ]

    def _execute(self, jobs: List[VerifyJob]) -> List[InstanceResult]:
        if self.workers == 1 or len(jobs) < 2:
            return [verify_instance(j) for j in jobs]
        with ProcessPoolExecutor(max_workers=self.workers) as ex:
            return list(ex.map(verify_instance, jobs, chunksize=max(len(jobs) // (4 * self.workers), 1)))

    def run(self) -> Report:
        started = time.perf_counter()
        label = self.spec.name or self.spec.kind
        log.info(f"{label}: generating instances (n={self.spec.n}, form={self.spec.form}, seed={self.spec.seed})")
        jobs = self.jobs()
        log.info(f"{label}: {len(jobs)} instances, {self.workers} worker(s), profile {self.variant.value}")

        results = sorted(self._execute(jobs), key=lambda r: r.index)
        polys = {j.instance.index: j.instance.poly for j in jobs}

        violations: List[Dict[str, Any]] = []
        candidates: List[Dict[str, Any]] = []
        for res in results:
            if res.status == "SKIP":
                log.info(f"instance {res.index}: SKIP ({res.reason})")
            elif res.status == "ERROR":
                log.warning(f"instance {res.index}: ERROR ({res.reason})")
            found = _violations(res, self.profile)
            if found:
                text = format_poly(polys[res.index])
                violations.extend({**v, "poly": text} for v in found)
            if res.kind == RankClass.FORBIDDEN.value and self.profile.variant.observational:
                candidates.append({"index": res.index, "digest": res.digest, "R": res.R, "gap": res.gap, "poly": format_poly(polys[res.index])})

        df = pd.DataFrame([asdict(r) for r in results], columns=RECORD_COLUMNS)
        # 보기 편하게 정렬(OK 먼저, index 순)
        if not df.empty:
            df["status_rank"] = df["status"].map({"OK": 0, "SKIP": 1, "ERROR": 2}).fillna(9)
            df = df.sort_values(["status_rank", "index"], kind="stable").drop(columns=["status_rank"])
        records = [asdict(results[i]) for i in df.index]

        ranks = [r.R for r in results if r.status == "OK" and r.R is not None]
        elapsed = time.perf_counter() - started
        report = Report(
            spec=self.spec,
            variant=self.variant,
            profile=self.profile,
            records=records,
            histogram=rank_histogram(ranks, self.profile),
            violations=violations,
            counterexample_candidates=candidates,
            counts={**status_counts(df), "violations": len(violations), "candidates": len(candidates)},
            seed=self.spec.seed,
            wall_clock=elapsed if self.include_timing else None,
        )
        log.info(
            f"{label}: done, OK={report.counts['OK']} SKIP={report.counts['SKIP']} "
            f"ERROR={report.counts['ERROR']} violations={len(violations)}"
        )
        return report


def run_verification(
    spec: FamilySpec,
    variant: TheoremVariant,
    workers: int = 1,
    attempt_factor: int = 10,
    cross_check: bool = False,
    include_timing: bool = False,
    pivot: str = "smallest",
) -> Report:
    return FamilyVerifier(
        spec,
        variant,
        workers=workers,
        attempt_factor=attempt_factor,
        cross_check=cross_check,
        include_timing=include_timing,
        pivot=pivot,
    ).run()
