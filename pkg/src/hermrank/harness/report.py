# src/hermrank/harness/report.py
"""
verification 결과 Report.

- JSON 이 원본이며 CSV 는 per-instance record 를 평탄화한 사본이다.
- wall_clock 은 include_timing 일 때만 기록한다 (같은 seed 재실행 = 같은 바이트).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from hermrank import __version__
from hermrank.errors import HermrankError, SchemaError
from hermrank.gaps import GapProfile, TheoremVariant
from hermrank.harness.configs import FamilySpec
from hermrank.harness.metrics import histogram_frame, rank_summary
from hermrank.polyio.json_codec import REPORT_SCHEMA, profile_from_json, profile_to_json, write_json

RECORD_COLUMNS = [
    "index",
    "digest",
    "seed",
    "status",
    "reason",
    "R",
    "p",
    "q",
    "verified",
    "matrix_rank",
    "bihomogeneous",
    "homogenized",
    "lower_bound",
    "lower_bound_ok",
    "kind",
    "label",
    "interval",
    "gap",
    "terms",
]


@dataclass
class Report:
    spec: FamilySpec
    variant: TheoremVariant
    profile: GapProfile
    records: List[Dict[str, Any]]
    histogram: List[Dict[str, Any]]
    violations: List[Dict[str, Any]] = field(default_factory=list)
    counterexample_candidates: List[Dict[str, Any]] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    seed: int = 0
    tool_version: str = __version__
    wall_clock: Optional[float] = None

    @property
    def exit_status(self) -> int:
        """증명된 정리의 위반이 있으면 1. 추측(ConjectureSOS) 반례 후보는 0."""
        return 1 if self.violations else 0

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.records, columns=RECORD_COLUMNS)

    def histogram_frame(self) -> pd.DataFrame:
        return histogram_frame(self.histogram)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": REPORT_SCHEMA,
            "tool_version": self.tool_version,
            "seed": self.seed,
            "family": self.spec.to_dict(),
            "variant": self.variant.value,
            "profile": profile_to_json(self.profile),
            "records": [dict(r) for r in self.records],
            "histogram": [dict(b) for b in self.histogram],
            "violations": [dict(v) for v in self.violations],
            "counterexample_candidates": [dict(c) for c in self.counterexample_candidates],
            "counts": dict(self.counts),
        }
        if self.wall_clock is not None:
            out["wall_clock"] = round(float(self.wall_clock), 3)
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        def need(key: str) -> Any:
            if key not in data:
                raise SchemaError(f"missing field {key!r}", f"/{key}")
            return data[key]

        try:
            spec = FamilySpec.from_dict(need("family"))
        except HermrankError as exc:
            raise SchemaError(str(exc), "/family") from None
        try:
            variant = TheoremVariant(need("variant"))
        except ValueError:
            raise SchemaError(f"unknown variant {data['variant']!r}", "/variant") from None
        for key in ("records", "histogram", "violations", "counterexample_candidates"):
            if not isinstance(need(key), list):
                raise SchemaError("expected an array", f"/{key}")

        return cls(
            spec=spec,
            variant=variant,
            profile=profile_from_json(need("profile"), "/profile"),
            records=[dict(r) for r in data["records"]],
            histogram=[dict(b) for b in data["histogram"]],
            violations=[dict(v) for v in data["violations"]],
            counterexample_candidates=[dict(c) for c in data["counterexample_candidates"]],
            counts=dict(data.get("counts") or {}),
            seed=int(need("seed")),
            tool_version=str(need("tool_version")),
            wall_clock=data.get("wall_clock"),
        )

    def write(self, path: Union[str, Path]) -> str:
        return write_json(self.to_dict(), path)

    def write_csv(self, path: Union[str, Path]) -> None:
        self.frame().to_csv(path, index=False, encoding="utf-8")

    def summary(self) -> str:
        c = self.counts
        lines = [
            f"family   : {self.spec.name or self.spec.kind} (n={self.spec.n}, form={self.spec.form}, seed={self.seed})",
            f"variant  : {self.variant.value}",
            f"instances: {len(self.records)} (OK={c.get('OK', 0)}, SKIP={c.get('SKIP', 0)}, ERROR={c.get('ERROR', 0)})",
            f"violations: {len(self.violations)}",
        ]
        ranks = rank_summary(self.frame())
        if ranks["min"] is not None:
            lines.append(f"ranks    : {ranks['min']}..{ranks['max']} ({len(ranks['distinct'])} distinct)")
        if self.variant.observational:
            lines.append(f"counterexample candidates: {len(self.counterexample_candidates)}")
        if self.wall_clock is not None:
            lines.append(f"wall clock: {self.wall_clock:.2f}s")
        lines.append(self.histogram_frame().to_string(index=False))
        return "\n".join(lines)
