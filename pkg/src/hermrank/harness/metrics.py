# src/hermrank/harness/metrics.py

from __future__ import annotations

from typing import Any, Dict, List

import numpy as np
import pandas as pd

from hermrank.gaps import GapProfile


def profile_buckets(profile: GapProfile) -> List[Dict[str, Any]]:
    """
    histogram bucket = profile 의 허용 구간 / 금지 gap / tail.
    [1, ∞) 를 빈틈 없이 덮고 lo 순서로 정렬된다.
    """
    buckets = [{"kind": "allowed", "label": f"k={k}", "lo": lo, "hi": hi} for k, (lo, hi) in enumerate(profile.allowed, start=1)]
    buckets += [{"kind": "forbidden", "label": "gap", "lo": lo, "hi": hi} for lo, hi in profile.forbidden]
    buckets.sort(key=lambda b: b["lo"])
    buckets.append({"kind": "tail", "label": "tail", "lo": profile.tail, "hi": None})
    return buckets


def rank_histogram(ranks: List[int], profile: GapProfile) -> List[Dict[str, Any]]:
    """
    각 bucket 의 rank 개수와 관측된 최대 R.
    반환: [{kind, label, lo, hi, count, max_R}, ...]  (hi=None 은 tail, 빈 bucket 의 max_R=None)
    """
    buckets = profile_buckets(profile)
    values = np.asarray([r for r in ranks if r >= 1], dtype=np.int64)

    # bucket 들이 연속이므로 [lo - 0.5, 다음 lo - 0.5) 로 자르면 정수 [lo, hi] 와 같다
    edges = [b["lo"] - 0.5 for b in buckets] + [np.inf]
    codes = pd.cut(pd.Series(values, dtype="float64"), bins=edges, right=False, labels=False)
    grouped = pd.Series(values, dtype="int64").groupby(codes)
    counts, maxima = grouped.size(), grouped.max()

    out = []
    for i, b in enumerate(buckets):
        n = int(counts.get(i, 0))
        out.append({**b, "count": n, "max_R": int(maxima.get(i)) if n else None})
    return out


def histogram_frame(histogram: List[Dict[str, Any]]) -> pd.DataFrame:
    df = pd.DataFrame(histogram, columns=["kind", "label", "lo", "hi", "count", "max_R"])
    df["hi"] = df["hi"].map(lambda h: "inf" if pd.isna(h) else int(h))
    df["max_R"] = df["max_R"].map(lambda m: "-" if pd.isna(m) else int(m))
    return df


def status_counts(records: pd.DataFrame) -> Dict[str, int]:
    if records.empty:
        return {"OK": 0, "SKIP": 0, "ERROR": 0}
    counts = records["status"].value_counts()
    return {s: int(counts.get(s, 0)) for s in ("OK", "SKIP", "ERROR")}


def rank_summary(records: pd.DataFrame) -> Dict[str, Any]:
    """OK record 의 R 요약 (min / max / 서로 다른 값)."""
    ok = records[records["status"] == "OK"] if not records.empty else records
    if ok.empty:
        return {"min": None, "max": None, "distinct": []}
    ranks = ok["R"].astype(int)
    return {"min": int(ranks.min()), "max": int(ranks.max()), "distinct": sorted(int(r) for r in ranks.unique())}
