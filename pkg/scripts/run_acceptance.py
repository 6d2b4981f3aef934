# scripts/run_acceptance.py
# --------------------------------------------
# setting.yaml 의 preset family 들을 정리별로 검증하고
# report JSON 을 results/ 에 저장, 요약 표 출력
#   python scripts/run_acceptance.py --workers 4
#   python scripts/run_acceptance.py --only homo_c12 general_c9
# --------------------------------------------

import sys
from pathlib import Path

import pandas as pd

CURRENT_DIR = Path(__file__).resolve().parent
PROJECT_ROOT = CURRENT_DIR.parent
SRC_DIR = PROJECT_ROOT / "src"

if str(SRC_DIR) not in sys.path:
    sys.path.append(str(SRC_DIR))

from hermrank.config import load_settings, resolve_workers
from hermrank.gaps import TheoremVariant
from hermrank.harness import make_family_spec, run_verification
from hermrank.utils.logging_utils import configure_logging

# (preset, variant, cross_check)
CAMPAIGNS = [
    ("squared_monomials", TheoremVariant.GENERAL_THM, False),
    ("signed_monomials", TheoremVariant.GENERAL_THM, False),
    ("homo_c12", TheoremVariant.HOMO_THM, False),
    ("general_c9", TheoremVariant.GENERAL_THM, False),
    ("general_c9", TheoremVariant.CONJECTURE_SOS, False),
    ("decomposition_oracle", TheoremVariant.GENERAL_THM, True),
    ("lower_bound_lorentz", TheoremVariant.GENERAL_THM, False),
    ("lower_bound_degenerate", TheoremVariant.GENERAL_THM, False),
]


def main():
    import argparse

    parser = argparse.ArgumentParser(description="preset family 전체 검증 (gap 정리 acceptance)")
    parser.add_argument("--workers", type=int, default=None, help="worker 수 (기본: setting.yaml / HERMRANK_WORKERS)")
    parser.add_argument("--out-dir", type=str, default=str(PROJECT_ROOT / "results"), help="report 저장 폴더")
    parser.add_argument("--only", nargs="*", default=None, help="이 preset 들만 실행")
    args = parser.parse_args()

    settings = load_settings()
    configure_logging(settings)
    workers = args.workers or resolve_workers(settings)
    harness = settings.get("harness") or {}

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    rows = []
    for preset, variant, cross_check in CAMPAIGNS:
        if args.only and preset not in args.only:
            continue

        print(f"\n[RUN] {preset} / {variant.value} (workers={workers})")
        spec = make_family_spec(settings, preset=preset)
        report = run_verification(
            spec,
            variant,
            workers=workers,
            attempt_factor=int(harness.get("attempt_factor", 10)),
            cross_check=cross_check,
        )
        path = out_dir / f"{preset}_{variant.value}.json"
        report.write(path)
        print(report.summary())

        ranks = [r["R"] for r in report.records if r["R"] is not None]
        rows.append(
            {
                "preset": preset,
                "variant": variant.value,
                "instances": len(report.records),
                "ok": report.counts.get("OK", 0),
                "skip": report.counts.get("SKIP", 0),
                "error": report.counts.get("ERROR", 0),
                "violations": len(report.violations),
                "candidates": len(report.counterexample_candidates),
                "min_R": min(ranks) if ranks else None,
                "max_R": max(ranks) if ranks else None,
                "report": path.name,
            }
        )

    if not rows:
        print("[RESULT] 실행된 campaign 이 없습니다. (--only 확인)")
        return 2

    df = pd.DataFrame(rows)
    print("\n[RESULT] acceptance 요약:")
    print(df.to_string(index=False))

    n_viol = int(df["violations"].sum())
    if n_viol:
        print(f"\n[FAIL] 증명된 정리 위반 {n_viol} 건. report 의 violations 를 확인하세요.")
        return 1
    print("\n[OK] 위반 없음")
    return 0


if __name__ == "__main__":
    sys.exit(main())
