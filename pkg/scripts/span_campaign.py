# scripts/span_campaign.py
# --------------------------------------------
# decomposition_oracle family 의 각 다항식을 분해해
# induced map 에 hyperplane / orthopair span check 를 돌리고
# 결과를 status 별로 집계 (FAIL 이 하나라도 있으면 exit 1)
#   python scripts/span_campaign.py --count 20 --trials 3
# --------------------------------------------

import sys
from pathlib import Path

import pandas as pd

CURRENT_DIR = Path(__file__).resolve().parent
PROJECT_ROOT = CURRENT_DIR.parent
SRC_DIR = PROJECT_ROOT / "src"

if str(SRC_DIR) not in sys.path:
    sys.path.append(str(SRC_DIR))

from hermrank.config import load_settings
from hermrank.errors import HermrankError
from hermrank.harness import make_family, make_family_spec
from hermrank.sos import decompose, induced_map
from hermrank.spans import check_hyperplane_restriction, check_orthogonal_span_bound, make_span_config
from hermrank.utils.logging_utils import configure_logging
from hermrank.utils.seeding import derive_seed


def main():
    import argparse

    parser = argparse.ArgumentParser(description="분해 oracle family 위의 span-lab campaign")
    parser.add_argument("--preset", type=str, default="decomposition_oracle")
    parser.add_argument("--count", type=int, default=None, help="instance 수 (기본: preset 값)")
    parser.add_argument("--trials", type=int, default=None, help="check 당 trial 수 (기본: spans.trials)")
    parser.add_argument("--m1", type=int, default=1)
    parser.add_argument("--m2", type=int, default=1)
    parser.add_argument("--csv", type=str, default=None, help="per-trial 결과 CSV 경로")
    args = parser.parse_args()

    settings = load_settings()
    configure_logging(settings)
    spec = make_family_spec(settings, preset=args.preset, count=args.count)
    config = make_span_config(settings, trials=args.trials)
    pivot = str((settings.get("linalg") or {}).get("pivot", "smallest"))
    print(f"[INFO] {spec.name}: n={spec.n} form={spec.form} count={spec.count} trials={config.trials}")

    rows = []
    for inst in make_family(spec).instances():
        dec = decompose(inst.poly, spec.form, pivot)
        if dec.R < 1:
            continue
        fmap = induced_map(dec)
        seed = derive_seed(spec.seed, "spans", inst.index)

        reports = check_hyperplane_restriction(fmap, config.trials, seed=seed, config=config)
        try:
            reports += check_orthogonal_span_bound(
                fmap, spec.form, args.m1, args.m2, config.trials, seed=seed, config=config
            )
        except HermrankError as e:
            print(f"[SKIP] #{inst.index} orthopair: {e}")

        for r in reports:
            rows.append(
                {
                    "index": inst.index,
                    "R": dec.R,
                    "check": r.check,
                    "trial": r.trial,
                    "status": r.status,
                    "measured": ",".join(str(x) for x in r.measured),
                    "bound": r.bound,
                    "reason": r.reason,
                }
            )

    if not rows:
        print("[RESULT] 결과가 없습니다.")
        return 0

    df = pd.DataFrame(rows)
    if args.csv:
        df.to_csv(args.csv, index=False)
        print(f"[INFO] per-trial CSV -> {args.csv}")

    print("\n[RESULT] check x status:")
    print(df.groupby(["check", "status"]).size().unstack(fill_value=0).to_string())

    fails = df[df["status"] == "FAIL"]
    if not fails.empty:
        print("\n[FAIL] bound 를 어긴 trial:")
        print(fails.to_string(index=False))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
