# scripts/macaulay_sweep.py
# --------------------------------------------
# Macaulay lowering sanity sweep
#  1) A = 1..max_a 에 대해 rep -> reconstruct 왕복
#  2) n = 2..max_n 의 모든 (a, b) 에 대해 N(n;a,b) lowering 예측 확인
#   python scripts/macaulay_sweep.py --max-n 40 --max-a 5000
# --------------------------------------------

import sys
from pathlib import Path

import pandas as pd

CURRENT_DIR = Path(__file__).resolve().parent
PROJECT_ROOT = CURRENT_DIR.parent
SRC_DIR = PROJECT_ROOT / "src"

if str(SRC_DIR) not in sys.path:
    sys.path.append(str(SRC_DIR))

from hermrank.macaulay import lemma_nab, lemma_nab_range, macaulay_rep, reconstruct


def main():
    import argparse

    parser = argparse.ArgumentParser(description="Macaulay 표현 / N(n;a,b) lowering sweep")
    parser.add_argument("--max-n", type=int, default=30)
    parser.add_argument("--max-a", type=int, default=2000)
    args = parser.parse_args()

    bad_rep = 0
    for n in range(1, args.max_n + 1):
        for a in range(1, args.max_a + 1):
            if reconstruct(macaulay_rep(a, n)) != a:
                bad_rep += 1
                print(f"[FAIL] reconstruct(rep({a}, {n})) != {a}")
    print(f"[INFO] round trip: n<={args.max_n}, A<={args.max_a}, 실패 {bad_rep}")

    rows = []
    for n in range(2, args.max_n + 1):
        checks = [lemma_nab(n, a, b) for a, b in lemma_nab_range(n)]
        failed = [c for c in checks if not c.holds]
        for c in failed:
            print(f"[FAIL] n={c.n} a={c.a} b={c.b}: lowered={c.lowered} predicted={c.predicted}")
        rows.append({"n": n, "pairs": len(checks), "failed": len(failed)})

    df = pd.DataFrame(rows)
    print("\n[RESULT] lemma sweep:")
    print(df.to_string(index=False))

    return 1 if bad_rep or int(df["failed"].sum()) else 0


if __name__ == "__main__":
    sys.exit(main())
