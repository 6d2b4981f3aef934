# src/hermrank/main.py
"""
hermrank CLI

    python -m hermrank.main rank      --form 2,0,0 --input id.hp [--json]
    python -m hermrank.main decompose --form 2,0,0 --input id.hp --out d.json
    python -m hermrank.main gaps      --n 20 --tau 0 --variant general [--json]
    python -m hermrank.main macaulay  --a 5 --n 2 [--json]
    python -m hermrank.main spans     --check hyperplane --input d.json --seed 1 --trials 5
    python -m hermrank.main verify    --preset homo_c12 --variant homo --report out.json [--csv out.csv]

exit code: 0 성공 / 1 증명된 정리 위반 / 2 사용법·입력 오류
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from hermrank.config import load_settings, resolve_workers
from hermrank.errors import DimensionMismatch, HermrankError
from hermrank.gaps import TheoremVariant, format_profile_table, gap_profile
from hermrank.harness import make_family_spec, run_verification
from hermrank.macaulay import lower_op, macaulay_rep
from hermrank.poly import HermitianPoly, SignatureForm
from hermrank.polyio import (
    decomposition_to_json,
    json_line,
    parse_poly,
    profile_to_json,
    read_json,
    span_report_to_json,
    write_json,
)
from hermrank.sos import (
    WeightedSOSDecomposition,
    decompose,
    hermitian_product,
    induced_map,
    sos_rank,
)
from hermrank.spans import (
    check_dim_prop,
    check_hyperplane_restriction,
    check_orthogonal_span_bound,
    make_span_config,
)
from hermrank.utils.logging_utils import configure_logging, get_logger

log = get_logger("hermrank.main")

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _pivot(settings: Dict[str, Any]) -> str:
    return str((settings.get("linalg") or {}).get("pivot", "smallest"))


def load_input_poly(path: str, form: SignatureForm) -> HermitianPoly:
    """.json 이면 PolyJSON, 아니면 PolyText 로 읽는다."""
    p = Path(path)
    if not p.exists():
        raise UsageError(f"input not found: {path}")
    if p.suffix.lower() == ".json":
        poly = read_json(p)
        if not isinstance(poly, HermitianPoly):
            raise UsageError(f"{path} does not hold a polynomial")
        if poly.n != form.n:
            raise DimensionMismatch(f"[load_input_poly] polynomial has n={poly.n}, form {form} has n={form.n}")
        return poly
    return parse_poly(p.read_text(encoding="utf-8").strip(), form.n)


def load_decomposition(args: argparse.Namespace, settings: Dict[str, Any]) -> WeightedSOSDecomposition:
    """decomposition JSON 이거나, --form 과 다항식 입력으로 새로 분해한다."""
    p = Path(args.input)
    if p.suffix.lower() == ".json" and p.exists():
        obj = read_json(p)
        if isinstance(obj, WeightedSOSDecomposition):
            return obj
    if not args.form:
        raise UsageError("--form is required unless --input is a decomposition JSON")
    form = SignatureForm.parse(args.form)
    return decompose(load_input_poly(args.input, form), form, _pivot(settings))


# --- subcommands ---


def run_rank(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    form = SignatureForm.parse(args.form)
    a = load_input_poly(args.input, form)
    res = sos_rank(a, form, _pivot(settings))
    if args.json:
        prod = hermitian_product(a, form)
        print(json_line({"R": res.R, "p": res.p, "q": res.q, "form": str(form), "homogenized": prod.homogenized}))
    else:
        print(f"R={res.R} (p={res.p},q={res.q})")
    return EXIT_OK


def run_decompose(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    form = SignatureForm.parse(args.form)
    a = load_input_poly(args.input, form)
    prod = hermitian_product(a, form)
    dec = decompose(a, form, _pivot(settings))
    text = write_json(decomposition_to_json(dec, prod.poly), args.out)
    if args.out:
        print(f"R={dec.R} (p={dec.p},q={dec.q}) -> {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def run_gaps(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    """기본 출력은 JSON 한 줄 + 정렬된 표. --json 이면 JSON 만."""
    profile = gap_profile(args.n, args.tau, TheoremVariant.parse(args.variant))
    if args.json:
        sys.stdout.write(write_json(profile_to_json(profile)))
        return EXIT_OK
    print(json_line(profile_to_json(profile)))
    print(format_profile_table(profile))
    return EXIT_OK


def run_macaulay(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    rep = macaulay_rep(args.a, args.n)
    lowered = lower_op(args.a, args.n)
    if args.json:
        print(json_line({"A": args.a, "n": args.n, "terms": [list(t) for t in rep.terms()], "lowered": lowered}))
    else:
        print(f"{args.a} = {rep}")
        print(f"lowered: {lowered}")
    return EXIT_OK


def run_spans(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    dec = load_decomposition(args, settings)
    fmap = induced_map(dec)
    config = make_span_config(settings, trials=args.trials)
    trials = config.trials

    if args.check == "hyperplane":
        reports = check_hyperplane_restriction(fmap, trials, args.seed, config)
    elif args.check == "orthopair":
        if args.m1 is None or args.m2 is None:
            raise UsageError("orthopair needs --m1 and --m2")
        reports = check_orthogonal_span_bound(fmap, dec.form, args.m1, args.m2, trials, args.seed, config)
    else:
        if args.m is None:
            raise UsageError("dimprop needs --m")
        if (args.a is None) != (args.b is None):
            raise UsageError("give both --a and --b, or neither (auto)")
        reports = check_dim_prop(fmap, args.a, args.b, args.m, trials, args.seed, config)

    for r in reports:
        print(json_line(span_report_to_json(r)))
    return EXIT_VIOLATION if any(r.status == "FAIL" for r in reports) else EXIT_OK


def run_verify(args: argparse.Namespace, settings: Dict[str, Any]) -> int:
    if not args.preset and not args.family:
        raise UsageError("verify needs --preset or --family")
    spec = make_family_spec(
        settings,
        preset=args.preset,
        kind=args.family,
        n=args.n,
        form=args.form,
        degree=args.degree,
        count=args.count,
        seed=args.seed,
        coeff_range=args.coeff_range,
        max_terms=args.max_terms,
    )
    harness = settings.get("harness") or {}
    report_cfg = settings.get("report") or {}
    report = run_verification(
        spec,
        TheoremVariant.parse(args.variant),
        workers=args.workers or resolve_workers(settings),
        attempt_factor=int(harness.get("attempt_factor", 10)),
        cross_check=bool(args.cross_check or harness.get("cross_check", False)),
        include_timing=bool(args.timing or report_cfg.get("include_timing", False)),
        pivot=_pivot(settings),
    )
    if args.report:
        report.write(args.report)
        log.info(f"report -> {args.report}")
    if args.csv:
        report.write_csv(args.csv)
        log.info(f"csv -> {args.csv}")
    print(report.summary())
    for v in report.violations:
        log.error(f"violation [{v['check']}] instance {v['index']}: {v['detail']}")
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermrank",
        description="hermrank - A(z, z̄)·‖z‖²_{r,s,t} 의 rank / signature 와 rank gap 검증",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="DEBUG 로그 출력")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="R, p, q 계산")
    p.add_argument("--form", required=True, help="signature 'r,s,t'")
    p.add_argument("--input", required=True, help="PolyText(.hp) 또는 PolyJSON(.json)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_rank)

    p = sub.add_parser("decompose", help="weighted SOS 분해를 JSON 으로")
    p.add_argument("--form", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--out", help="출력 경로 (없으면 stdout)")
    p.set_defaults(func=run_decompose)

    p = sub.add_parser("gaps", help="gap profile")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=int, default=0)
    p.add_argument("--variant", default="general", help="general | homo | conjecture | corollary | remark")
    p.add_argument("--json", action="store_true", help="JSON 만 출력 (표 생략)")
    p.set_defaults(func=run_gaps)

    p = sub.add_parser("macaulay", help="Macaulay 표현과 lowering")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=run_macaulay)

    p = sub.add_parser("spans", help="induced map 의 span 차원 검사 (JSON lines)")
    p.add_argument("--check", required=True, choices=["hyperplane", "orthopair", "dimprop"])
    p.add_argument("--input", required=True, help="decomposition JSON 또는 다항식 (--form 필요)")
    p.add_argument("--form")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--m1", type=int)
    p.add_argument("--m2", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(func=run_spans)

    p = sub.add_parser("verify", help="family 검증 캠페인")
    p.add_argument("--preset", help="config/setting.yaml 의 families.<NAME>")
    p.add_argument("--family", help="monomial-exhaustive | random-bihomogeneous | random-general")
    p.add_argument("--variant", default="general")
    p.add_argument("--n", type=int)
    p.add_argument("--form")
    p.add_argument("--degree", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--coeff-range", dest="coeff_range", type=int)
    p.add_argument("--max-terms", dest="max_terms", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--cross-check", dest="cross_check", action="store_true", help="p+q 를 matrix_rank 로 재확인")
    p.add_argument("--report", help="Report JSON 경로")
    p.add_argument("--csv", help="per-instance CSV 경로")
    p.add_argument("--timing", action="store_true", help="wall_clock 기록")
    p.set_defaults(func=run_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings()
    except (FileNotFoundError, ValueError) as e:
        print(f"[hermrank] config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    configure_logging(settings, verbose=args.verbose)

    try:
        return args.func(args, settings)
    except (UsageError, HermrankError) as e:
        print(f"[hermrank] error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
