# src/hermrank/harness/spec_factory.py
from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from hermrank.config import load_settings
from hermrank.errors import HermrankError, SpecError
from hermrank.harness.configs import FamilySpec
from hermrank.poly import SignatureForm


def list_presets(settings: Optional[Dict[str, Any]] = None) -> List[str]:
    settings = settings if settings is not None else load_settings()
    return sorted((settings.get("families") or {}).keys())


def make_family_spec(
    settings: Optional[Dict[str, Any]] = None,
    *,
    preset: Optional[str] = None,
    **overrides: Any,
) -> FamilySpec:
    """
    setting.yaml 의 families.<preset> + harness 기본값 + overrides(None 제외) -> FamilySpec.

    form 이 없으면 n 의 Euclidean form (n, 0, 0) 을 쓴다.
    """
    settings = settings if settings is not None else load_settings()
    harness = settings.get("harness") or {}

    values: Dict[str, Any] = {
        "coeff_range": harness.get("coeff_range", 3),
        "max_terms": harness.get("max_terms", 0),
    }
    if preset is not None:
        families = settings.get("families") or {}
        if preset not in families:
            raise SpecError(f"[make_family_spec] unknown preset {preset!r} (available: {sorted(families)})")
        values.update(families[preset] or {})
        values["name"] = preset
    values.update({k: v for k, v in overrides.items() if v is not None})

    if "kind" not in values or "n" not in values:
        raise SpecError("[make_family_spec] a family needs at least kind and n")

    try:
        n = int(values["n"])
        form = values.get("form")
        if form is None:
            form = SignatureForm.euclidean(n)
        elif not isinstance(form, SignatureForm):
            form = SignatureForm.parse(str(form))
        return FamilySpec(
            kind=str(values["kind"]),
            n=n,
            form=form,
            degree=int(values.get("degree", 1)),
            coeff_range=int(values["coeff_range"]),
            count=int(values.get("count", 0)),
            seed=int(values.get("seed", 0)),
            support_cap=int(values.get("support_cap", 1)),
            signs=tuple(int(s) for s in values.get("signs", (-1, 1))),
            diagonal_only=bool(values.get("diagonal_only", False)),
            max_terms=int(values["max_terms"]),
            complex_coeffs=bool(values.get("complex_coeffs", False)),
            name=str(values.get("name", "")),
        )
    except SpecError:
        raise
    except (HermrankError, TypeError, ValueError) as exc:
        raise SpecError(f"[make_family_spec] {exc}") from None


def make_form_sweep(n: int) -> List[Tuple[str, SignatureForm]]:
    """lower bound 검사용 form 3종: (n,0,0), (n-1,1,0), (n-2,1,1)."""
    out = [("euclidean", SignatureForm(n, 0, 0))]
    if n >= 2:
        out.append(("lorentz", SignatureForm(n - 1, 1, 0)))
    if n >= 3:
        out.append(("degenerate", SignatureForm(n - 2, 1, 1)))
    return out
