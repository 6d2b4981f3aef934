# src/hermrank/config.py

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from hermrank.errors import InvalidInput

# config 디렉터리 위치: 레포 루트/config
# (src/hermrank/config.py 기준으로 ../../config)
CONFIG_DIR = Path(__file__).resolve().parents[2] / "config"

SETTINGS_FILE = "setting.yaml"
LOCAL_SETTINGS_FILE = "setting.local.yaml"
PRESET_SECTION = "families"

WORKERS_ENV = "HERMRANK_WORKERS"

Settings = Dict[str, Dict[str, Any]]


def read_settings_file(path: Path) -> Settings:
    """
    설정 파일 하나를 {section: {key: value}} 로 읽는다.
    빈 파일과 빈 section 은 {} 로 취급한다.
    """
    if not path.exists():
        raise FileNotFoundError(f"[load_settings] settings file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise InvalidInput(f"[load_settings] {path.name}: {exc}") from None
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise InvalidInput(f"[load_settings] {path.name}: top level must map section names to settings")

    out: Settings = {}
    for name, section in data.items():
        if section is None:
            section = {}
        if not isinstance(section, dict):
            raise InvalidInput(f"[load_settings] {path.name}: section {name!r} must be a mapping")
        out[str(name)] = dict(section)
    return out


def _merge_presets(base: Dict[str, Any], local: Dict[str, Any]) -> Dict[str, Any]:
    """
    families 병합: preset 단위로 필드를 덮어쓴다.
    local 에서 null 인 preset 은 빠지고, 새 preset 은 kind 가 있어야 한다.
    """
    out = {name: dict(fields) for name, fields in base.items()}
    for name, fields in local.items():
        if fields is None:
            out.pop(name, None)
            continue
        if not isinstance(fields, dict):
            raise InvalidInput(f"[load_settings] preset {name!r} must be a mapping")
        if name not in out and "kind" not in fields:
            raise InvalidInput(f"[load_settings] new preset {name!r} needs a kind")
        out[name] = {**out.get(name, {}), **fields}
    return out


def merge_settings(base: Settings, local: Settings) -> Settings:
    """
    local 이 base 를 덮어쓴다. 일반 section 은 key 단위, families 는 preset 단위.
    list 값은 통째로 교체된다. 입력은 바꾸지 않는다.
    """
    out: Settings = {name: dict(section) for name, section in base.items()}
    for name, section in local.items():
        if name == PRESET_SECTION:
            out[name] = _merge_presets(out.get(name, {}), section)
        else:
            out[name] = {**out.get(name, {}), **section}
    return out


def load_settings(config_dir: Optional[Path] = None) -> Settings:
    """
    기본 설정 (setting.yaml) + 로컬 오버라이드 (setting.local.yaml, 선택) 병합 로드.

    - setting.yaml: 레포에 커밋되는 기본값 (acceptance 프리셋 포함)
    - setting.local.yaml: 머신별 조정 (workers, 로그 레벨, preset 크기 등). 없으면 무시.
    """
    base_dir = config_dir or CONFIG_DIR
    settings = read_settings_file(base_dir / SETTINGS_FILE)

    local = base_dir / LOCAL_SETTINGS_FILE
    if local.exists():
        settings = merge_settings(settings, read_settings_file(local))
    return settings


def resolve_workers(settings: Optional[Dict[str, Any]] = None) -> int:
    """
    worker 수: 환경변수 HERMRANK_WORKERS > harness.workers > os.cpu_count().
    """
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InvalidInput(f"[resolve_workers] {WORKERS_ENV} must be an integer, got {env!r}") from None
        return max(value, 1)
    cfg = ((settings or {}).get("harness") or {}).get("workers")
    if cfg:
        return max(int(cfg), 1)
    return os.cpu_count() or 1
