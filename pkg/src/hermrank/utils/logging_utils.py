# src/hermrank/utils/logging_utils.py
"""
콘솔 로그를 `[모듈] 메시지` 형태로 통일한다.

- 결과(JSON, 표)는 stdout, 로그는 stderr 로 분리
- level 은 setting.yaml 의 logging.level (CLI -v 이면 DEBUG)
"""
from __future__ import annotations

import logging
import sys
from typing import Any, Dict, Optional

_ROOT = "hermrank"
_handler: Optional[logging.StreamHandler] = None


class _ShortNameFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        # hermrank.harness.verification -> verification
        record.short_name = record.name.rsplit(".", 1)[-1]
        return super().format(record)


def get_logger(name: str) -> logging.Logger:
    if not name.startswith(_ROOT):
        name = f"{_ROOT}.{name}"
    return logging.getLogger(name)


def configure_logging(settings: Optional[Dict[str, Any]] = None, *, verbose: bool = False) -> None:
    global _handler
    cfg = (settings or {}).get("logging") or {}
    level_name = "DEBUG" if verbose else str(cfg.get("level", "INFO")).upper()
    fmt = str(cfg.get("format", "[%(short_name)s] %(message)s"))

    root = logging.getLogger(_ROOT)
    root.setLevel(getattr(logging, level_name, logging.INFO))
    if _handler is None:
        _handler = logging.StreamHandler(sys.stderr)
        root.addHandler(_handler)
    else:
        # 호출 시점의 sys.stderr 로 다시 묶는다
        _handler.setStream(sys.stderr)
    _handler.setFormatter(_ShortNameFormatter(fmt))
