import logging

import pytest

from hermrank.config import CONFIG_DIR, WORKERS_ENV, load_settings, merge_settings, read_settings_file, resolve_workers
from hermrank.errors import InvalidInput
from hermrank.utils.logging_utils import configure_logging, get_logger


def write(path, text):
    path.write_text(text, encoding="utf-8")
    return path


def test_repo_settings_load():
    settings = load_settings()
    assert (CONFIG_DIR / "setting.yaml").exists()
    for key in ("logging", "linalg", "spans", "harness", "report", "families"):
        assert key in settings
    assert settings["linalg"]["pivot"] in ("smallest", "first")
    assert settings["report"]["include_timing"] is False


def test_merge_settings_is_per_key_within_sections():
    base = {"spans": {"trials": 5, "retries": 3}, "logging": {"level": "INFO"}}
    out = merge_settings(base, {"spans": {"trials": 2}, "report": {"include_timing": True}})
    assert out == {
        "spans": {"trials": 2, "retries": 3},
        "logging": {"level": "INFO"},
        "report": {"include_timing": True},
    }
    assert base["spans"] == {"trials": 5, "retries": 3}


def test_merge_settings_overrides_presets_field_by_field():
    base = {
        "families": {
            "homo_c12": {"kind": "random-bihomogeneous", "n": 12, "count": 500, "signs": [-1, 1]},
            "general_c9": {"kind": "random-general", "n": 9, "count": 200},
        }
    }
    local = {
        "families": {
            "homo_c12": {"count": 20, "signs": [1]},
            "general_c9": None,
            "tiny": {"kind": "random-general", "n": 3, "count": 2},
        }
    }
    fams = merge_settings(base, local)["families"]
    assert fams["homo_c12"] == {"kind": "random-bihomogeneous", "n": 12, "count": 20, "signs": [1]}
    assert "general_c9" not in fams
    assert fams["tiny"]["n"] == 3
    assert base["families"]["homo_c12"]["count"] == 500


def test_new_preset_needs_kind():
    with pytest.raises(InvalidInput, match="needs a kind"):
        merge_settings({"families": {}}, {"families": {"tiny": {"n": 3}}})
    with pytest.raises(InvalidInput):
        merge_settings({"families": {}}, {"families": {"tiny": [1, 2]}})


def test_local_override(tmp_path):
    write(tmp_path / "setting.yaml", "harness:\n  workers: null\n  coeff_range: 3\nspans:\n  trials: 5\n")
    write(tmp_path / "setting.local.yaml", "harness:\n  workers: 4\n")
    settings = load_settings(tmp_path)
    assert settings["harness"] == {"workers": 4, "coeff_range": 3}
    assert settings["spans"]["trials"] == 5


def test_local_preset_override(tmp_path):
    write(tmp_path / "setting.yaml", "families:\n  smoke:\n    kind: random-general\n    n: 4\n    count: 8\n")
    write(tmp_path / "setting.local.yaml", "families:\n  smoke:\n    count: 2\n")
    assert load_settings(tmp_path)["families"]["smoke"] == {"kind": "random-general", "n": 4, "count": 2}


def test_section_must_be_mapping(tmp_path):
    write(tmp_path / "setting.yaml", "spans: 5\nharness:\n")
    with pytest.raises(InvalidInput, match="'spans'"):
        read_settings_file(tmp_path / "setting.yaml")
    write(tmp_path / "setting.yaml", "spans: [1\n")
    with pytest.raises(InvalidInput):
        load_settings(tmp_path)
    write(tmp_path / "setting.yaml", "harness:\n")
    assert load_settings(tmp_path) == {"harness": {}}


def test_missing_and_malformed_settings(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_settings(tmp_path)
    write(tmp_path / "setting.yaml", "- just\n- a list\n")
    with pytest.raises(ValueError):
        load_settings(tmp_path)


def test_empty_settings_file(tmp_path):
    write(tmp_path / "setting.yaml", "")
    assert load_settings(tmp_path) == {}


def test_resolve_workers(monkeypatch):
    monkeypatch.delenv(WORKERS_ENV, raising=False)
    assert resolve_workers({"harness": {"workers": 3}}) == 3
    assert resolve_workers({"harness": {"workers": None}}) >= 1
    assert resolve_workers(None) >= 1

    monkeypatch.setenv(WORKERS_ENV, "6")
    assert resolve_workers({"harness": {"workers": 3}}) == 6
    monkeypatch.setenv(WORKERS_ENV, "0")
    assert resolve_workers() == 1
    monkeypatch.setenv(WORKERS_ENV, "many")
    with pytest.raises(ValueError):
        resolve_workers()


def test_logging_levels():
    configure_logging({"logging": {"level": "warning"}})
    assert logging.getLogger("hermrank").level == logging.WARNING
    configure_logging({"logging": {"level": "warning"}}, verbose=True)
    assert logging.getLogger("hermrank").level == logging.DEBUG
    assert get_logger("spans.checks").name == "hermrank.spans.checks"
    assert get_logger("hermrank.main").name == "hermrank.main"
    configure_logging({})
    assert logging.getLogger("hermrank").level == logging.INFO
