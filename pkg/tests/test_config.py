"""Configuration loading."""

from __future__ import annotations

import json

import pytest

from hopf32.config import DEFAULTS, load_config


def test_defaults(tmp_path, monkeypatch):
    """[TRIVIAL] without file or environment the defaults apply."""
    monkeypatch.chdir(tmp_path)
    assert load_config(env={}) == DEFAULTS


def test_file_then_env(tmp_path):
    """[TRIVIAL] environment values override the file."""
    p = tmp_path / "h.json"
    p.write_text(json.dumps({"degree_cap": 12, "thread_count": 2}))
    cfg = load_config(env={"HOPF32_CONFIG": str(p), "HOPF32_THREAD_COUNT": "3"})
    assert cfg["degree_cap"] == 12 and cfg["thread_count"] == 3 and cfg["dim_budget"] == 33


@pytest.mark.parametrize("bad", [{"colour": 1}, {"degree_cap": 0}, {"format": "xml"}])
def test_rejects(tmp_path, bad):
    """[TRIVIAL] unknown keys, nonpositive integers and unknown formats are errors."""
    p = tmp_path / "h.json"
    p.write_text(json.dumps(bad))
    with pytest.raises(ValueError):
        load_config(p, env={})
