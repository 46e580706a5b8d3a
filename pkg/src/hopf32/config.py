"""Engine settings: defaults, an optional JSON file, then environment overrides.

Keys: ``degree_cap`` and ``dim_budget`` bound the Nichols growth,
``thread_count`` sets the worker pool used by a classification run and
``format`` is the default output format of the command line (``md`` or
``json``).  The file is looked up at ``$HOPF32_CONFIG`` or ``./hopf32.json``;
each key can be overridden by ``HOPF32_<KEY>`` in the environment.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

DEFAULTS: dict[str, object] = {
    "degree_cap": 20,
    "dim_budget": 33,
    "thread_count": 1,
    "format": "md",
}

_INT_KEYS = ("degree_cap", "dim_budget", "thread_count")


def _check(cfg: dict[str, object]) -> dict[str, object]:
    unknown = set(cfg) - set(DEFAULTS)
    if unknown:
        raise ValueError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for k in _INT_KEYS:
        v = int(cfg[k])  # type: ignore[call-overload]
        if v < 1:
            raise ValueError(f"{k} must be positive")
        cfg[k] = v
    if cfg["format"] not in ("md", "json"):
        raise ValueError("format must be 'md' or 'json'")
    return cfg


def load_config(path: str | os.PathLike | None = None, env: dict[str, str] | None = None) -> dict[str, object]:
    env = dict(os.environ) if env is None else env
    cfg = dict(DEFAULTS)
    if path is None:
        path = env.get("HOPF32_CONFIG")
        if path is None and Path("hopf32.json").is_file():
            path = "hopf32.json"
    if path is not None:
        with open(path, encoding="utf-8") as fh:
            cfg.update(json.load(fh))
    for k in DEFAULTS:
        v = env.get(f"HOPF32_{k.upper()}")
        if v is not None:
            cfg[k] = v
    return _check(cfg)
