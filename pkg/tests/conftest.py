from __future__ import annotations

import functools

import pytest
from hypothesis import settings, strategies as st

from hopf32.classify import run
from hopf32.cyclotomic import CycScalar
from hopf32.golden import load_golden, module_from_spec
from hopf32.groups import catalogue

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def cyc(draw, den=st.integers(min_value=1, max_value=4)) -> CycScalar:
    return CycScalar([draw(small_ints) for _ in range(8)], draw(den))


roots = st.integers(min_value=0, max_value=15).map(CycScalar.zeta)


@functools.lru_cache(maxsize=None)
def cached_run(gid: str):
    return run(gid)


@functools.lru_cache(maxsize=None)
def golden() -> dict:
    return load_golden()


def golden_row(gid: str, label: str) -> dict:
    for t in golden()["groups"][gid]["tables"]:
        for r in t["rows"]:
            if r["label"] == label:
                return r
    raise KeyError(label)


def golden_module(gid: str, label: str):
    return module_from_spec(catalogue(gid), golden_row(gid, label)["summands"])


def table_modules():
    """Every module named by a reference row, as (group, label, module)."""
    out = []
    for gid, entry in golden()["groups"].items():
        G = catalogue(gid)
        for t in entry["tables"]:
            for r in t["rows"]:
                out.append((gid, r["label"], module_from_spec(G, r["summands"])))
    return out


@pytest.fixture(scope="session")
def runs():
    return cached_run
