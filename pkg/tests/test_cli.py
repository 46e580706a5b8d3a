"""Command line interface."""

from __future__ import annotations

import json

import pytest

from hopf32.cli import main, parse_matrix
from hopf32.cyclotomic import parse
from hopf32.ydmod import BraidingMatrix


def test_parse_matrix():
    """[TRIVIAL] rows split on ';', entries on commas or blanks."""
    assert parse_matrix("-1, 1; x, -1") == BraidingMatrix([[-1, 1], [parse("x"), -1]])
    assert parse_matrix("[i i]; [-1 -1]").dim == 2
    with pytest.raises(ValueError):
        parse_matrix("1, 2; 3")


def test_nichols_command(capsys):
    """[PAPER] b6 has dimension 32."""
    assert main(["nichols", "--matrix", "-1, 1; x, -1"]) == 0
    out = capsys.readouterr().out
    assert "dim B(V): 32" in out and "|Ad_x(y)| = 8" in out


def test_nichols_json(capsys):
    """[PAPER] b2 has dimension 8, in JSON."""
    assert main(["nichols", "--matrix", "-1 -1; 1 -1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["total"] == 8 and doc["hilbert"] == [1, 2, 2, 2, 1]


def test_classify_command(capsys):
    """[TRIVIAL] markdown output for H lists both reference labels."""
    assert main(["classify", "--group", "H"]) == 0
    out = capsys.readouterr().out
    assert "Y8^1" in out and "total: 3" in out


def test_classify_json(capsys):
    """[TRIVIAL] JSON output for C4 carries the total."""
    assert main(["classify", "--group", "C4", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["total"] == 12


def test_liftings_by_reference_label(capsys):
    """[PAPER] W3^2 over C4 has six liftings."""
    assert main(["liftings", "--group", "C4", "--module", "W3^2"]) == 0
    assert "liftings up to isomorphism: 6" in capsys.readouterr().out


def test_liftings_unknown_module(capsys):
    """[TRIVIAL] an unknown label exits with status 2."""
    assert main(["liftings", "--group", "C4", "--module", "nope"]) == 2


def test_check_exit_codes(capsys):
    """[TRIVIAL] 0 when every comparison passes, 1 on a mismatch."""
    assert main(["check", "--group", "C4"]) == 0
    assert main(["check", "--group", "D4"]) == 1
    assert "D4 / total" in capsys.readouterr().out


def test_bad_group(capsys):
    """[TRIVIAL] unknown groups are reported, not raised."""
    assert main(["classify", "--group", "Q32"]) == 2


def test_config_from_file(tmp_path, capsys):
    """[TRIVIAL] a config file sets the default output format."""
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"format": "json"}))
    assert main(["--config", str(cfg), "nichols", "--matrix", "-1"]) == 0
    assert json.loads(capsys.readouterr().out)["total"] == 2
