"""Exact arithmetic engine for the classification of pointed Hopf algebras of dimension 32.

Layers, bottom to top: ``cyclotomic`` (the field Q(zeta16)), ``groups``
(finite groups from presentations), ``ydmod`` (Yetter-Drinfeld modules and
their braidings), ``nichols`` (Nichols algebras by quantum shuffles),
``lifting`` (deformations checked by the diamond lemma) and ``classify``
(the group-by-group run).
"""

from __future__ import annotations

from .classify import ClassificationRun, emit_tables, run
from .cyclotomic import CycScalar, parse, pretty
from .groups import FinGroup, catalogue
from .lifting import classify_liftings, lifting_problem
from .nichols import nichols_dimensions
from .ydmod import BraidingMatrix, YDModule, direct_sum, simple_module

__version__ = "0.1.0"

__all__ = [
    "BraidingMatrix", "ClassificationRun", "CycScalar", "FinGroup", "YDModule",
    "catalogue", "classify_liftings", "direct_sum", "emit_tables", "lifting_problem",
    "nichols_dimensions", "parse", "pretty", "run", "simple_module",
]
