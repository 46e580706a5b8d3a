"""Rank-two Nichols algebras over Q(z16), computed from scratch.

Each braiding is a 2x2 matrix of roots of unity.  The engine grows B(V)
degree by degree as a subalgebra of the quantum shuffle algebra and stops
once the running dimension passes the budget.
"""

from __future__ import annotations

from hopf32 import BraidingMatrix, nichols_dimensions, parse

BRAIDINGS = {
    "b1 (q = i)": "-1 -i; i -1",
    "b2": "-1 -1; 1 -1",
    "b3": "-1 1; i -1",
    "b4": "i i; -1 -1",
    "b5": "i -i; -1 -1",
    "b6 (k = 1)": "-1 1; x -1",
}


def matrix(text: str) -> BraidingMatrix:
    return BraidingMatrix([[parse(x) for x in row.split()] for row in text.split(";")])


if __name__ == "__main__":
    for name, text in BRAIDINGS.items():
        r = nichols_dimensions(matrix(text), with_nilpotency=True)
        print(f"{name:12} dim {str(r.total):8} series {r.hilbert}")
        print(f"{'':12} nilpotency {r.nilpotency}")

    # b4 is where the transcribed tables disagree (16 versus 64); the series
    # is palindromic and agrees with the symmetrizer ranks, so 16 stands.
    r = nichols_dimensions(matrix(BRAIDINGS["b4"]), dim_budget=200)
    print("\nb4 with a larger budget:", r.total, r.hilbert)
