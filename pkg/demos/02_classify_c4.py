"""Classifying the 32-dimensional pointed Hopf algebras over C4.

The budget is 32 / 4 = 8.  Candidate modules are sums of simple YD modules,
grouped into Aut(C4) orbits and pruned by a cheap lower bound; surviving
orbits get their Nichols dimension, and those hitting 8 exactly go on to the
lifting step.
"""

from __future__ import annotations

from hopf32 import emit_tables, run
from hopf32.golden import reference_labels

if __name__ == "__main__":
    R = run("C4")
    print(f"group C4, budget {R.budget}, {len(R.irreducibles)} simple modules")
    for rank, cs in sorted(R.classes.items()):
        print(f"rank {rank}: {len(cs)} orbits under the lower bound")
    print()
    print(emit_tables(R, "md", reference_labels(R)))
    print(f"isomorphism classes: {R.total}")
