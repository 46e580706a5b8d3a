"""Walking through the liftings over D4.

For each Nichols algebra of dimension 4 over D4 the engine writes the
deformed relations, runs the diamond lemma symbolically to find which
parameters are forced, and counts the remaining families up to rescaling.
"""

from __future__ import annotations

from hopf32 import classify_liftings, lifting_problem, run
from hopf32.golden import reference_labels
from hopf32.lifting import diamond_check

if __name__ == "__main__":
    R = run("D4")
    labels = reference_labels(R)
    for mc in R.algebras:
        P = lifting_problem(mc.module, mc.label)
        names = P.param_names()
        forced = sorted(names[k] for k in diamond_check(P).forced_zero())
        fam = classify_liftings(P)
        print(f"{labels.get(mc.label, mc.label)}: {mc.module.describe()}")
        for rel in fam.relations:
            print(f"    {rel}")
        print(f"    forced to zero: {forced or 'nothing'}; liftings: {fam.count}")
        for rep in fam.representatives:
            print(f"      {rep or 'all parameters 0'}")
    # Y7^3 gives 2 here where the reference table has 3: the lifted relation
    # s a^2 s = b^2 ties the two square parameters together.
    print(f"\ntotal over D4: {R.total}")
