"""Checking every group against the transcribed reference tables.

Entries marked inconsistent in the data (the source disagrees with itself)
are reported as annotated; anything else that differs is a mismatch.
"""

from __future__ import annotations

from hopf32.golden import check_golden

if __name__ == "__main__":
    rep = check_golden()
    for f in rep.annotated + rep.mismatches:
        print(f.line())
    print()
    print(rep.summary())
