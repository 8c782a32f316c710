#!/usr/bin/env python
"""Run every verification suite plus the bound table and print a summary.

Exits nonzero if any suite fails or the table's three evaluations ever
disagree.  The heavy suite is the exhaustive worst-case search at n=10;
the whole run stays around half a minute.
"""

import sys
import time

from bubblecross import bounds, verify
from bubblecross.config import DEFAULT_SEED


def main() -> int:
    failures = 0
    for name in sorted(verify.SUITES):
        start = time.time()
        report = verify.run_suite(name, seed=DEFAULT_SEED)
        for line in report.lines:
            print(line)
        print(f"{name}: {'ok' if report.passed else 'FAILED'} in {time.time() - start:.1f}s")
        failures += 0 if report.passed else 1

    rows = bounds.bound_table(30)
    print(f"bounds: triple equality holds for n=7..{rows[-1].n}")
    print(f"bounds: n=7 {rows[0].bound}, n=8 {rows[1].bound}, "
          f"n=30 has {len(str(rows[-1].bound))} digits")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
