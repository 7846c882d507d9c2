#!/usr/bin/env python3
"""Run every verification suite at its full desk-scale bound and print a
summary table.  Exit status is nonzero when any check fails.

Usage: python3 scripts/run_full_verification.py [--seed S] [--max-n N]
"""

import argparse
import sys
import time

from asmdpp.verify import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-n", type=int, default=None, dest="max_n")
    args = parser.parse_args()

    all_passed = True
    grand_total = 0
    started = time.perf_counter()
    for name in SUITES:
        t0 = time.perf_counter()
        report = run_suite(name, args.max_n, args.seed)
        elapsed = time.perf_counter() - t0
        failed = [c for c in report.checks if not c.passed]
        grand_total += len(report.checks)
        status = "ok" if not failed else f"{len(failed)} FAILED"
        print(f"{name:<10} {len(report.checks):>3} checks  {elapsed:7.2f}s  {status}")
        for c in failed:
            print(f"    FAIL {c.name} {c.params}")
        all_passed &= not failed
    print(
        f"\n{grand_total} checks in {time.perf_counter() - started:.1f}s: "
        + ("all passed" if all_passed else "FAILURES above")
    )
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
