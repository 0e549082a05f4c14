#!/usr/bin/env python3
"""Replay the known-results suites and print the report table.

Exit status is 0 when every row passes (SKIPPED rows count as passing,
they are capped instances, not wrong ones) and 1 otherwise.
"""

import argparse
import sys

from vislab.theorems import SUITES, format_reports, format_reports_machine, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all", choices=list(SUITES))
    ap.add_argument("--machine", action="store_true",
                    help="tab-separated rows instead of the aligned table")
    ns = ap.parse_args()

    reports = run_suite(ns.suite)
    if ns.machine:
        sys.stdout.write(format_reports_machine(reports))
    else:
        sys.stdout.write(format_reports(reports))

    fails = sum(1 for r in reports if r.status == "fail")
    skips = sum(1 for r in reports if r.status == "SKIPPED")
    total = len(reports)
    print(
        f"{total} checks: {total - fails - skips} passed, "
        f"{skips} skipped, {fails} failed",
        file=sys.stderr,
    )
    return 1 if fails else 0


if __name__ == "__main__":
    raise SystemExit(main())
