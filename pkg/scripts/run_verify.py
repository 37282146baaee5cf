#!/usr/bin/env python3
"""Run every verification suite and print a one-line-per-suite table."""

import sys
import time

from kleinmackey import verify


def main():
    failed = False
    for name in sorted(verify.SUITES):
        start = time.time()
        report = verify.run_suite(name)
        status = "pass" if report.passed else "FAIL"
        print(f"{name:<20} {status:<5} {report.checked:>6} checked  "
              f"{time.time() - start:6.1f}s")
        if not report.passed:
            failed = True
            for line in report.failures[:10]:
                print(f"    {line}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
