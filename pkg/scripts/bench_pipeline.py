#!/usr/bin/env python3
"""Sweep the staged-pipeline benchmark over a range of limits.

Prints one row per limit with both wall-clock timings and the survivor
fraction, and can dump the raw reports as JSON lines for later plotting.
"""

import argparse
import json
import sys

from quasiprime import shell


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--limits",
        type=int,
        nargs="+",
        default=[10**4, 10**5, 5 * 10**5],
        help="range limits to benchmark",
    )
    parser.add_argument("--jsonl", help="append one JSON report per limit to this file")
    args = parser.parse_args()

    print(f"{'limit':>10} {'pipeline_s':>11} {'trial_s':>9} {'primes':>8} {'fraction':>9}")
    for limit in args.limits:
        report = shell.bench(limit)
        print(
            f"{report.limit:>10} {report.pipeline_seconds:>11.3f} "
            f"{report.trial_division_seconds:>9.3f} {report.primes_found:>8} "
            f"{report.fraction:>9.4f}"
        )
        if args.jsonl:
            with open(args.jsonl, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(report.to_json_dict()) + "\n")
    print(f"note: {report.notes}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
