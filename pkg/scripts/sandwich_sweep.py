"""Sweep f(n) over a range and summarize how often each closed-form bound is tight.

    python scripts/sandwich_sweep.py --max 100000 --csv sweep.csv
"""

import argparse
import time

from coprime_ap.bounds import bounds_report, verify_range
from coprime_ap.records import OutputRecord, csv_header


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=2)
    ap.add_argument("--max", type=int, default=100_000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv", help="also write one record per n to this file")
    args = ap.parse_args()

    t0 = time.perf_counter()
    summary = verify_range(args.min, args.max, workers=args.workers)
    elapsed = time.perf_counter() - t0
    both = sorted(set(summary.tight_lower) & set(summary.tight_upper))
    print(f"range [{args.min}, {args.max}]: {summary.checked} values in {elapsed:.1f}s")
    print(f"violations        {len(summary.violations)}")
    print(f"lower tight       {len(summary.tight_lower)} ({len(summary.tight_lower) / summary.checked:.2%})")
    print(f"upper tight       {len(summary.tight_upper)} ({len(summary.tight_upper) / summary.checked:.2%})")
    print(f"both tight        {len(both)}")
    tight = set(summary.tight_lower) | set(summary.tight_upper)
    inside = [n for n in range(args.min, args.max + 1) if n not in tight]
    print(f"strictly inside   {len(inside)}  (first few: {inside[:10]})")

    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(csv_header() + "\n")
            for n in range(args.min, args.max + 1):
                r = bounds_report(n, with_exact=True)
                fh.write(OutputRecord.from_witness(r.witness, r.lower, r.upper).to_csv() + "\n")
        print(f"wrote {args.csv}")


if __name__ == "__main__":
    main()
