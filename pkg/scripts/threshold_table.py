"""Compare the guaranteed threshold k * P_2k with the least n past which f(n) >= k.

    python scripts/threshold_table.py --kmax 6
"""

import argparse
import time

from coprime_ap.bounds import guaranteed_threshold, minimal_threshold
from coprime_ap.config import get_limits


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args()

    print(f"{'k':>3} {'P_2k':>12} {'n_k':>14} {'minimal':>9} {'last fail':>10} {'secs':>7}")
    for k in range(1, args.kmax + 1):
        rec = guaranteed_threshold(k)
        if rec.guaranteed > get_limits().solver_limit:
            print(f"{k:>3} {rec.primorial:>12} {rec.guaranteed:>14} {'-':>9} {'-':>10}")
            continue
        t0 = time.perf_counter()
        rec = minimal_threshold(k)
        last = "none" if rec.last_failing is None else rec.last_failing
        print(f"{k:>3} {rec.primorial:>12} {rec.guaranteed:>14} {rec.minimal:>9} {last:>10} "
              f"{time.perf_counter() - t0:>7.2f}")


if __name__ == "__main__":
    main()
