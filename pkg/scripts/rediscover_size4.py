"""Search for ideal size-4 solutions and show how their count grows with the bound.

    python scripts/rediscover_size4.py --bounds 11 20 40 56 --workers 4
"""

import argparse
import time

from ptekit.search import SearchSpec, find_ideal


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bounds", type=int, nargs="+", default=[11, 20, 40, 56])
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    for bound in args.bounds:
        t0 = time.perf_counter()
        pairs = find_ideal(SearchSpec(4, bound, 3), workers=args.workers)
        reduced = [p for p in pairs if min(p.A.values[0], p.B.values[0]) == 0]
        dt = time.perf_counter() - t0
        print(f"bound={bound:3d} pairs={len(pairs):5d} translation-reduced={len(reduced):4d} {dt:6.2f}s")
        if pairs:
            first = pairs[0]
            print(f"    first: {first.A.values} / {first.B.values}")


if __name__ == "__main__":
    main()
