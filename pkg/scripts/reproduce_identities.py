"""Re-run every identity check and print a one-line summary per target.

    python scripts/reproduce_identities.py --max-k 500 --workers 4
"""

import argparse
import time

from ptekit.paperseq import derive_H_forms, verify_closed_forms, verify_pell, verify_ramanujan, verify_theorem


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    runs = [
        ("theorem j=1..5", lambda: verify_theorem(args.max_k, workers=args.workers)),
        ("theorem j=6 (expected to fail)", lambda: verify_theorem(args.max_k, [6], workers=args.workers)),
        ("ramanujan", lambda: verify_ramanujan(args.max_k, workers=args.workers)),
        ("closed forms", lambda: verify_closed_forms(args.max_k, workers=args.workers)),
        ("pell", lambda: verify_pell(5 * args.max_k, workers=args.workers)),
        ("H forms", derive_H_forms),
    ]
    for name, run in runs:
        t0 = time.perf_counter()
        report = run()
        dt = time.perf_counter() - t0
        print(f"{name:32s} checked={report.checked:6d} deviations={len(report.deviations):5d} {dt:7.2f}s")


if __name__ == "__main__":
    main()
