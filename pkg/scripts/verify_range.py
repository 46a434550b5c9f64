#!/usr/bin/env python3
"""Verify every canonical triple for a range of n and print one line per n.

    python scripts/verify_range.py --min-n 2 --max-n 8 --jobs 4
"""
import argparse
import time

from ggs.bd_triples import enumerate_canonical
from ggs.cli import run_batch, summarize


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()
    failed = 0
    for n in range(args.min_n, args.max_n + 1):
        t0 = time.time()
        reports = run_batch(enumerate_canonical(n, jobs=args.jobs).triples, jobs=args.jobs)
        s = summarize(n, reports)
        failed += s["failed"]
        print("n={n} total={total} passed={passed} failed={failed}".format(**s),
              f"({time.time() - t0:.1f}s)", flush=True)
        for r in reports:
            if not r.passed:
                print("  FAIL", r.triple.pairs(), r.to_json(timing=False).get("witness"))
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
