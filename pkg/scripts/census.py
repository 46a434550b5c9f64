#!/usr/bin/env python3
"""Print the number of triples up to isomorphism next to the published table.

    python scripts/census.py --max-n 10 [--jobs 4] [--oracle]

--oracle also counts by an independent brute force over all partial
injective maps (slow past n = 7).
"""
import argparse
import time
from itertools import combinations, permutations

import networkx as nx
import numpy as np

from ggs.bd_triples import enumerate_all, enumerate_canonical

TABLE = {2: 1, 3: 2, 4: 4, 5: 13, 6: 41, 7: 161, 8: 611, 9: 2490, 10: 10434,
         11: 45069, 12: 201300, 13: 919479}


def brute_orbits(n):
    eye = np.eye(n, dtype=int)
    alpha = {i: eye[i - 1] - eye[i] for i in range(1, n)}
    maps = set()
    for m in range(n):
        for dom in combinations(range(1, n), m):
            for img in permutations(range(1, n), m):
                d = dict(zip(dom, img))
                if any(alpha[d[a]] @ alpha[d[b]] != alpha[a] @ alpha[b] for a in dom for b in dom):
                    continue
                g = nx.DiGraph(list(d.items()))
                if nx.is_directed_acyclic_graph(g):
                    maps.add(frozenset(d.items()))
    seen, orbits = set(), 0
    for d in maps:
        if d in seen:
            continue
        orbits += 1
        refl = frozenset((n - s, n - t) for s, t in d)
        for x in (d, refl):
            seen.add(x)
            seen.add(frozenset((t, s) for s, t in x))
    return len(maps), orbits


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle", action="store_true")
    args = p.parse_args()
    print(f"{'n':>3} {'all':>9} {'up to iso':>10} {'table':>8}  seconds")
    for n in range(2, args.max_n + 1):
        t0 = time.time()
        count = enumerate_canonical(n, jobs=args.jobs).count
        total = len(enumerate_all(n)) if n <= 11 else float("nan")
        line = f"{n:>3} {total:>9} {count:>10} {TABLE.get(n, '-'):>8}  {time.time() - t0:.1f}"
        if args.oracle and n <= 7:
            line += f"  brute force: {brute_orbits(n)}"
        print(line, flush=True)


if __name__ == "__main__":
    main()
