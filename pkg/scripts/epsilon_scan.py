#!/usr/bin/env python3
"""Which constants occur in epsilon = ac + ca + a^2, over all triples of each n."""
import argparse

from ggs.bd_triples import enumerate_all
from ggs.r_matrix import build_a, build_c, build_epsilon


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=6)
    args = p.parse_args()
    for n in range(2, args.max_n + 1):
        everywhere, on_a = set(), set()
        for t in enumerate_all(n):
            a = build_a(t)
            eps = build_epsilon(a, build_c(n))
            everywhere |= {v.constant_value() for _, v in eps.items()}
            on_a |= {eps[k].constant_value() for k in a.keys()}
        fmt = lambda s: " ".join(str(x) for x in sorted(s))
        print(f"n={n}  all entries: {fmt(everywhere)}  |  on support of a: {fmt(on_a)}")


if __name__ == "__main__":
    main()
