"""Command line: enumerate / count / construct / verify."""
import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .bd_triples import BDTriple, TripleCatalog, enumerate_canonical, is_valid_triple
from .errors import InputError
from .r0_solver import format_tensor, r0_tilde
from .r_matrix import build_R
from .verifier import bump_first_entry, verify_triple

MAX_N = 13
JOBS_ENV = "GGS_JOBS"


class UsageError(Exception):
    pass


def default_jobs():
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _check_n(args):
    if args.n < 2:
        raise UsageError(f"--n must be at least 2 (got {args.n})")
    if args.n > MAX_N and not args.allow_large:
        raise UsageError(f"--n {args.n} exceeds {MAX_N}; pass --allow-large to override")


def parse_triple(n, text):
    try:
        pairs = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"triple literal is not JSON: {exc}")
    if not isinstance(pairs, list) or not all(
            isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
            for p in pairs):
        raise UsageError(f"triple literal must be a list of [source, target] pairs: {text}")
    try:
        t = BDTriple.from_pairs(n, pairs)
    except InputError as exc:
        raise UsageError(str(exc))
    if not is_valid_triple(t):
        raise UsageError(f"not a Belavin-Drinfeld triple: {text}")
    return t


def _catalog(args):
    if getattr(args, "catalog", None):
        cat = TripleCatalog.load(args.catalog)
        if cat.n != args.n:
            raise UsageError(f"catalog is for n={cat.n}, not {args.n}")
        return cat
    return enumerate_canonical(args.n, jobs=args.jobs)


def _selection(args):
    if args.triple is not None and args.triple_index is not None:
        raise UsageError("give at most one of --triple and --triple-index")
    if args.triple is not None:
        return [parse_triple(args.n, args.triple)]
    cat = _catalog(args)
    if args.triple_index is not None:
        if not 0 <= args.triple_index < cat.count:
            raise UsageError(f"--triple-index must be in [0, {cat.count})")
        return [cat[args.triple_index]]
    return cat.triples


def cmd_enumerate(args, out=sys.stdout, write=True):
    _check_n(args)
    cat = enumerate_canonical(args.n, jobs=args.jobs)
    if write:
        path = args.out or f"catalog_n{args.n}.json"
        cat.dump(path)
    print(cat.count, file=out)
    return 0


def cmd_count(args, out=sys.stdout):
    return cmd_enumerate(args, out, write=False)


def cmd_construct(args, out=sys.stdout):
    _check_n(args)
    if args.triple is None and args.triple_index is None:
        raise UsageError("construct needs --triple or --triple-index")
    (t,) = _selection(args)
    r = r0_tilde(t)
    R = build_R(t, r)
    print(f"triple: {json.dumps(t.pairs())}", file=out)
    print("r0:", file=out)
    for row in format_tensor(r):
        print("  " + " ".join(row), file=out)
    print(f"R: {len(R)} entries (i j k l : r)", file=out)
    for line in R.lines():
        print("  " + line, file=out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump({"n": t.n, "triple": t.pairs(), "r0": format_tensor(r),
                       "R": R.to_json()}, fh)
            fh.write("\n")
    return 0


def _verify_one(t, dense, verbose, fault):
    perturb = bump_first_entry if fault else None
    return verify_triple(t, dense=dense, verbose=verbose, perturb=perturb)


def run_batch(triples, jobs=1, dense=False, verbose=False, fault=False):
    """Reports in input order whatever the worker count."""
    work = partial(_verify_one, dense=dense, verbose=verbose, fault=fault)
    if jobs <= 1 or len(triples) <= 1:
        return [work(t) for t in triples]
    chunk = max(1, len(triples) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(work, triples, chunksize=chunk))


def summarize(n, reports):
    passed = sum(r.passed for r in reports)
    return {"n": n, "total": len(reports), "passed": passed, "failed": len(reports) - passed}


def cmd_verify(args, out=sys.stdout):
    _check_n(args)
    triples = _selection(args)
    reports = run_batch(triples, args.jobs, args.dense_oracle, args.verbose, args.inject_fault)
    summary = summarize(args.n, reports)
    path = args.out or f"report_n{args.n}.json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"summary": summary, "records": [r.to_json() for r in reports]}, fh, indent=1)
        fh.write("\n")
    if args.verbose:
        for r in reports:
            if not r.passed:
                print(f"FAIL {json.dumps(r.triple.pairs())}: {json.dumps(r.to_json(timing=False))}",
                      file=out)
    print("n={n} total={total} passed={passed} failed={failed}".format(**summary), file=out)
    if any(r.error for r in reports):
        return 2
    return 0 if summary["failed"] == 0 else 1


def build_parser():
    p = argparse.ArgumentParser(prog="ggs", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--jobs", type=int, default=default_jobs())
        sp.add_argument("--allow-large", action="store_true",
                        help=f"permit n > {MAX_N}")

    sp = sub.add_parser("enumerate", help="write the canonical catalog and print its size")
    common(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("count", help="print the number of triples up to isomorphism")
    common(sp)
    sp.set_defaults(func=cmd_count)

    for name, func, hlp in (("construct", cmd_construct, "print r0 and R for one triple"),
                            ("verify", cmd_verify, "check QYBE and Hecke, write a report")):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--triple-index", type=int)
        sp.add_argument("--triple", help="inline triple, e.g. '[[1,2]]'")
        sp.add_argument("--catalog", help="read triples from a catalog file")
        sp.add_argument("--out")
        sp.add_argument("--verbose", action="store_true")
        sp.set_defaults(func=func)
        if name == "verify":
            sp.add_argument("--dense-oracle", action="store_true",
                            help="cross-check against dense matrices (n <= 4)")
            sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
