"""Belavin-Drinfeld triples of type A_{n-1}.

A triple is stored as ``tau``: a tuple of length n-1 where ``tau[i-1]`` is the
image of simple root index i, or 0 when alpha_i is not in Gamma_1.  Gamma_1 and
Gamma_2 are derived from it.
"""
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InputError

UNDEFINED = 0


@dataclass(frozen=True, order=True)
class BDTriple:
    n: int
    tau: tuple

    def __post_init__(self):
        if self.n < 2:
            raise InputError(f"n must be >= 2, got {self.n}")
        tau = tuple(int(x) for x in self.tau)
        object.__setattr__(self, "tau", tau)
        if len(tau) != self.n - 1:
            raise InputError(f"tau must have length {self.n - 1}, got {len(tau)}")
        for x in tau:
            if not 0 <= x <= self.n - 1:
                raise InputError(f"tau value {x} out of range for n={self.n}")
        images = [x for x in tau if x]
        if len(set(images)) != len(images):
            raise InputError(f"tau is not injective: {tau}")

    @classmethod
    def empty(cls, n):
        return cls(n, (UNDEFINED,) * (n - 1))

    @classmethod
    def from_pairs(cls, n, pairs):
        tau = [UNDEFINED] * (n - 1)
        for pair in pairs:
            if len(pair) != 2:
                raise InputError(f"expected [source, target] pair, got {pair!r}")
            s, t = (int(v) for v in pair)
            if not (1 <= s <= n - 1 and 1 <= t <= n - 1):
                raise InputError(f"pair {pair!r} out of range for n={n}")
            if tau[s - 1]:
                raise InputError(f"source {s} given twice")
            tau[s - 1] = t
        return cls(n, tuple(tau))

    def pairs(self):
        return [[i, t] for i, t in enumerate(self.tau, 1) if t]

    def __call__(self, i):
        """Image of simple root index i, or 0 when i is not in Gamma_1."""
        return self.tau[i - 1]

    @property
    def gamma1(self):
        return frozenset(i for i, t in enumerate(self.tau, 1) if t)

    @property
    def gamma2(self):
        return frozenset(t for t in self.tau if t)

    def __str__(self):
        body = ", ".join(f"{s}->{t}" for s, t in self.pairs())
        return f"BD(n={self.n}; {{{body}}})"


def inner_product(i, j, n):
    """Inner product of simple roots alpha_i, alpha_j of A_{n-1}."""
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise InputError(f"root indices ({i}, {j}) out of range for n={n}")
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def is_nilpotent(t):
    for i in t.gamma1:
        x = i
        for _ in range(t.n):
            x = t(x)
            if not x:
                break
        else:
            return False
    return True


def is_valid_triple(t):
    dom = sorted(t.gamma1)
    for a, i in enumerate(dom):
        for j in dom[a:]:
            if inner_product(t(i), t(j), t.n) != inner_product(i, j, t.n):
                return False
    return is_nilpotent(t)


def runs(indices):
    """Split a sorted index set into maximal runs of consecutive integers."""
    out = []
    for i in sorted(indices):
        if out and out[-1][-1] == i - 1:
            out[-1].append(i)
        else:
            out.append([i])
    return [tuple(r) for r in out]


def _triples_for_domain(n, dom):
    src_runs = runs(dom)
    # place longer runs first: fewer targets, earlier pruning
    order = sorted(range(len(src_runs)), key=lambda r: -len(src_runs[r]))
    tau = [UNDEFINED] * (n - 1)
    used = [False] * (n + 1)  # used[j]: target index j taken
    found = []

    def free(lo, hi):
        # targets lo..hi unused and not adjacent to another run's image
        if used[lo - 1] or used[hi + 1]:
            return False
        return not any(used[lo:hi + 1])

    def place(r):
        if r == len(order):
            t = BDTriple(n, tuple(tau))
            if is_nilpotent(t):
                found.append(t)
            return
        run = src_runs[order[r]]
        L = len(run)
        for lo in range(1, n - L + 1):
            hi = lo + L - 1
            if not free(lo, hi):
                continue
            targets = list(range(lo, hi + 1))
            orientations = [targets] if L == 1 else [targets, targets[::-1]]
            for tg in orientations:
                for s, g in zip(run, tg):
                    tau[s - 1] = g
                for g in targets:
                    used[g] = True
                place(r + 1)
                for g in targets:
                    used[g] = False
            for s in run:
                tau[s - 1] = UNDEFINED

    place(0)
    found.sort()
    return found


def _domains(n):
    idx = range(1, n)
    for m in range(n):
        for dom in combinations(idx, m):
            yield dom


def enumerate_all(n):
    """Every valid triple for A_{n-1} (not reduced by isomorphism)."""
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    out = []
    for dom in sorted(_domains(n)):
        out.extend(_triples_for_domain(n, dom))
    return out


def reflect(t):
    """Isomorphism (a): relabel alpha_m <-> alpha_{n-m}."""
    n = t.n
    tau = [UNDEFINED] * (n - 1)
    for m in range(1, n):
        src = t(n - m)
        if src:
            tau[m - 1] = n - src
    return BDTriple(n, tuple(tau))


def invert(t):
    """Isomorphism (b): (tau^-1, Gamma_2, Gamma_1)."""
    tau = [UNDEFINED] * (t.n - 1)
    for s, g in t.pairs():
        tau[g - 1] = s
    return BDTriple(t.n, tuple(tau))


def orbit(t):
    a = reflect(t)
    return {t, a, invert(t), invert(a)}


def canonical_form(t):
    if not is_valid_triple(t):
        raise InputError(f"not a Belavin-Drinfeld triple: {t}")
    return min(orbit(t))


def _canonical_shard(args):
    n, doms = args
    reps = set()
    for dom in doms:
        for t in _triples_for_domain(n, dom):
            reps.add(min(orbit(t)))
    return reps


@dataclass
class TripleCatalog:
    n: int
    triples: list = field(default_factory=list)

    @property
    def count(self):
        return len(self.triples)

    def __len__(self):
        return len(self.triples)

    def __getitem__(self, i):
        return self.triples[i]

    def to_json(self):
        return {"n": self.n, "count": self.count,
                "triples": [t.pairs() for t in self.triples]}

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])
        triples = [BDTriple.from_pairs(n, p) for p in data["triples"]]
        cat = cls(n, triples)
        if "count" in data and int(data["count"]) != cat.count:
            raise InputError(f"catalog count {data['count']} != {cat.count} triples")
        return cat

    def dump(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json(), fh)
            fh.write("\n")

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def enumerate_canonical(n, jobs=1):
    """Orbit representatives under the isomorphisms, sorted by encoding."""
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    doms = sorted(_domains(n))
    if jobs <= 1:
        reps = _canonical_shard((n, doms))
    else:
        shards = [(n, doms[k::jobs * 4]) for k in range(jobs * 4)]
        reps = set()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_canonical_shard, shards):
                reps |= part
    return TripleCatalog(n, sorted(reps))
