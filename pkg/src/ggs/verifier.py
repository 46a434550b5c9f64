"""QYBE and Hecke checks for banded R-matrices, plus a dense oracle.

Component forms, with R = sum r_ik^j e_ij (x) e_{k,i+k-j}:

  QYBE:  sum_p r_ik^{k+i-p} r_{k+i-p,m}^j r_{p,m+k+i-p-j}^l
       = sum_p r_km^p r_{i,m+k-p}^{j+l-p} r_{j+l-p,p}^j
  Hecke: sum_l r_ki^l r_{k+i-l,l}^j = delta_ij + qhat r_ki^j
"""
import time
from dataclasses import dataclass, field
from itertools import product

from .errors import InputError
from .exact_algebra import ONE, ZERO, Q, QHAT, q_power
from .r0_solver import format_tensor, in_free_space, r0_tilde
from .r_matrix import build_R, conjugate_by_q_r0


@dataclass
class CheckResult:
    ok: bool
    witness: tuple = None   # index tuple of the first failure
    lhs: object = None
    rhs: object = None
    all_witnesses: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_json(self):
        if self.ok:
            return None
        return {"index": list(self.witness), "lhs": str(self.lhs), "rhs": str(self.rhs)}


def _accumulate(acc, key, val):
    if key in acc:
        acc[key] = acc[key] + val
    else:
        acc[key] = val


def _compare(lhs, rhs, verbose):
    bad = sorted(key for key in set(lhs) | set(rhs)
                 if lhs.get(key, ZERO) != rhs.get(key, ZERO))
    if not bad:
        return CheckResult(True)
    first = bad[0]
    return CheckResult(False, first, lhs.get(first, ZERO), rhs.get(first, ZERO),
                       bad if verbose else [first])


def qybe_lhs(R, i, j, k, l, m):
    return sum((R[(i, k, a)] * R[(a, m, j)] * R[(i + k - a, a + m - j, l)]
                for a in range(1, R.n + 1)), ZERO)


def qybe_rhs(R, i, j, k, l, m):
    total = ZERO
    for b in range(1, R.n + 1):
        jp = j + l - b
        total = total + R[(k, m, b)] * R[(i, k + m - b, jp)] * R[(jp, b, j)]
    return total


def _qybe_sparse(R):
    rows = {}
    for (x, y, z), v in R._entries.items():
        rows.setdefault((x, y), []).append((z, v))
    first = {}
    for (x, y, z), v in R._entries.items():
        first.setdefault(x, []).append((y, z, v))
    second = {}
    for (x, y, z), v in R._entries.items():
        second.setdefault(y, []).append((x, z, v))

    lhs = {}
    for (i, k, a), v1 in R._entries.items():
        for m, j, v2 in first.get(a, ()):
            v12 = v1 * v2
            for l, v3 in rows.get((i + k - a, a + m - j), ()):
                _accumulate(lhs, (i, j, k, l, m), v12 * v3)
    rhs = {}
    for (k, m, b), v1 in R._entries.items():
        for i, jp, v2 in second.get(k + m - b, ()):
            v12 = v1 * v2
            for j, v3 in rows.get((jp, b), ()):
                _accumulate(rhs, (i, j, k, jp + b - j, m), v12 * v3)
    return lhs, rhs


def _qybe_full(R):
    n = R.n
    lhs, rhs = {}, {}
    for i, j, k, l, m in product(range(1, n + 1), repeat=5):
        if not 1 <= i + k + m - j - l <= n:
            continue
        lhs[(i, j, k, l, m)] = qybe_lhs(R, i, j, k, l, m)
        rhs[(i, j, k, l, m)] = qybe_rhs(R, i, j, k, l, m)
    return lhs, rhs


def check_qybe(R, mode="sparse", verbose=False):
    if mode == "sparse":
        lhs, rhs = _qybe_sparse(R)
    elif mode == "full":
        lhs, rhs = _qybe_full(R)
    else:
        raise InputError(f"unknown mode {mode!r}")
    return _compare(lhs, rhs, verbose)


def hecke_sides(R, i, j, k):
    lhs = sum((R[(k, i, l)] * R[(k + i - l, l, j)] for l in range(1, R.n + 1)), ZERO)
    rhs = QHAT * R[(k, i, j)]
    if i == j:
        rhs = rhs + ONE
    return lhs, rhs


def _hecke_sparse(R):
    rows = {}
    for (x, y, z), v in R._entries.items():
        rows.setdefault((x, y), []).append((z, v))
    lhs = {}
    for (k, i, l), v1 in R._entries.items():
        for j, v2 in rows.get((k + i - l, l), ()):
            _accumulate(lhs, (i, j, k), v1 * v2)
    rhs = {}
    for (k, i, j), v in R._entries.items():
        rhs[(i, j, k)] = QHAT * v
    for i in range(1, R.n + 1):
        for k in range(1, R.n + 1):
            _accumulate(rhs, (i, i, k), ONE)
    return lhs, rhs


def _hecke_full(R):
    n = R.n
    lhs, rhs = {}, {}
    for i, j, k in product(range(1, n + 1), repeat=3):
        if 1 <= k + i - j <= n:
            lhs[(i, j, k)], rhs[(i, j, k)] = hecke_sides(R, i, j, k)
    return lhs, rhs


def check_hecke(R, mode="sparse", verbose=False):
    if mode == "sparse":
        lhs, rhs = _hecke_sparse(R)
    elif mode == "full":
        lhs, rhs = _hecke_full(R)
    else:
        raise InputError(f"unknown mode {mode!r}")
    return _compare(lhs, rhs, verbose)


# -- dense oracle ------------------------------------------------------------
# Sparse-row matrices {row: {col: poly}} over explicit tensor-product bases.
# Nothing here uses the band structure.

DENSE_MAX_N = 4


def _dmul(x, y):
    out = {}
    for r, row in x.items():
        acc = {}
        for mid, a in row.items():
            for c, b in y.get(mid, {}).items():
                _accumulate(acc, c, a * b)
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            out[r] = acc
    return out


def _dadd(x, y, scale=ONE):
    out = {r: dict(row) for r, row in x.items()}
    for r, row in y.items():
        tgt = out.setdefault(r, {})
        for c, v in row.items():
            _accumulate(tgt, c, v * scale)
    return {r: {c: v for c, v in row.items() if v} for r, row in out.items()}


def _diszero(x):
    return all(not v for row in x.values() for v in row.values())


def to_dense(R):
    """R as {(i, k): {(j, l): poly}} on the basis v_i (x) v_k."""
    out = {}
    for (i, k, j), v in R.items():
        out.setdefault((i, k), {})[(j, i + k - j)] = v
    return out


def dense_identity(basis):
    return {b: {b: ONE} for b in basis}


def _leg(Rd, n, legs):
    """Embed a two-leg operator into three legs at positions ``legs``."""
    out = {}
    for row, cols in Rd.items():
        for col, v in cols.items():
            for free in range(1, n + 1):
                r = [free] * 3
                c = [free] * 3
                r[legs[0]], r[legs[1]] = row
                c[legs[0]], c[legs[1]] = col
                out.setdefault(tuple(r), {})[tuple(c)] = v
    return out


def dense_oracle(R):
    """(qybe_ok, hecke_ok) by full matrix arithmetic; n <= 4 only."""
    n = R.n
    if n > DENSE_MAX_N:
        raise InputError(f"dense oracle refuses n={n} > {DENSE_MAX_N}")
    Rd = to_dense(R)
    R12, R13, R23 = _leg(Rd, n, (0, 1)), _leg(Rd, n, (0, 2)), _leg(Rd, n, (1, 2))
    left = _dmul(_dmul(R12, R13), R23)
    right = _dmul(_dmul(R23, R13), R12)
    qybe = _diszero(_dadd(left, right, -ONE))

    basis = [(i, k) for i in range(1, n + 1) for k in range(1, n + 1)]
    P = {(i, k): {(k, i): ONE} for i, k in basis}
    PR = _dmul(P, Rd)
    eye = dense_identity(basis)
    f1 = _dadd(PR, eye, -Q)
    f2 = _dadd(PR, eye, q_power(-1))
    hecke = _diszero(_dmul(f1, f2))
    return qybe, hecke


# -- gauge freedom -----------------------------------------------------------------

def gauge_check(t, R, rp, mode="sparse"):
    if not in_free_space(t, rp):
        raise InputError("r' is not in the free space of the triple")
    Rg = conjugate_by_q_r0(R, rp)
    return bool(check_qybe(Rg, mode)) and bool(check_hecke(Rg, mode))


# -- per-triple driver -------------------------------------------------------

@dataclass
class VerificationReport:
    triple: object
    r0: tuple = None
    qybe_ok: bool = False
    hecke_ok: bool = False
    qybe: CheckResult = None
    hecke: CheckResult = None
    dense: tuple = None
    error: str = None
    ms: dict = field(default_factory=dict)

    @property
    def passed(self):
        ok = self.error is None and self.qybe_ok and self.hecke_ok
        if self.dense is not None:
            ok = ok and self.dense == (self.qybe_ok, self.hecke_ok)
        return ok

    def to_json(self, timing=True):
        rec = {"triple": self.triple.pairs(),
               "r0": format_tensor(self.r0) if self.r0 is not None else None,
               "qybe_ok": self.qybe_ok, "hecke_ok": self.hecke_ok}
        witness = {}
        if self.qybe is not None and not self.qybe.ok:
            witness["qybe"] = self.qybe.to_json()
        if self.hecke is not None and not self.hecke.ok:
            witness["hecke"] = self.hecke.to_json()
        if witness:
            rec["witness"] = witness
        if self.dense is not None:
            rec["dense"] = {"qybe_ok": self.dense[0], "hecke_ok": self.dense[1]}
        if self.error is not None:
            rec["error"] = self.error
        if timing:
            rec["ms"] = self.ms
        return rec


def verify_triple(t, mode="sparse", dense=False, verbose=False, perturb=None):
    """Build r0~ and R for ``t`` and check both identities.

    ``perturb`` maps R to a modified R before checking (fault injection).
    Any exception becomes an error report rather than a pass.
    """
    report = VerificationReport(t)
    try:
        t0 = time.perf_counter()
        report.r0 = r0_tilde(t)
        R = build_R(t, report.r0)
        if perturb is not None:
            R = perturb(R)
        t1 = time.perf_counter()
        report.qybe = check_qybe(R, mode, verbose)
        t2 = time.perf_counter()
        report.hecke = check_hecke(R, mode, verbose)
        t3 = time.perf_counter()
        report.qybe_ok, report.hecke_ok = report.qybe.ok, report.hecke.ok
        report.ms = {"build": round(1000 * (t1 - t0), 3),
                     "qybe": round(1000 * (t2 - t1), 3),
                     "hecke": round(1000 * (t3 - t2), 3)}
        if dense and t.n <= DENSE_MAX_N:
            report.dense = dense_oracle(R)
    except Exception as exc:  # reported, never a silent pass
        report.error = f"{type(exc).__name__}: {exc}"
    return report


def bump_first_entry(R):
    """Add 1 to the constant coefficient of R's first entry."""
    key = R.keys()[0]
    return R.with_entry(key, R[key] + ONE)
