"""The GGS candidate R-matrix in banded storage.

A banded operator on C^n (x) C^n is a map (i, k, j) -> x_ik^j standing for
sum x_ik^j e_ij (x) e_{k, i+k-j}.  Every matrix in the construction commutes
with the weight grading, so this loses nothing.
"""
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, InternalError
from .exact_algebra import ONE, Q, QHAT, ZERO, LaurentPoly, q_power
from .r0_solver import validate_r0


class BandedOperator:
    __slots__ = ("n", "_entries")

    def __init__(self, n, entries=None):
        self.n = n
        clean = {}
        for key, v in (entries or {}).items():
            i, k, j = key
            if not (1 <= i <= n and 1 <= k <= n and 1 <= j <= n and 1 <= i + k - j <= n):
                raise InputError(f"index {key} outside the band for n={n}")
            if not isinstance(v, LaurentPoly):
                v = LaurentPoly.constant(v)
            if v:
                clean[tuple(key)] = v
        self._entries = clean

    @classmethod
    def _raw(cls, n, entries):
        op = cls.__new__(cls)
        op.n = n
        op._entries = entries
        return op

    def __getitem__(self, key):
        return self._entries.get(key, ZERO)

    def get(self, key):
        return self._entries.get(key)

    def keys(self):
        return sorted(self._entries)

    def items(self):
        return [(key, self._entries[key]) for key in sorted(self._entries)]

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return (isinstance(other, BandedOperator) and self.n == other.n
                and self._entries == other._entries)

    def _check(self, other):
        if not isinstance(other, BandedOperator) or other.n != self.n:
            raise InputError("banded operators of different size")

    def __add__(self, other):
        self._check(other)
        out = dict(self._entries)
        for key, v in other._entries.items():
            s = out[key] + v if key in out else v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BandedOperator._raw(self.n, out)

    def __neg__(self):
        return BandedOperator._raw(self.n, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply every entry by a scalar or polynomial c."""
        out = {}
        for key, v in self._entries.items():
            p = v * c
            if p:
                out[key] = p
        return BandedOperator._raw(self.n, out)

    def __matmul__(self, other):
        return banded_mul(self, other)

    def with_entry(self, key, value):
        """Copy with one entry replaced (used for fault injection)."""
        out = dict(self._entries)
        out.pop(key, None)
        op = BandedOperator._raw(self.n, out)
        return op + BandedOperator(self.n, {key: value})

    def lines(self):
        return [f"{i} {j} {k} {i + k - j} : {v}" for (i, k, j), v in self.items()]

    def to_json(self):
        return [[i, j, k, i + k - j, str(v)] for (i, k, j), v in self.items()]

    @classmethod
    def from_json(cls, n, rows):
        return cls(n, {(i, k, j): LaurentPoly.parse(s) for i, j, k, l, s in rows})


def identity_operator(n):
    return BandedOperator(n, {(i, k, i): ONE for i in range(1, n + 1)
                              for k in range(1, n + 1)})


def banded_mul(x, y):
    """(xy)_ik^j = sum_p x_ik^p y_{p, i+k-p}^j."""
    x._check(y)
    by_row = {}
    for (p, kk, j), v in y._entries.items():
        by_row.setdefault((p, kk), []).append((j, v))
    acc = {}
    for (i, k, p), xv in x._entries.items():
        for j, yv in by_row.get((p, i + k - p), ()):
            key = (i, k, j)
            prod = xv * yv
            acc[key] = acc[key] + prod if key in acc else prod
    return BandedOperator._raw(x.n, {k: v for k, v in acc.items() if v})


# -- roots and the extended tau ----------------------------------------------

@dataclass(frozen=True, order=True)
class PositiveRoot:
    """e_i - e_j with i < j, i.e. alpha_i + ... + alpha_{j-1}."""
    i: int
    j: int

    def __post_init__(self):
        if not self.i < self.j:
            raise InputError(f"not a positive root: ({self.i}, {self.j})")

    @property
    def simple(self):
        return range(self.i, self.j)

    @property
    def length(self):
        """p: the root is a sum of p + 1 simple roots."""
        return self.j - self.i - 1


@dataclass(frozen=True)
class PrecPair:
    alpha: PositiveRoot
    beta: PositiveRoot
    sign: int


def extend_tau(t):
    """tau on every positive root whose simple summands all lie in Gamma_1."""
    out = {}
    for i in range(1, t.n):
        for j in range(i + 1, t.n + 1):
            images = [t(s) for s in range(i, j)]
            if not all(images):
                break
            lo, hi = min(images), max(images)
            if hi - lo != j - i - 1:
                raise InternalError(f"tau of a run is not a run: {t}")
            out[PositiveRoot(i, j)] = PositiveRoot(lo, hi + 1)
    return out


def prec_pairs(t):
    ext = extend_tau(t)
    pairs = []
    for alpha in sorted(ext):
        p = alpha.length
        beta, left = alpha, alpha.i
        while beta in ext:
            beta = ext[beta]
            left = t(left)
            sign = (-1) ** p if p and left == beta.j - 1 else 1
            pairs.append(PrecPair(alpha, beta, sign))
    return pairs


# -- the pieces of R ---------------------------------------------------------------

def build_a(t):
    """a = sum sign(alpha, beta) (e_{-alpha} (x) e_beta - e_beta (x) e_{-alpha})."""
    acc = {}
    for pp in prec_pairs(t):
        a, b = pp.alpha, pp.beta
        # e_{-alpha} = e_{a.j, a.i}; e_beta = e_{b.i, b.j}
        for key, s in (((a.j, b.i, a.i), pp.sign), ((b.i, a.j, b.j), -pp.sign)):
            acc[key] = acc.get(key, 0) + s
    op = BandedOperator(t.n, {k: Fraction(v) for k, v in acc.items()})
    for key, v in op.items():
        if v not in (ONE, -ONE):
            raise InternalError(f"a has entry {v} at {key} for {t}")
    return op


def build_c(n):
    half = Fraction(1, 2)
    entries = {}
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            entries[(j, i, i)] = half    # e_ji (x) e_ij
            entries[(i, j, j)] = -half   # e_ij (x) e_ji
    return BandedOperator(n, entries)


def build_epsilon(a, c):
    return banded_mul(a, c) + banded_mul(c, a) + banded_mul(a, a)


def build_a_tilde(a, eps):
    out = {}
    for key, v in a.items():
        if not v.is_constant():
            raise InternalError(f"a is not constant at {key}")
        e = eps[key]
        if not e.is_constant():
            raise InternalError(f"epsilon is not constant at {key}")
        s = v.constant_value()
        out[key] = q_power(s * e.constant_value()) * s
    return BandedOperator(a.n, out)


def build_rs(n):
    entries = {}
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            entries[(i, k, i)] = Q if i == k else ONE
            if i > k:
                entries[(i, k, k)] = QHAT
    return BandedOperator(n, entries)


def conjugate_by_q_r0(x, r):
    """q^r x q^r for r diagonal on e_ii (x) e_kk (r given as an n x n table)."""
    if len(r) != x.n:
        raise InputError("tensor shape does not match operator")
    out = {}
    for (i, k, j), v in x._entries.items():
        out[(i, k, j)] = v.shift(r[i - 1][k - 1] + r[j - 1][i + k - j - 1])
    return BandedOperator._raw(x.n, out)


def build_R(t, r):
    if not validate_r0(t, r):
        raise InputError(f"r0 does not solve the constraints for {t}")
    a = build_a(t)
    a_tilde = build_a_tilde(a, build_epsilon(a, build_c(t.n)))
    return conjugate_by_q_r0(build_rs(t.n) + a_tilde.scale(QHAT), r)
