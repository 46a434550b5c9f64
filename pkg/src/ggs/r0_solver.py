"""The Cartan part r0~ of the classical r-matrix for a triple.

Pipeline: b (basis f, dual to alpha_i - tau alpha_i) -> b' (basis g, the
fundamental coweights) -> n x n tensor in the e_ii basis.  Free coordinates
(i, j both outside Gamma_1) are set to zero.
"""
from fractions import Fraction
from math import comb

from .bd_triples import inner_product
from .errors import InputError, InternalError

ZERO = Fraction(0)
HALF = Fraction(1, 2)


# -- small exact matrices: tuples of tuples of Fraction ----------------------

def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def freeze(m):
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def identity(k):
    return freeze([[Fraction(int(i == j)) for j in range(k)] for i in range(k)])


def transpose(m):
    return tuple(zip(*m))


def matmul(x, y):
    yt = transpose(y)
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), ZERO) for col in yt)
                 for row in x)


def is_skew(m):
    k = len(m)
    return all(m[i][j] == -m[j][i] for i in range(k) for j in range(k))


def inverse(m):
    """Exact inverse by Gauss-Jordan elimination with full pivoting."""
    k = len(m)
    a = [list(row) for row in m]
    inv = [list(row) for row in identity(k)]
    cols = list(range(k))  # cols[c] = original column now sitting at c
    for c in range(k):
        piv = None
        for r in range(c, k):
            for s in range(c, k):
                if a[r][s] and (piv is None or abs(a[r][s]) > abs(a[piv[0]][piv[1]])):
                    piv = (r, s)
        if piv is None:
            raise InternalError("singular matrix")
        r, s = piv
        a[c], a[r] = a[r], a[c]
        inv[c], inv[r] = inv[r], inv[c]
        if s != c:
            for row in a:
                row[c], row[s] = row[s], row[c]
            cols[c], cols[s] = cols[s], cols[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        inv[c] = [x / p for x in inv[c]]
        for r in range(k):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[c])]
    # a is now the identity up to the column permutation: undo it on rows of inv
    out = [None] * k
    for c in range(k):
        out[cols[c]] = inv[c]
    return freeze(out)


# -- root-space helpers --------------------------------------------------------

def _root_vec(t, i):
    """alpha_i in coordinates of simple roots (length n-1)."""
    v = [0] * (t.n - 1)
    v[i - 1] = 1
    return v


def _tau_vec(t, i):
    v = [0] * (t.n - 1)
    if t(i):
        v[t(i) - 1] = 1
    return v


def _ip(u, v, n):
    return sum(u[a] * v[b] * inner_product(a + 1, b + 1, n)
               for a in range(n - 1) if u[a] for b in range(n - 1) if v[b])


def p0(n):
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    d, o = Fraction(n - 1, n), Fraction(-1, n)
    return tuple(tuple(d if i == k else o for k in range(n)) for i in range(n))


def r0_tilde_f_basis(t):
    """[r0~] in the basis (f_i), with b_ij = 0 on the free block."""
    n, g1 = t.n, t.gamma1
    b = zeros(n - 1, n - 1)
    for i in g1:
        plus = [x + y for x, y in zip(_root_vec(t, i), _tau_vec(t, i))]
        for j in range(1, n):
            minus = [x - y for x, y in zip(_root_vec(t, j), _tau_vec(t, j))]
            b[i - 1][j - 1] = HALF * _ip(plus, minus, n)
    for i in range(1, n):
        if i in g1:
            continue
        for j in g1:
            b[i - 1][j - 1] = -b[j - 1][i - 1]
    for i in g1:
        for j in g1:
            if b[i - 1][j - 1] != -b[j - 1][i - 1]:
                raise InternalError(f"b not skew at ({i}, {j}) for {t}")
    return freeze(b)


def one_minus_tau_matrix(t):
    k = t.n - 1
    m = zeros(k, k)
    for i in range(1, t.n):
        m[i - 1][i - 1] += 1
        if t(i):
            m[t(i) - 1][i - 1] -= 1
    return freeze(m)


def change_to_g_basis(b, t):
    minv = inverse(one_minus_tau_matrix(t))
    return matmul(matmul(transpose(minv), b), minv)


def coweight_matrix(n):
    """Rows are the fundamental coweights g_i in the e_jj coordinates."""
    return tuple(tuple(Fraction(n - i if j <= i else -i, n) for j in range(1, n + 1))
                 for i in range(1, n))


def expand_to_weight_basis(bp, n):
    if len(bp) != n - 1 or any(len(row) != n - 1 for row in bp):
        raise InputError(f"expected a {n - 1}x{n - 1} matrix")
    w = coweight_matrix(n)
    bpp = matmul(bp, w)
    for i in range(n - 1):
        # displayed first-column recurrence for b''
        expect = sum((Fraction(n - 1 - l) * bp[i][l] for l in range(n - 1)), ZERO) / n
        if bpp[i][0] != expect:
            raise InternalError(f"b'' first column mismatch at row {i + 1}")
    return matmul(transpose(w), bpp)


def r0_tilde(t):
    b = r0_tilde_f_basis(t)
    return expand_to_weight_basis(change_to_g_basis(b, t), t.n)


def _functional(t, i, sign):
    """alpha_i + sign * tau(alpha_i) as a vector of n coefficients on e_k."""
    lam = [Fraction(0)] * t.n
    lam[i - 1] += 1
    lam[i] -= 1
    if t(i):
        j = t(i)
        lam[j - 1] += sign
        lam[j] -= sign
    return lam


def _first_leg(lam, r):
    n = len(r)
    return [sum((lam[i] * r[i][k] for i in range(n)), ZERO) for k in range(n)]


def _check_shape(t, r):
    if len(r) != t.n or any(len(row) != t.n for row in r):
        raise InputError(f"tensor shape does not match n={t.n}")


def validate_r0(t, r):
    """Skew-symmetry plus ((a - tau a) x 1) r = 1/2 ((a + tau a) x 1) P0 on Gamma_1."""
    _check_shape(t, r)
    if not is_skew(r):
        return False
    P = p0(t.n)
    for i in t.gamma1:
        lhs = _first_leg(_functional(t, i, -1), r)
        rhs = [HALF * x for x in _first_leg(_functional(t, i, +1), P)]
        if lhs != rhs:
            return False
    return True


def in_free_space(t, r):
    """Homogeneous version of validate_r0: the gauge directions."""
    _check_shape(t, r)
    if not is_skew(r):
        return False
    return all(not any(_first_leg(_functional(t, i, -1), r)) for i in t.gamma1)


def free_dimension(t):
    return comb(t.n - 1 - len(t.gamma1), 2)


def free_space_basis(t):
    k = t.n - 1
    outside = [i for i in range(1, t.n) if i not in t.gamma1]
    basis = []
    for a, i in enumerate(outside):
        for j in outside[a + 1:]:
            e = zeros(k, k)
            e[i - 1][j - 1] = Fraction(1)
            e[j - 1][i - 1] = Fraction(-1)
            basis.append(expand_to_weight_basis(change_to_g_basis(freeze(e), t), t.n))
    return basis


def combine(tensors, coeffs):
    n = len(tensors[0])
    return tuple(tuple(sum((c * x[i][k] for c, x in zip(coeffs, tensors)), ZERO)
                       for k in range(n)) for i in range(n))


def format_tensor(r):
    return [[str(x) for x in row] for row in r]
