from fractions import Fraction as F
from math import comb

import pytest
import sympy

from ggs.bd_triples import BDTriple
from ggs.errors import InputError
from ggs.r0_solver import (change_to_g_basis, combine, coweight_matrix,
                           expand_to_weight_basis, free_dimension, free_space_basis,
                           identity, in_free_space, inverse, is_skew, matmul,
                           one_minus_tau_matrix, p0, r0_tilde, r0_tilde_f_basis,
                           validate_r0)

from conftest import T

h = F(1, 2)


def zero_tensor(n):
    return tuple((F(0),) * n for _ in range(n))


def test_p0():
    assert p0(2) == ((h, -h), (-h, h))
    assert p0(3)[1][1] == F(2, 3)
    for n in range(2, 8):
        assert all(sum(row) == 0 for row in p0(n))


def test_f_basis_examples():
    assert r0_tilde_f_basis(BDTriple.empty(5)) == zero_tensor(4)
    assert r0_tilde_f_basis(T(3, (1, 2))) == ((0, h), (-h, 0))


def test_one_minus_tau():
    assert one_minus_tau_matrix(BDTriple.empty(4)) == identity(3)
    assert one_minus_tau_matrix(T(3, (1, 2))) == ((1, 0), (-1, 1))


def test_g_basis_example():
    t = T(3, (1, 2))
    assert inverse(one_minus_tau_matrix(t)) == ((1, 0), (1, 1))
    assert change_to_g_basis(r0_tilde_f_basis(t), t) == ((0, h), (-h, 0))
    e = BDTriple.empty(4)
    b = ((0, 1, 2), (-1, 0, 3), (-2, -3, 0))
    assert change_to_g_basis(b, e) == b


def test_inverse_against_sympy(canonical):
    for t in canonical(6):
        m = one_minus_tau_matrix(t)
        expect = sympy.Matrix(m).inv()
        got = inverse(m)
        assert sympy.Matrix(got) == expect
        assert matmul(m, got) == identity(len(m))


def test_coweights_are_dual_to_simple_roots():
    for n in range(2, 9):
        w = coweight_matrix(n)
        for i, g in enumerate(w, 1):
            assert sum(g) == 0
            for j in range(1, n):
                assert g[j - 1] - g[j] == (1 if i == j else 0)


def test_example_pipeline_n3():
    t = T(3, (1, 2))
    r = r0_tilde(t)
    assert is_skew(r)
    assert validate_r0(t, r)


def test_validate_examples():
    e = BDTriple.empty(3)
    assert validate_r0(e, zero_tensor(3))
    bad = [list(row) for row in zero_tensor(3)]
    bad[0][1] = F(1)
    assert not validate_r0(e, tuple(map(tuple, bad)))
    with pytest.raises(InputError):
        validate_r0(e, zero_tensor(4))
    # the zero tensor does not solve the inhomogeneous system
    assert not validate_r0(T(3, (1, 2)), zero_tensor(3))


def test_validate_against_sympy_solution_space():
    """Every solution of the linear system, solved symbolically, is accepted."""
    t = T(5, (1, 3))
    n = t.n
    syms = sympy.symbols(f"x0:{n * n}")
    X = sympy.Matrix(n, n, syms)
    eqs = [X[i, k] + X[k, i] for i in range(n) for k in range(i, n)]
    # r0~ lies in h (x) h: both legs trace-free
    eqs += [sum(X.row(i)) for i in range(n)] + [sum(X.col(k)) for k in range(n)]
    P = sympy.Matrix(p0(n))

    def functional(i, sign):
        lam = [0] * n
        lam[i - 1] += 1
        lam[i] -= 1
        j = t(i)
        lam[j - 1] += sign
        lam[j] -= sign
        return sympy.Matrix([lam])

    for i in t.gamma1:
        eqs += list(functional(i, -1) * X - sympy.Rational(1, 2) * functional(i, 1) * P)
    sol = sympy.solve(eqs, syms, dict=True)[0]
    free = [s for s in syms if s not in sol]
    assert len(free) == free_dimension(t) == comb(n - 1 - 1, 2)
    for values in ([0] * len(free), list(range(1, len(free) + 1))):
        sub = dict(zip(free, values))
        M = X.subs(sol).subs(sub)
        r = tuple(tuple(F(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1]))
                        for x in M.row(i)) for i in range(n))
        assert validate_r0(t, r)


@pytest.mark.parametrize("n", range(2, 9))
def test_pipeline_validates(n, canonical):
    for t in canonical(n):
        b = r0_tilde_f_basis(t)
        bp = change_to_g_basis(b, t)
        r = expand_to_weight_basis(bp, n)
        assert is_skew(b) and is_skew(bp) and is_skew(r)
        assert validate_r0(t, r)


def test_free_space_examples():
    assert free_space_basis(T(3, (1, 2))) == []
    assert len(free_space_basis(BDTriple.empty(5))) == 6


@pytest.mark.parametrize("n", range(2, 8))
def test_free_space(n, canonical):
    for t in canonical(n):
        basis = free_space_basis(t)
        assert len(basis) == comb(n - len(t.gamma1) - 1, 2)
        assert all(in_free_space(t, r) for r in basis)
        if basis:
            mat = sympy.Matrix([[x for row in r for x in row] for r in basis])
            assert mat.rank() == len(basis)
            # solutions stay solutions after a gauge shift
            shifted = combine([r0_tilde(t)] + basis, [1] + list(range(1, len(basis) + 1)))
            assert validate_r0(t, shifted)
