"""Laurent polynomials in q with rational exponents and rational coefficients.

Rationals are ``fractions.Fraction``.  A polynomial is an immutable sparse map
``exponent -> coefficient`` with no zero coefficients, so structural equality
is exact equality.
"""
from fractions import Fraction

__all__ = ["Fraction", "LaurentPoly", "q_power", "add", "mul", "negate",
           "equals", "ZERO", "ONE", "Q", "QHAT"]


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                c = _frac(c)
                if c:
                    e = _frac(e)
                    c = clean.get(e, 0) + c
                    if c:
                        clean[e] = c
                    else:
                        clean.pop(e, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        c = _frac(c)
        return cls._raw({Fraction(0): c} if c else {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or set(self._terms) == {0}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms.get(Fraction(0), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = _frac(other)
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers only exist for monomials")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e):
        """Multiply by q^e."""
        e = _frac(e)
        if not e:
            return self
        return LaurentPoly._raw({x + e: c for x, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.constant(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            parts.append(str(c) if e == 0 else f"{c}*q^({e})")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``."""
        text = text.strip()
        if text == "0":
            return ZERO
        terms = {}
        for part in text.split(" + "):
            if "*q^(" in part:
                c, e = part.split("*q^(")
                e = Fraction(e.rstrip(")"))
            else:
                c, e = part, Fraction(0)
            terms[e] = terms.get(e, 0) + Fraction(c)
        return cls(terms)


def q_power(e):
    return LaurentPoly._raw({_frac(e): Fraction(1)})


def add(p1, p2):
    return p1 + p2


def mul(p1, p2):
    return p1 * p2


def negate(p):
    return -p


def equals(p1, p2):
    return p1._terms == p2._terms


ZERO = LaurentPoly._raw({})
ONE = q_power(0)
Q = q_power(1)
QHAT = Q - q_power(-1)
