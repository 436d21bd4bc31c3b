"""Exact coefficient fields and the little linear algebra built on them.

Scalars are plain Python values: :class:`fractions.Fraction` over Q and
``int`` residues ``0 <= v < p`` over F_p.  A field object knows how to
canonicalise and combine them, so polynomial code stays field-agnostic.
"""

from fractions import Fraction
from math import comb

from mohlab.errors import MohlabError


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


class Rationals:
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value):
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a):
        return a == 0

    def signed(self, a):
        """Return (sign, absolute value string) for printing."""
        if a < 0:
            return -1, _fraction_str(-a)
        return 1, _fraction_str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


def _fraction_str(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class PrimeField:
    zero = 0
    one = 1

    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise MohlabError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return a == 0

    def signed(self, a):
        return 1, str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def field_for(characteristic):
    """Field of the given characteristic: Q for 0, otherwise F_p."""
    characteristic = int(characteristic)
    if characteristic == 0:
        return QQ
    return PrimeField(characteristic)


def lucas_binomial(m, n, field):
    """Image of binom(m, n) in ``field``; zero when n > m.

    Over F_p the value is the product of the digit-wise binomials of m and
    n written in base p.
    """
    if m < 0 or n < 0:
        raise ValueError("binomial arguments must be non-negative")
    if n > m:
        return field.zero
    if field.characteristic == 0:
        return field(comb(m, n))
    p = field.characteristic
    value = 1
    while m or n:
        mi, ni = m % p, n % p
        if ni > mi:
            return field.zero
        value = value * comb(mi, ni) % p
        m //= p
        n //= p
    return field(value)


class Matrix:
    """Dense rectangular matrix of canonical scalars over one field."""

    def __init__(self, rows, field, cols=None):
        self.field = field
        self.rows = [[field(v) for v in row] for row in rows]
        if cols is None:
            cols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != cols for row in self.rows):
            raise ValueError("matrix rows must have equal length")
        self.nrows = len(self.rows)
        self.ncols = cols

    def __matmul__(self, vector):
        F = self.field
        out = []
        for row in self.rows:
            acc = F.zero
            for a, b in zip(row, vector):
                if not F.is_zero(a) and not F.is_zero(b):
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def rref(self):
        """Reduced row echelon form and the list of pivot columns."""
        F = self.field
        A = [list(row) for row in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, self.nrows) if not F.is_zero(A[i][c])), None)
            if pivot is None:
                continue
            A[r], A[pivot] = A[pivot], A[r]
            inv = F.inv(A[r][c])
            A[r] = [F.mul(inv, v) for v in A[r]]
            for i in range(self.nrows):
                if i != r and not F.is_zero(A[i][c]):
                    factor = A[i][c]
                    A[i] = [F.sub(a, F.mul(factor, b)) for a, b in zip(A[i], A[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return A[:r], pivots

    def rank(self):
        return len(self.rref()[1])


def nullspace(m):
    """Basis of the right nullspace of ``m``.

    One vector per free column, in ascending column order; the free
    coordinate is 1, the other free coordinates 0.
    """
    F = m.field
    R, pivots = m.rref()
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [F.zero] * m.ncols
        v[free] = F.one
        for row, pc in zip(R, pivots):
            if not F.is_zero(row[free]):
                v[pc] = F.neg(row[free])
        basis.append(v)
    return basis
