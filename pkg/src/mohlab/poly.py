"""Multivariate polynomials under the local ordering ds.

A monomial is a tuple of non-negative exponents.  In ds a monomial of
smaller total degree is *larger*; equal degrees are broken
reverse-lexicographically (x > y > z).  So 1 is the largest monomial and
the leading term of a polynomial is its "lowest" term.
"""

import re
from fractions import Fraction

from mohlab.errors import (
    DimensionMismatch,
    ExponentOverflow,
    PolySyntaxError,
    RingMismatch,
    UnknownVariable,
    ZeroPolynomial,
)
from mohlab.field import QQ

MAX_EXPONENT = 2**31 - 1


def ds_key(alpha):
    """Sort key: ``ds_key(a) > ds_key(b)`` iff a >_ds b."""
    return (-sum(alpha), tuple(-a for a in reversed(alpha)))


def compare_ds(a, b):
    """Return 1, 0 or -1 as monomial ``a`` is greater, equal or less than ``b``."""
    if len(a) != len(b):
        raise DimensionMismatch(f"monomials of length {len(a)} and {len(b)}")
    ka, kb = ds_key(a), ds_key(b)
    return (ka > kb) - (ka < kb)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def default_names(nvars):
    if nvars == 1:
        return ("t",)
    if nvars == 3:
        return ("x", "y", "z")
    return tuple(f"x{i}" for i in range(1, nvars + 1))


class Ring:
    """k[x_1..x_d]: a variable count, their names and the coefficient field."""

    def __init__(self, nvars, field=QQ, names=None):
        self.nvars = nvars
        self.field = field
        self.names = tuple(names) if names is not None else default_names(nvars)
        if len(self.names) != nvars:
            raise DimensionMismatch("one name per variable is required")

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.nvars, self.field, self.names))

    def __repr__(self):
        return f"Ring({','.join(self.names)}; {self.field!r})"

    def with_field(self, field):
        return Ring(self.nvars, field, self.names)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, alpha, c=1):
        alpha = tuple(alpha)
        if len(alpha) != self.nvars:
            raise DimensionMismatch(f"exponent vector {alpha} in a ring with {self.nvars} variables")
        return Polynomial(self, {alpha: self.field(c)})

    def var(self, i):
        if isinstance(i, str):
            i = self.names.index(i)
        alpha = [0] * self.nvars
        alpha[i] = 1
        return self.monomial(alpha)

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def parse(self, text):
        return parse_poly(text, self.nvars, self.field, names=self.names)


class Polynomial:
    """Finite sum of nonzero terms; treat instances as immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        F = ring.field
        self.ring = ring
        terms = {tuple(m): F(c) for m, c in terms.items()}
        self.terms = {m: c for m, c in terms.items() if not F.is_zero(c)}

    @classmethod
    def _raw(cls, ring, terms):
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # -- basic protocol -------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(terms[m], c) if m in terms else c
            if F.is_zero(v):
                terms.pop(m, None)
            else:
                terms[m] = v
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial._raw(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = F.mul(c1, c2)
                if m in terms:
                    v = F.add(terms[m], v)
                terms[m] = v
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        F = self.ring.field
        c = F(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: F.mul(c, v) for m, v in self.terms.items()})

    def mul_term(self, alpha, c):
        """Multiply by the term c * x^alpha."""
        F = self.ring.field
        if F.is_zero(c):
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {mono_mul(m, alpha): F.mul(c, v) for m, v in self.terms.items()}
        )

    def sub_mul_term(self, alpha, c, other):
        """self - c * x^alpha * other, without building the product separately."""
        F = self.ring.field
        terms = dict(self.terms)
        for m, v in other.terms.items():
            mm = mono_mul(m, alpha)
            prod = F.mul(c, v)
            new = F.sub(terms[mm], prod) if mm in terms else F.neg(prod)
            if F.is_zero(new):
                terms.pop(mm, None)
            else:
                terms[mm] = new
        return Polynomial._raw(self.ring, terms)

    def exact_quotient(self, other):
        """Scalar c with self == c * other, or None."""
        if other.is_zero():
            return None
        if self.is_zero():
            return self.ring.field.zero
        if set(self.terms) != set(other.terms):
            return None
        F = self.ring.field
        m = next(iter(other.terms))
        c = F.div(self.terms[m], other.terms[m])
        if all(self.terms[k] == F.mul(c, other.terms[k]) for k in other.terms):
            return c
        return None

    # -- leading data under ds ------------------------------------------

    def sorted_terms(self):
        """Terms in strictly descending ds order (the ordered view)."""
        return sorted(self.terms.items(), key=lambda mc: ds_key(mc[0]), reverse=True)

    def lm(self):
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no leading monomial")
        return max(self.terms, key=ds_key)

    def lc(self):
        return self.terms[self.lm()]

    def lt(self):
        m = self.lm()
        return m, self.terms[m]

    def degree(self):
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def order(self):
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(sum(m) for m in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def change_field(self, field):
        """Reduce (or lift) the coefficients into another field."""
        ring = self.ring.with_field(field)
        return Polynomial(ring, {m: field(c) for m, c in self.terms.items()})

    def substitute_zero(self, i):
        """Set variable i to zero."""
        return Polynomial._raw(self.ring, {m: c for m, c in self.terms.items() if m[i] == 0})


def ord_and_leading_form(f):
    """(ord f, LF f): lowest total degree and the sum of the terms of that degree."""
    if f.is_zero():
        raise ZeroPolynomial("order of the zero polynomial")
    d = f.order()
    return d, Polynomial._raw(f.ring, {m: c for m, c in f.terms.items() if sum(m) == d})


def ecart(f):
    """deg(f) - deg(LM(f))."""
    if f.is_zero():
        raise ZeroPolynomial("ecart of the zero polynomial")
    return f.degree() - sum(f.lm())


def spoly(f, g):
    """(m/LT f) f - (m/LT g) g with m the lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of a zero polynomial")
    F = f.ring.field
    mf, cf = f.lt()
    mg, cg = g.lt()
    m = mono_lcm(mf, mg)
    return f.mul_term(mono_div(m, mf), F.inv(cf)).sub_mul_term(mono_div(m, mg), F.inv(cg), g)


# -- printing --------------------------------------------------------------


def format_monomial(alpha, names):
    parts = []
    for name, e in zip(names, alpha):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f):
    if f.is_zero():
        return "0"
    F = f.ring.field
    out = []
    for m, c in f.sorted_terms():
        sign, mag = F.signed(c)
        mono = format_monomial(m, f.ring.names)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(out)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match.end() == pos or match.group(0).strip() == "":
            break
        num, ident, sym = match.groups()
        start = match.start(match.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif ident is not None:
            tokens.append(("var", ident, start))
        else:
            tokens.append(("sym", sym, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _split_identifier(ident, names, text, pos):
    """Split juxtaposed variable names such as ``xyz`` or ``x1x2``."""
    out = []
    i = 0
    ordered = sorted(names, key=len, reverse=True)
    while i < len(ident):
        for name in ordered:
            if ident.startswith(name, i):
                out.append(name)
                i += len(name)
                break
        else:
            raise UnknownVariable(f"unknown variable in {ident!r}", text, pos + i)
    return out


def parse_poly(text, d=3, field=QQ, names=None):
    """Parse ``text`` into a polynomial of ``Ring(d, field, names)``.

    Accepted: integer or ``a/b`` coefficients, ``^`` exponents, optional
    ``*`` between factors, juxtaposed variables, a leading sign.
    """
    ring = Ring(d, field, names)
    names = ring.names
    index = {n: i for i, n in enumerate(names)}
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expect_int():
        kind, val, at = take()
        if kind != "num":
            raise PolySyntaxError("expected an integer", text, at)
        return int(val)

    def parse_term():
        coef = Fraction(1)
        has_coef = False
        alpha = [0] * d
        has_factor = False
        kind, val, at = peek()
        if kind == "num":
            take()
            coef = Fraction(int(val))
            if peek()[:2] == ("sym", "/"):
                take()
                den = expect_int()
                if den == 0:
                    raise PolySyntaxError("zero denominator", text, at)
                coef /= den
            has_coef = True
        while True:
            kind, val, at = peek()
            starred = False
            if kind == "sym" and val == "*" and (has_coef or has_factor):
                take()
                starred = True
                kind, val, at = peek()
                if kind not in ("var", "num"):
                    raise PolySyntaxError("expected a factor after '*'", text, at)
            if kind == "num" and not starred:
                raise PolySyntaxError("unexpected number", text, at)
            if kind == "num":
                take()
                coef *= int(val)
                if peek()[:2] == ("sym", "/"):
                    take()
                    den = expect_int()
                    if den == 0:
                        raise PolySyntaxError("zero denominator", text, at)
                    coef /= den
                continue
            if kind != "var":
                break
            take()
            parts = _split_identifier(val, names, text, at)
            exponent = 1
            if peek()[:2] == ("sym", "^"):
                take()
                exponent = expect_int()
                if exponent > MAX_EXPONENT:
                    raise ExponentOverflow("exponent exceeds 32-bit range", text, at)
            for name in parts[:-1]:
                alpha[index[name]] += 1
            alpha[index[parts[-1]]] += exponent
            if any(a > MAX_EXPONENT for a in alpha):
                raise ExponentOverflow("exponent exceeds 32-bit range", text, at)
            has_factor = True
        if not (has_coef or has_factor):
            kind, val, at = peek()
            raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", text, at)
        return tuple(alpha), coef

    terms = {}
    sign = 1
    kind, val, at = peek()
    if kind == "sym" and val in "+-":
        take()
        sign = -1 if val == "-" else 1
    while True:
        alpha, coef = parse_term()
        c = field(sign * coef)
        terms[alpha] = field.add(terms[alpha], c) if alpha in terms else c
        kind, val, at = peek()
        if kind == "end":
            break
        if kind == "sym" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
            continue
        raise PolySyntaxError(f"unexpected {val!r}", text, at)
    return Polynomial(ring, terms)
