"""Parametrizations into k[t]: evaluation, kernel certificates, V_r bounds.

The Moh map for odd n, m = (n+1)/2 and an integer lambda is

    x -> t^{nm} + t^{nm+lambda},  y -> t^{(n+1)m},  z -> t^{(n+2)m}

so a monomial of weight r (weights n, n+1, n+2) goes to
t^{mr} (1 + t^lambda)^{a_1}.
"""

import heapq
import warnings
from dataclasses import dataclass, field as dc_field
from math import gcd

from mohlab.errors import (
    InternalError,
    NoSolutionWithinBound,
    NotFoundWithinBound,
    NotInSemigroup,
    NotSigmaHomogeneous,
    RingMismatch,
    ZeroPolynomial,
)
from mohlab.field import QQ, Matrix, lucas_binomial, nullspace
from mohlab.poly import Polynomial, Ring
from mohlab.semigroup import contains
from mohlab.sigma import SigmaContext, is_sigma_homogeneous, w_basis

# Only the coefficients of t^{mr} and t^{mr+lambda} are out of reach of any
# tail of higher sigma-order; deeper rows are not necessary conditions.
VR_CONSTRAINT_ROWS = 2


class Parametrization:
    """A map k[x_1..x_d] -> k[t] given by the images of the variables."""

    def __init__(self, images, ctx, scale=1):
        if any(img.is_zero() for img in images):
            raise ValueError("images must be nonzero")
        if len(images) != ctx.nvars:
            raise ValueError("one image per variable is required")
        self.images = list(images)
        self.ctx = ctx
        self.scale = scale
        self.t_ring = images[0].ring
        self.field = self.t_ring.field
        for img, w in zip(self.images, ctx.weights):
            if img.order() != scale * w:
                raise ValueError(f"ord_t of {img} is not {scale}*{w}")
        self._powers = [{0: {0: self.field.one}} for _ in images]
        self._mono_cache = {}

    def __repr__(self):
        return "Parametrization(" + ", ".join(str(i) for i in self.images) + ")"

    def _power(self, i, e):
        cache = self._powers[i]
        if e not in cache:
            prev = self._power(i, e - 1)
            F = self.field
            out = {}
            for a, c in prev.items():
                for b, d in self.images[i].terms.items():
                    k = a + b[0]
                    v = F.mul(c, d)
                    out[k] = F.add(out[k], v) if k in out else v
            cache[e] = {k: v for k, v in out.items() if not F.is_zero(v)}
        return cache[e]

    def monomial_image(self, alpha):
        """rho(x^alpha) as a dict exponent -> coefficient."""
        if alpha in self._mono_cache:
            return self._mono_cache[alpha]
        F = self.field
        acc = {0: F.one}
        for i, e in enumerate(alpha):
            if e == 0:
                continue
            pw = self._power(i, e)
            out = {}
            for a, c in acc.items():
                for b, d in pw.items():
                    k = a + b
                    v = F.mul(c, d)
                    out[k] = F.add(out[k], v) if k in out else v
            acc = {k: v for k, v in out.items() if not F.is_zero(v)}
        self._mono_cache[alpha] = acc
        return acc

    def image_dict(self, f):
        F = self.field
        out = {}
        for m, c in f.terms.items():
            for k, v in self.monomial_image(m).items():
                v = F.mul(c, v)
                out[k] = F.add(out[k], v) if k in out else v
        return {k: v for k, v in out.items() if not F.is_zero(v)}


def evaluate(rho, f):
    """Exact substitution rho(f), a polynomial in t."""
    if f.ring.nvars != len(rho.images) or f.ring.field != rho.field:
        raise RingMismatch(f"{f.ring!r} does not match the parametrization")
    return Polynomial._raw(rho.t_ring, {(k,): v for k, v in rho.image_dict(f).items()})


class MohParams:
    """Parameters (n, lambda) of Moh's curve over a given field."""

    def __init__(self, n=3, lam=25, field=QQ):
        if n < 3 or n % 2 == 0:
            raise ValueError("n must be odd and at least 3")
        m = (n + 1) // 2
        if gcd(lam, m) != 1 or lam % m == 0:
            raise ValueError(f"lambda={lam} must be coprime to m={m} and not divisible by it")
        self.n = n
        self.m = m
        self.lam = lam
        self.field = field
        self.lambda_bound_ok = lam > n * (n + 1) * m
        if not self.lambda_bound_ok:
            warnings.warn(f"lambda={lam} <= n(n+1)m={n * (n + 1) * m}", stacklevel=2)
        self.ctx = SigmaContext((n, n + 1, n + 2))
        self.ring = Ring(3, field)
        self._rho = None

    def __repr__(self):
        return f"MohParams(n={self.n}, lam={self.lam}, field={self.field!r})"

    def parametrization(self):
        if self._rho is None:
            t_ring = Ring(1, self.field)
            n, m, lam = self.n, self.m, self.lam
            x = t_ring.monomial((n * m,)) + t_ring.monomial((n * m + lam,))
            y = t_ring.monomial(((n + 1) * m,))
            z = t_ring.monomial(((n + 2) * m,))
            self._rho = Parametrization([x, y, z], self.ctx, scale=m)
        return self._rho


@dataclass
class KernelCertificate:
    f: Polynomial
    image: Polynomial
    sord: int

    def check(self, rho):
        return evaluate(rho, self.f).is_zero()


def kernel_certificate(mp, f):
    rho = mp.parametrization() if isinstance(mp, MohParams) else mp
    image = evaluate(rho, f)
    if f.is_zero() or not image.is_zero():
        raise InternalError(f"{f} is not a nonzero kernel element")
    return KernelCertificate(f, image, rho.ctx.sord(f))


def vr_upper_bound(mp, r):
    """Basis of the solution space of the two surviving constraints on W_r.

    Vectors are coordinates on ``w_basis(ctx, r)``; their span contains V_r.
    """
    if r < 1 or not contains(mp.ctx.semigroup, r):
        raise NotInSemigroup(f"{r} is not a positive element of {mp.ctx.semigroup}")
    F = mp.field
    basis = w_basis(mp.ctx, r)
    rows = [[lucas_binomial(alpha[0], k, F) for alpha in basis] for k in range(VR_CONSTRAINT_ROWS)]
    return nullspace(Matrix(rows, F, cols=len(basis)))


def vector_to_poly(ring, monos, vec):
    F = ring.field
    return Polynomial(ring, {m: c for m, c in zip(monos, vec) if not F.is_zero(c)})


class TailSpace:
    """Images of all monomials with sigma-order in (lo, hi], in semi-echelon form.

    Each distinct image is one column, represented by the preferred monomial
    (fewest x's, then lowest sigma-order, then ds-largest).  Pivots are the
    lowest t-exponents, so a full reduction gives a canonical residual.
    """

    def __init__(self, rho, ring, lo, hi):
        self.rho = rho
        self.ring = ring
        self.F = rho.field
        monos = []
        for s in range(lo + 1, hi + 1):
            monos.extend(w_basis(rho.ctx, s))
        monos.sort(key=lambda a: (a[0], rho.ctx.weight(a), sum(a), tuple(reversed(a))))
        seen = {}
        self.columns = []
        for alpha in monos:
            img = rho.monomial_image(alpha)
            key = tuple(sorted(img.items()))
            if key in seen:
                continue
            seen[key] = len(self.columns)
            self.columns.append(alpha)
        self.pivots = {}
        for j, alpha in enumerate(self.columns):
            self._insert(dict(rho.monomial_image(alpha)), j)

    def _insert(self, vec, j):
        F = self.F
        residual, sub = self.reduce(vec)
        if not residual:
            return
        trace = {j: F.one}
        for col, c in sub.items():
            trace[col] = F.sub(trace.get(col, F.zero), c)
        p = min(residual)
        inv = F.inv(residual[p])
        residual = {k: F.mul(inv, v) for k, v in residual.items()}
        trace = {k: F.mul(inv, v) for k, v in trace.items() if not F.is_zero(v)}
        self.pivots[p] = (residual, trace)

    def reduce(self, vec):
        """Return (residual, sub) with vec == residual + sum(sub[j] * column_j)."""
        F = self.F
        v = dict(vec)
        sub = {}
        heap = list(v)
        heapq.heapify(heap)
        done = set()
        while heap:
            e = heapq.heappop(heap)
            if e in done or e not in v:
                continue
            done.add(e)
            if e not in self.pivots:
                continue
            c = v[e]
            pvec, ptrace = self.pivots[e]
            for k, val in pvec.items():
                new = F.sub(v.get(k, F.zero), F.mul(c, val))
                if F.is_zero(new):
                    v.pop(k, None)
                else:
                    if k not in v:
                        heapq.heappush(heap, k)
                    v[k] = new
            for col, val in ptrace.items():
                new = F.add(sub.get(col, F.zero), F.mul(c, val))
                if F.is_zero(new):
                    sub.pop(col, None)
                else:
                    sub[col] = new
        return v, sub

    def tail_for(self, image):
        """Tail h with rho(h) == -image, or None when image is out of reach."""
        residual, sub = self.reduce(image)
        if residual:
            return None
        F = self.F
        return Polynomial(self.ring, {self.columns[j]: F.neg(c) for j, c in sub.items()})


def default_tail_bound(r):
    return 4 * r + 10


def complete_tail(mp, g, max_sord):
    """A tail h of higher sigma-order with rho(g + h) == 0."""
    if g.is_zero():
        raise ZeroPolynomial("cannot complete the zero polynomial")
    ctx = mp.ctx
    if not is_sigma_homogeneous(ctx, g):
        raise NotSigmaHomogeneous(f"{g} is not sigma-homogeneous")
    r = ctx.sord(g)
    rho = mp.parametrization()
    space = TailSpace(rho, g.ring, r, max_sord)
    h = space.tail_for(rho.image_dict(g))
    if h is None:
        raise NoSolutionWithinBound(f"no tail for {g} with sigma-order <= {max_sord}")
    if not evaluate(rho, g + h).is_zero():
        raise InternalError("tail completion produced a non-kernel element")
    return h


@dataclass
class VrReport:
    """Upper and certified descriptions of V_r."""

    r: int
    monomials: list
    upper: list
    certified: list = dc_field(default_factory=list)
    certificates: list = dc_field(default_factory=list)

    @property
    def dim_upper(self):
        return len(self.upper)

    @property
    def dim_certified(self):
        return len(self.certified)

    @property
    def exact(self):
        return self.dim_upper == self.dim_certified


def certified_vr(mp, r, max_sord=None):
    """Bound V_r from above (two constraints) and below (completed tails).

    The certified part is the subspace of W_r whose elements admit a tail of
    sigma-order at most ``max_sord``; each basis vector comes with a kernel
    certificate.
    """
    if max_sord is None:
        max_sord = default_tail_bound(r)
    monos = w_basis(mp.ctx, r)
    upper = vr_upper_bound(mp, r)
    report = VrReport(r, monos, upper)
    if not upper:
        return report
    F = mp.field
    rho = mp.parametrization()
    space = TailSpace(rho, mp.ring, r, max_sord)
    reduced = [space.reduce(rho.monomial_image(alpha)) for alpha in monos]
    exps = sorted({k for res, _ in reduced for k in res})
    rows = [[res.get(k, F.zero) for res, _ in reduced] for k in exps]
    vectors = nullspace(Matrix(rows, F, cols=len(monos))) if exps else _identity(len(monos), F)
    for vec in vectors:
        g = vector_to_poly(mp.ring, monos, vec)
        sub = {}
        for c, (_, s) in zip(vec, reduced):
            if F.is_zero(c):
                continue
            for j, v in s.items():
                sub[j] = F.add(sub.get(j, F.zero), F.mul(c, v))
        h = Polynomial(mp.ring, {space.columns[j]: F.neg(v) for j, v in sub.items()})
        cert = kernel_certificate(mp, g + h)
        report.certified.append(vec)
        report.certificates.append(cert)
    return report


def _identity(n, F):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def find_min_sigma_order(mp, r_max, max_sord=None):
    """Smallest r <= r_max carrying a kernel element, with its certificate."""
    for r in range(1, r_max + 1):
        if not contains(mp.ctx.semigroup, r):
            continue
        if not vr_upper_bound(mp, r):
            continue
        report = certified_vr(mp, r, max_sord if max_sord is not None else default_tail_bound(r))
        if report.certificates:
            return r, report.certificates[0]
    raise NotFoundWithinBound(f"no kernel element of sigma-order <= {r_max} found")


def min_sigma_order_is_exact(mp, s):
    """True when every r < s has a zero upper bound, so s is provably minimal."""
    return all(
        not contains(mp.ctx.semigroup, r) or not vr_upper_bound(mp, r) for r in range(1, s)
    )
