"""The weighting x_i -> x_i^{n_i}: sigma-order, sigma-leading form, W_r."""

from dataclasses import dataclass

from mohlab.errors import DimensionMismatch, ZeroPolynomial
from mohlab.poly import Polynomial, ds_key
from mohlab.semigroup import NumericalSemigroup, factorizations


class SigmaContext:
    """Weights (n_1, ..., n_d) attached to the variables, in variable order."""

    def __init__(self, weights):
        self.weights = tuple(int(w) for w in weights)
        self.semigroup = NumericalSemigroup(self.weights)
        if len(set(self.weights)) != len(self.weights):
            raise ValueError("weights must be distinct")

    def __repr__(self):
        return f"SigmaContext{self.weights}"

    def __eq__(self, other):
        return isinstance(other, SigmaContext) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    @property
    def nvars(self):
        return len(self.weights)

    def weight(self, alpha):
        return sum(a * n for a, n in zip(alpha, self.weights))

    def sord(self, f):
        if f.is_zero():
            raise ZeroPolynomial("sigma-order of the zero polynomial")
        return min(self.weight(m) for m in f.terms)


@dataclass(frozen=True)
class SigmaSplit:
    sord: int
    sigma_part: Polynomial
    tail: Polynomial


def sigma_order_and_split(ctx, f):
    """Split f into its sigma-leading form (minimal weight part) and tail."""
    if f.is_zero():
        raise ZeroPolynomial("sigma-order of the zero polynomial")
    if f.ring.nvars != ctx.nvars:
        raise DimensionMismatch("ring and weights disagree on the number of variables")
    r = ctx.sord(f)
    lead, tail = {}, {}
    for m, c in f.terms.items():
        (lead if ctx.weight(m) == r else tail)[m] = c
    return SigmaSplit(r, Polynomial._raw(f.ring, lead), Polynomial._raw(f.ring, tail))


def is_sigma_homogeneous(ctx, f):
    return len({ctx.weight(m) for m in f.terms}) <= 1


def w_basis(ctx, r):
    """Monomials of weight r, descending in ds; the basis of W_r."""
    if r < 0:
        return []
    # factorizations are indexed by ascending generator; map back to variables
    order = sorted(range(ctx.nvars), key=lambda i: ctx.weights[i])
    monos = []
    for a in factorizations(ctx.semigroup, r):
        alpha = [0] * ctx.nvars
        for pos, i in enumerate(order):
            alpha[i] = a[pos]
        monos.append(tuple(alpha))
    return sorted(monos, key=ds_key, reverse=True)
