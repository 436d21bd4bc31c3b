"""Mora division, standard bases for ds, and Artinian quotient lengths."""

from dataclasses import dataclass, field as dc_field
from itertools import product

from mohlab.errors import EmptyGeneratorList, InternalError, NotArtinian, ZeroPolynomial
from mohlab.poly import divides, ds_key, ecart, mono_div, spoly

STEP_CEILING = 10**6


@dataclass
class MoraStep:
    divisor: int  # index into the working list (originals first, then added)
    quotient: tuple  # (exponent vector, coefficient)
    added: bool  # h was appended to the working list before this step


@dataclass
class MoraTrace:
    """u * f == sum(a_i * g_i) + remainder, with LM(u) == 1."""

    f: object
    generators: list
    u: object
    quotients: list  # [(index into generators, a_i)]
    remainder: object
    extended_set: list = dc_field(default_factory=list)
    steps: list = dc_field(default_factory=list)

    def reconstruction_defect(self):
        """u*f - sum(a_i g_i) - h; the zero polynomial for a valid trace."""
        acc = self.u * self.f - self.remainder
        for i, a in self.quotients:
            acc = acc - a * self.generators[i]
        return acc

    def is_valid(self):
        if self.u is None:
            raise ValueError("trace was computed without cofactor tracking")
        return self.reconstruction_defect().is_zero() and self.u.lm() == (0,) * self.f.ring.nvars


def mora_normal_form(f, G, track=True):
    """Mora's weak normal form of f with respect to G, with its transcript.

    The working list starts as G.  At each step a divisor of LM(h) with
    minimal ecart is chosen (first one on ties); if its ecart exceeds that
    of h, h itself is appended to the working list before reducing.
    With ``track=False`` the cofactors u, a_i are not maintained (the trace
    then carries u = None and no quotients), which is much cheaper.
    """
    G = list(G)
    if not G:
        raise EmptyGeneratorList("Mora division needs at least one divisor")
    if any(g.is_zero() for g in G):
        raise ZeroPolynomial("divisors must be nonzero")
    ring = f.ring
    F = ring.field
    k = len(G)
    zero = ring.zero()

    # each working element w is stored with (u_w, B_w): w = u_w f + sum B_w[i] g_i
    working = []
    for i, g in enumerate(G):
        B = [zero] * k
        B[i] = ring.one()
        working.append((g, g.lm(), g.lc(), ecart(g), zero, B))

    h = f
    u = ring.one()
    B = [zero] * k
    extended = []
    steps = []
    count = 0
    while h:
        count += 1
        if count > STEP_CEILING:
            raise InternalError("Mora division exceeded the step ceiling")
        lm = h.lm()
        best = None
        for idx, (w, wlm, _, we, _, _) in enumerate(working):
            if divides(wlm, lm) and (best is None or we < working[best][3]):
                best = idx
        if best is None:
            break
        w, wlm, wlc, we, wu, wB = working[best]
        q_mono = mono_div(lm, wlm)
        q_coef = F.div(h.terms[lm], wlc)
        added = we > ecart(h)
        if added:
            working.append((h, lm, h.terms[lm], ecart(h), u, list(B)))
            extended.append(h)
        steps.append(MoraStep(best, (q_mono, q_coef), added))
        h = h.sub_mul_term(q_mono, q_coef, w)
        if not track:
            continue
        if wu:
            u = u.sub_mul_term(q_mono, q_coef, wu)
        B = [b.sub_mul_term(q_mono, q_coef, wb) if wb else b for b, wb in zip(B, wB)]

    if not track:
        return MoraTrace(f, G, None, [], h, extended, steps)
    quotients = [(i, -b) for i, b in enumerate(B) if b]
    return MoraTrace(f, G, u, quotients, h, extended, steps)


def nf_mora(f, G):
    return mora_normal_form(f, G, track=False).remainder


def leading_monomials(G):
    return [g.lm() for g in G if g]


def minimalize_monomials(monos):
    """Minimal generators of the monomial ideal, descending in ds."""
    monos = sorted(set(monos), key=ds_key, reverse=True)
    out = []
    for m in sorted(monos, key=sum):
        if not any(divides(a, m) for a in out):
            out.append(m)
    return sorted(out, key=ds_key, reverse=True)


@dataclass
class StandardBasis:
    elements: list
    source_ideal_generators: list

    def leading_ideal(self):
        return minimalize_monomials(leading_monomials(self.elements))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def standard_basis(G):
    """Complete G to a standard basis by adding nonzero S-pair remainders."""
    G = [g for g in G]
    if not G:
        raise EmptyGeneratorList("standard basis of an empty list")
    if any(g.is_zero() for g in G):
        raise ZeroPolynomial("generators must be nonzero")
    elements = list(G)
    pairs = [(i, j) for j in range(len(elements)) for i in range(j)]
    pairs.sort()
    while pairs:
        i, j = pairs.pop(0)
        r = nf_mora(spoly(elements[i], elements[j]), elements)
        if r:
            elements.append(r)
            n = len(elements) - 1
            pairs.extend((a, n) for a in range(n))
    return StandardBasis(elements, list(G))


@dataclass
class PairReport:
    i: int
    j: int
    spoly: object
    remainder: object


@dataclass
class StandardBasisCheck:
    ok: bool
    pairs: list

    def __bool__(self):
        return self.ok


def is_standard_basis(G):
    """Buchberger's criterion with Mora remainders, reported pair by pair."""
    G = list(G)
    if not G:
        raise EmptyGeneratorList("empty generator list")
    report = []
    for j in range(len(G)):
        for i in range(j):
            s = spoly(G[i], G[j])
            report.append(PairReport(i, j, s, nf_mora(s, G) if s else s))
    return StandardBasisCheck(all(p.remainder.is_zero() for p in report), report)


def standard_monomials(lead_ideal_gens, d):
    gens = [tuple(g) for g in lead_ideal_gens]
    if any(sum(g) == 0 for g in gens):
        return []
    bounds = []
    for i in range(d):
        pure = [g[i] for g in gens if g[i] > 0 and sum(g) == g[i]]
        if not pure:
            raise NotArtinian(f"no pure power of variable {i + 1} in the ideal")
        bounds.append(min(pure))
    return [
        alpha
        for alpha in product(*(range(b) for b in bounds))
        if not any(divides(g, alpha) for g in gens)
    ]


def artinian_length(lead_ideal_gens, d):
    """Number of monomials outside a monomial ideal containing a power of each variable."""
    return len(standard_monomials(lead_ideal_gens, d))
