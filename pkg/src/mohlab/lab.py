"""Moh's prime for n = 3: generator fixtures and the minimality pipeline."""

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from mohlab.errors import IdentityFailed, NotArtinian, UnsupportedCharacteristic
from mohlab.field import QQ, Matrix, field_for, is_prime
from mohlab.mora import artinian_length, nf_mora, standard_basis
from mohlab.param import (
    MohParams,
    certified_vr,
    evaluate,
    find_min_sigma_order,
    min_sigma_order_is_exact,
    vr_upper_bound,
)
from mohlab.poly import Ring, format_monomial
from mohlab.semigroup import NumericalSemigroup, contains, frobenius
from mohlab.sigma import sigma_order_and_split, w_basis

CHAR0_TEXT = {
    "f1": "3y^3 - 4xyz + x^4 - 3y^3z^5 - 2xy^6z^2 - x^2y^4z^3",
    "f2": "2y^2z - 3xz^2 + x^3y - 2y^7z^2 - xy^5z^3",
    "f3": "yz^2 - 3x^2y^2 + 2x^3z - y^6z^3 - 2xy^4z^4",
    "f4": "z^3 - 2xy^3 + x^2yz - y^5z^4",
}
CHAR2_TEXT = {
    "g1": "z^2 + x^2y + y^5z^3",
    "g2": "y^3 + x^4 + y^3z^5 + x^2y^4z^3",
}
CHAR3_TEXT = {
    "h1": "yz - x^3 - y^6z^2 + xy^4z^3",
    "h2": "z^3 + xy^3 + x^2yz - y^5z^4",
    "h3": "y^4 + xy^2z + x^2z^2 - y^4z^5",
}

# The slice variable used for the length comparison (index of y).
SLICE_VARIABLE = 1
SEARCH_LIMIT = 20


@dataclass
class MohFixture:
    characteristic: int
    names: list
    generators: list
    params: MohParams

    def by_name(self):
        return dict(zip(self.names, self.generators))


def fixture_texts(characteristic):
    if characteristic == 2:
        return CHAR2_TEXT
    if characteristic == 3:
        return CHAR3_TEXT
    return CHAR0_TEXT


def moh_generators(characteristic):
    """The known minimal generators of ker(rho) for n = 3, lambda = 25."""
    characteristic = int(characteristic)
    if characteristic != 0 and not is_prime(characteristic):
        raise UnsupportedCharacteristic(f"{characteristic} is neither 0 nor a prime")
    field = field_for(characteristic)
    mp = MohParams(3, 25, field)
    texts = fixture_texts(characteristic)
    gens = [mp.ring.parse(t) for t in texts.values()]
    rho = mp.parametrization()
    for name, g in zip(texts, gens):
        if g.is_zero() or not evaluate(rho, g).is_zero():
            raise UnsupportedCharacteristic(f"{name} is not in the kernel in characteristic {characteristic}")
    return MohFixture(characteristic, list(texts), gens, mp)


@dataclass
class LowerBound:
    bound: int
    s: int
    xi: int
    s_exact: bool
    per_r: dict  # r -> VrReport
    witness: object

    def dims(self):
        return {r: (rep.dim_upper, rep.dim_certified) for r, rep in self.per_r.items()}


def lower_bound(mp=None, characteristic=None, r_max=SEARCH_LIMIT):
    """Certified value of sum(dim V_{s+i}, i < xi) bounding mu(P) from below."""
    if mp is None:
        mp = MohParams(3, 25, field_for(characteristic or 0))
    xi = min(mp.ctx.weights)
    s, witness = find_min_sigma_order(mp, r_max)
    per_r = {}
    for r in range(s, s + xi):
        if contains(mp.ctx.semigroup, r):
            per_r[r] = certified_vr(mp, r)
    bound = sum(rep.dim_certified for rep in per_r.values())
    return LowerBound(bound, s, xi, min_sigma_order_is_exact(mp, s), per_r, witness)


def _outside_prime(f, subset):
    """A monomial of f using no variable of ``subset`` (so f is not in (x_S))."""
    for m in f.sorted_terms():
        if all(m[0][i] == 0 for i in subset):
            return m[0]
    return None


def membership_obstruction(gens, index):
    """A monomial prime containing every generator except gens[index].

    Returns (variables, witness monomial) or None.
    """
    d = gens[index].ring.nvars
    others = [g for k, g in enumerate(gens) if k != index]
    for size in range(1, d):
        for subset in combinations(range(d), size):
            if any(_outside_prime(g, subset) is not None for g in others):
                continue
            witness = _outside_prime(gens[index], subset)
            if witness is not None:
                return subset, witness
    return None


def slice_length(gens, slice_var=SLICE_VARIABLE):
    """length R/(I + (y)) through the leading ideal of a standard basis."""
    ring = gens[0].ring
    sb = standard_basis(list(gens) + [ring.var(slice_var)])
    lead = sb.leading_ideal()
    keep = [i for i in range(ring.nvars) if i != slice_var]
    restricted = [tuple(m[i] for i in keep) for m in lead if m[slice_var] == 0]
    return artinian_length(restricted, len(keep)), restricted


@dataclass
class MinimalityCertificate:
    characteristic: int
    generators: list
    names: list
    mu_claimed: int
    kernel_ok: bool = False
    length_modulo_y_ideal: object = None
    valuation_of_y: object = None
    slice_ideal: list = dc_field(default_factory=list)
    lower: object = None
    window_witnesses: dict = dc_field(default_factory=dict)
    membership_obstructions: list = dc_field(default_factory=list)
    mu: object = None
    reasons: list = dc_field(default_factory=list)

    @property
    def passed(self):
        return not self.reasons and self.mu == self.mu_claimed

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def to_json(self):
        names = ["x", "y", "z"]
        per_r = {}
        if self.lower is not None:
            per_r = {
                str(r): {"dim_upper": rep.dim_upper, "dim_certified": rep.dim_certified}
                for r, rep in self.lower.per_r.items()
            }
        return {
            "characteristic": self.characteristic,
            "generators": [str(g) for g in self.generators],
            "kernel_ok": self.kernel_ok,
            "lengths": {
                "ideal_side": self.length_modulo_y_ideal,
                "valuation_side": self.valuation_of_y,
            },
            "lower_bound": self.lower.bound if self.lower is not None else None,
            "s": self.lower.s if self.lower is not None else None,
            "per_r": per_r,
            "obstructions": [
                {
                    "generator": name,
                    "prime": "(" + ",".join(names[i] for i in subset) + ")",
                    "witness": format_monomial(witness, names) or "1",
                }
                for name, subset, witness in self.membership_obstructions
            ],
            "mu": self.mu,
            "verdict": self.verdict,
            "reasons": list(self.reasons),
        }


def verify_minimal_generation(fixture):
    """Check that the fixture's generators minimally generate ker(rho).

    Legs: kernel membership; length of R/(I + yR) from a standard basis;
    the valuation ord_t rho(y); the sigma-order lower bound with the
    generators lying in the window [s, s + xi); monomial-prime
    obstructions for the remaining generators.
    """
    mp = fixture.params
    gens = list(fixture.generators)
    names = list(fixture.names)
    rho = mp.parametrization()
    cert = MinimalityCertificate(fixture.characteristic, gens, names, len(gens))

    cert.kernel_ok = all(not g.is_zero() and evaluate(rho, g).is_zero() for g in gens)
    if not cert.kernel_ok:
        cert.reasons.append("some generator is not in the kernel")

    try:
        cert.length_modulo_y_ideal, cert.slice_ideal = slice_length(gens)
    except NotArtinian as exc:
        cert.reasons.append(f"R/(I+yR) is not Artinian: {exc}")
    cert.valuation_of_y = evaluate(rho, mp.ring.var(SLICE_VARIABLE)).order()
    if cert.length_modulo_y_ideal is not None and cert.length_modulo_y_ideal != cert.valuation_of_y:
        cert.reasons.append(
            f"length mismatch: {cert.length_modulo_y_ideal} != {cert.valuation_of_y}"
        )

    lb = lower_bound(mp)
    cert.lower = lb
    if not lb.s_exact:
        cert.reasons.append(f"minimal sigma-order {lb.s} is not certified")

    # generators whose sigma-leading forms sit in V_s .. V_{s+xi-1}
    ctx = mp.ctx
    window = {}
    for name, g in zip(names, gens):
        split = sigma_order_and_split(ctx, g)
        if lb.s <= split.sord < lb.s + lb.xi:
            window.setdefault(split.sord, []).append((name, split.sigma_part))
    independent = set()
    for r, items in window.items():
        monos = w_basis(ctx, r)
        rows = [[p.terms.get(m, mp.field.zero) for m in monos] for _, p in items]
        if Matrix(rows, mp.field, cols=len(monos)).rank() == len(items):
            independent.update(name for name, _ in items)
        else:
            cert.reasons.append(f"sigma-leading forms at order {r} are dependent")
    cert.window_witnesses = {r: [name for name, _ in items] for r, items in window.items()}

    for k, name in enumerate(names):
        if name in independent:
            continue
        ob = membership_obstruction(gens, k)
        if ob is None:
            cert.reasons.append(f"no obstruction certifies that {name} is irredundant")
        else:
            cert.membership_obstructions.append((name, ob[0], ob[1]))

    if lb.bound > len(gens):
        cert.reasons.append(f"lower bound {lb.bound} exceeds the number of generators")
    if not cert.reasons:
        cert.mu = len(gens)
    return cert


def conductor_witness(limit=200):
    """Frobenius data of <4,5> behind the integral-closure step.

    Returns (F, 2F, ok) where ok says every even number above 2F up to
    ``limit`` is twice an element of <4,5>.
    """
    S = NumericalSemigroup((4, 5))
    F = frobenius(S)
    ok = all(contains(S, e // 2) for e in range(2 * F + 2, limit + 1, 2))
    ok = ok and not contains(S, F)
    return F, 2 * F, ok


def sally_reduction_check(p):
    """Verify the mod-p factorization identities between the char-0 and char-p generators."""
    if p not in (2, 3):
        raise UnsupportedCharacteristic("Sally reduction identities exist for p = 2 and 3 only")
    field = field_for(p)
    ring = Ring(3, field)
    x, y, z = ring.gens()
    fbar = {name: ring.parse(text) for name, text in CHAR0_TEXT.items()}
    if p == 2:
        g = {name: ring.parse(text) for name, text in CHAR2_TEXT.items()}
        identities = [
            ("f1 = g2", fbar["f1"], g["g2"]),
            ("f2 = x*g1", fbar["f2"], x * g["g1"]),
            ("f3 = y*g1", fbar["f3"], y * g["g1"]),
            ("f4 = z*g1", fbar["f4"], z * g["g1"]),
        ]
    else:
        h = {name: ring.parse(text) for name, text in CHAR3_TEXT.items()}
        identities = [
            ("f1 = -x*h1", fbar["f1"], -(x * h["h1"])),
            ("f2 = -y*h1", fbar["f2"], -(y * h["h1"])),
            ("f3 = z*h1", fbar["f3"], z * h["h1"]),
            ("f4 = h2", fbar["f4"], h["h2"]),
        ]
    verified = []
    for label, lhs, rhs in identities:
        if lhs != rhs:
            raise IdentityFailed(f"{label} fails mod {p}: {lhs} != {rhs}")
        verified.append(label)
    if p == 2:
        # the sigma-form z^2 + x^2y of g1 is not a leading form over Q
        if vr_upper_bound(MohParams(3, 25, QQ), 10):
            raise IdentityFailed("V_10 over Q is not zero")
        verified.append("V_10 = 0 over Q")
    return verified


def cross_characteristic_check(p):
    """Reduce the char-0 generators mod p and reduce them by the char-p standard basis."""
    fixture = moh_generators(p)
    sb = standard_basis(fixture.generators)
    ring = fixture.params.ring
    out = {}
    for name, text in CHAR0_TEXT.items():
        f = ring.parse(text)
        out[name] = nf_mora(f, sb.elements).is_zero()
    return out
