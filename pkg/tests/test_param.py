import warnings

import pytest
from hypothesis import given, strategies as st

from conftest import exponents, polys
from mohlab import MohParams, QQ, complete_tail, evaluate, field_for, find_min_sigma_order, parse_poly, vr_upper_bound
from mohlab.errors import NoSolutionWithinBound, NotInSemigroup, NotSigmaHomogeneous, RingMismatch, ZeroPolynomial
from mohlab.param import TailSpace, certified_vr, kernel_certificate, min_sigma_order_is_exact, vector_to_poly
from mohlab.sigma import sigma_order_and_split, w_basis

MP = {c: MohParams(3, 25, field_for(c)) for c in (0, 2, 3, 5)}


def t(text, c=0):
    return parse_poly(text, d=1, field=field_for(c))


def p(text, c=0):
    return parse_poly(text, field=field_for(c))


def span_contains(vectors, target, F):
    from mohlab import Matrix

    if not vectors:
        return all(F.is_zero(v) for v in target)
    return Matrix(vectors, F).rank() == Matrix(vectors + [target], F).rank()


def test_images():
    rho = MP[0].parametrization()
    assert evaluate(rho, p("x")) == t("t^6 + t^31")
    assert evaluate(rho, p("y")) == t("t^8")
    assert evaluate(rho, p("3y^3-4xyz+x^4")) == t("6t^74+4t^99+t^124")
    assert evaluate(MP[2].parametrization(), p("z^2+x^2y", 2)) == t("t^70", 2)
    assert evaluate(MP[3].parametrization(), p("yz-x^3", 3)) == t("-t^93", 3)


@given(st.sampled_from([0, 2, 3, 5]), st.data())
def test_evaluate_is_ring_morphism(c, data):
    mp = MP[c]
    rho = mp.parametrization()
    f = data.draw(polys(mp.ring, max_terms=4, hi=3))
    g = data.draw(polys(mp.ring, max_terms=4, hi=3))
    assert evaluate(rho, f * g) == evaluate(rho, f) * evaluate(rho, g)
    assert evaluate(rho, f + g) == evaluate(rho, f) + evaluate(rho, g)


@given(exponents(hi=6))
def test_monomial_image_support(alpha):
    rho = MP[0].parametrization()
    r = MP[0].ctx.weight(alpha)
    img = rho.monomial_image(alpha)
    assert min(img) == 2 * r
    assert set(img) == {2 * r + 25 * k for k in range(alpha[0] + 1)}


def test_evaluate_ring_mismatch():
    with pytest.raises(RingMismatch):
        evaluate(MP[0].parametrization(), p("x", 2))


def test_params_validation():
    with pytest.raises(ValueError):
        MohParams(4)
    with pytest.raises(ValueError):
        MohParams(3, 24)
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        mp = MohParams(3, 23)
    assert not mp.lambda_bound_ok and w
    assert MohParams().lambda_bound_ok


def test_vr_upper_bound_known_values():
    F = QQ
    for r in (8, 9, 10, 11):
        assert vr_upper_bound(MP[0], r) == []
    (v,) = vr_upper_bound(MP[0], 12)
    assert [c / v[2] for c in v] == [3, -4, 1]
    (g,) = vr_upper_bound(MP[2], 10)
    assert vector_to_poly(MP[2].ring, w_basis(MP[2].ctx, 10), g) == p("z^2+x^2y", 2)
    assert vr_upper_bound(MP[2], 11) == []
    assert vr_upper_bound(MP[3], 10) == vr_upper_bound(MP[3], 11) == []
    with pytest.raises(NotInSemigroup):
        vr_upper_bound(MP[0], 2)


@pytest.mark.parametrize("c", [0, 2, 3, 5])
@pytest.mark.parametrize("r", range(3, 25))
def test_upper_bound_vectors_sum_to_zero(c, r):
    F = MP[c].field
    for v in vr_upper_bound(MP[c], r):
        acc = F.zero
        for a in v:
            acc = F.add(acc, a)
        assert F.is_zero(acc)


def test_complete_tail_examples():
    g = p("3y^3-4xyz+x^4")
    h = complete_tail(MP[0], g, 40)
    rho = MP[0].parametrization()
    assert evaluate(rho, g + h).is_zero()
    assert MP[0].ctx.sord(h) > 12
    # the printed tail is one valid witness among several
    assert evaluate(rho, g + p("-3y^3z^5-2xy^6z^2-x^2y^4z^3")).is_zero()
    g2 = p("z^2+x^2y", 2)
    assert evaluate(MP[2].parametrization(), g2 + complete_tail(MP[2], g2, 35)).is_zero()
    with pytest.raises(NoSolutionWithinBound):
        complete_tail(MP[0], p("x"), 60)
    with pytest.raises(NotSigmaHomogeneous):
        complete_tail(MP[0], p("x+y"), 40)
    with pytest.raises(ZeroPolynomial):
        complete_tail(MP[0], p("0"), 40)


def test_tail_space_reduction_identity():
    mp = MP[0]
    rho = mp.parametrization()
    space = TailSpace(rho, mp.ring, 12, 30)
    F = mp.field
    vec = rho.image_dict(p("3y^3-4xyz+x^4"))
    residual, sub = space.reduce(vec)
    rebuilt = dict(residual)
    for j, c in sub.items():
        for k, v in rho.monomial_image(space.columns[j]).items():
            rebuilt[k] = F.add(rebuilt.get(k, F.zero), F.mul(c, v))
    assert {k: v for k, v in rebuilt.items() if not F.is_zero(v)} == vec


@pytest.mark.parametrize("c, s", [(0, 12), (5, 12), (2, 10), (3, 9)])
def test_min_sigma_order(c, s):
    r, cert = find_min_sigma_order(MP[c], 20)
    assert r == s and cert.sord == s
    assert cert.check(MP[c].parametrization())
    assert min_sigma_order_is_exact(MP[c], s)
    # soundness: the certificate's sigma-form lies in the upper bound span
    split = sigma_order_and_split(MP[c].ctx, cert.f)
    coords = [split.sigma_part.terms.get(m, MP[c].field.zero) for m in w_basis(MP[c].ctx, s)]
    assert span_contains(vr_upper_bound(MP[c], s), coords, MP[c].field)


def test_certified_vr_char2_r12():
    rep = certified_vr(MP[2], 12)
    assert (rep.dim_upper, rep.dim_certified) == (1, 1) and rep.exact


def test_kernel_certificate_rejects_non_kernel():
    from mohlab.errors import InternalError

    with pytest.raises(InternalError):
        kernel_certificate(MP[0], p("y"))
    cert = kernel_certificate(MP[0], p("z^3 - 2xy^3 + x^2yz - y^5z^4"))
    assert cert.sord == 15 and cert.image.is_zero()
