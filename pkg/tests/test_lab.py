import pytest

from mohlab import Matrix, evaluate, lower_bound, moh_generators, sally_reduction_check, verify_minimal_generation
from mohlab.errors import UnsupportedCharacteristic
from mohlab.lab import (
    MohFixture,
    conductor_witness,
    cross_characteristic_check,
    membership_obstruction,
    slice_length,
)
from mohlab.param import vr_upper_bound
from mohlab.sigma import sigma_order_and_split, w_basis


@pytest.mark.parametrize("c, count", [(0, 4), (2, 2), (3, 3), (5, 4), (7, 4), (11, 4)])
def test_fixture_generators_are_kernel_elements(c, count):
    fx = moh_generators(c)
    assert len(fx.generators) == count
    rho = fx.params.parametrization()
    assert all(evaluate(rho, g).is_zero() for g in fx.generators)


def test_fixture_first_generators():
    assert str(moh_generators(0).generators[0]) == "3*y^3 - 4*x*y*z + x^4 - 3*y^3*z^5 - 2*x*y^6*z^2 - x^2*y^4*z^3"
    assert [str(g) for g in moh_generators(2).generators] == [
        "z^2 + x^2*y + y^5*z^3",
        "y^3 + x^4 + y^3*z^5 + x^2*y^4*z^3",
    ]
    # printed over F_3, -1 is 2
    assert str(moh_generators(3).generators[0]) == "y*z + 2*x^3 + 2*y^6*z^2 + x*y^4*z^3"


def test_unsupported_characteristic():
    with pytest.raises(UnsupportedCharacteristic):
        moh_generators(4)


@pytest.mark.parametrize(
    "c, s, bound, dims",
    [(0, 12, 3, (1, 1, 1)), (2, 10, 2, (1, 0, 1)), (3, 9, 1, (1, 0, 0)), (5, 12, 3, (1, 1, 1))],
)
def test_lower_bound(c, s, bound, dims):
    lb = lower_bound(characteristic=c)
    assert (lb.s, lb.bound, lb.xi) == (s, bound, 3)
    assert tuple(rep.dim_certified for rep in lb.per_r.values()) == dims
    assert all(rep.exact for rep in lb.per_r.values())
    assert lb.s_exact


@pytest.mark.parametrize("c", [0, 2, 3])
def test_sigma_forms_of_generators_lie_in_upper_bounds(c):
    fx = moh_generators(c)
    ctx, F = fx.params.ctx, fx.params.field
    for g in fx.generators:
        split = sigma_order_and_split(ctx, g)
        coords = [split.sigma_part.terms.get(m, F.zero) for m in w_basis(ctx, split.sord)]
        upper = vr_upper_bound(fx.params, split.sord)
        assert upper and Matrix(upper, F).rank() == Matrix(upper + [coords], F).rank()


@pytest.mark.parametrize("c, mu", [(0, 4), (2, 2), (3, 3), (5, 4), (7, 4)])
def test_verify_minimal_generation(c, mu):
    cert = verify_minimal_generation(moh_generators(c))
    data = cert.to_json()
    assert data["verdict"] == "pass", data["reasons"]
    assert data["mu"] == mu
    assert data["lengths"] == {"ideal_side": 8, "valuation_side": 8}
    assert data["kernel_ok"]
    assert set(data) >= {"characteristic", "generators", "kernel_ok", "lengths", "lower_bound",
                         "per_r", "obstructions", "mu", "verdict"}


def test_char3_obstructions():
    data = verify_minimal_generation(moh_generators(3)).to_json()
    assert [(o["generator"], o["prime"], o["witness"]) for o in data["obstructions"]] == [
        ("h2", "(x,y)", "z^3"),
        ("h3", "(x,z)", "y^4"),
    ]


def test_dropping_f4_fails():
    fx = moh_generators(0)
    broken = MohFixture(0, fx.names[:3], fx.generators[:3], fx.params)
    cert = verify_minimal_generation(broken)
    assert cert.verdict == "fail"
    assert cert.mu is None
    assert any("Artinian" in r or "length" in r for r in cert.reasons)


def test_non_kernel_generator_fails():
    fx = moh_generators(2)
    g1, g2 = fx.generators
    y = g1.ring.var(1)
    cert = verify_minimal_generation(MohFixture(2, ["g1", "y"], [g1, y], fx.params))
    assert cert.verdict == "fail" and not cert.kernel_ok


def test_slice_ideals():
    # the restricted leading ideals behind the three length computations
    assert sorted(slice_length(moh_generators(0).generators)[1]) == sorted([(4, 0), (1, 2), (3, 1), (0, 3)])
    assert sorted(slice_length(moh_generators(2).generators)[1]) == sorted([(0, 2), (4, 0)])
    assert sorted(slice_length(moh_generators(3).generators)[1]) == sorted([(3, 0), (2, 2), (0, 3)])


def test_membership_obstruction_none_when_impossible():
    g1, g2 = moh_generators(2).generators
    assert membership_obstruction([g1, g2], 0) == ((0, 1), (0, 0, 2))
    # a multiple of g1 lies in every prime containing g1
    assert membership_obstruction([g1, g1.ring.var(0) * g1], 1) is None


def test_sally_identities():
    assert len(sally_reduction_check(2)) == 5
    assert sally_reduction_check(3) == ["f1 = -x*h1", "f2 = -y*h1", "f3 = z*h1", "f4 = h2"]
    with pytest.raises(UnsupportedCharacteristic):
        sally_reduction_check(5)


@pytest.mark.parametrize("p", [2, 3])
def test_cross_characteristic(p):
    assert all(cross_characteristic_check(p).values())


def test_mu_values_across_characteristics():
    mus = {c: verify_minimal_generation(moh_generators(c)).mu for c in (0, 2, 3)}
    assert mus == {0: 4, 2: 2, 3: 3}


def test_conductor_witness():
    assert conductor_witness() == (11, 22, True)
