from niljordan.atlas import canonical_tensor
from niljordan.deformations import (
    search_deformation_direction,
    specialize_at_one,
    verify_polynomial_deformation,
)
from niljordan.paperchecks import load_direction_fixture
from niljordan.tensors import StructureTensor
from util import tensor_from


def test_printed_deformation_families():
    mu1 = load_direction_fixture("mu1")
    mu2 = load_direction_fixture("mu2")
    r = verify_polynomial_deformation(canonical_tensor("J4_3"), mu1)
    assert r.jordan_family and r.t1_class == "J4_2" and not r.trivial
    assert all(r.inequalities.values())
    r = verify_polynomial_deformation(canonical_tensor("J4_4"), mu2)
    assert r.jordan_family and r.t1_class == "J4_3"
    r = verify_polynomial_deformation(canonical_tensor("J4_6"), mu1)
    assert r.jordan_family and r.t1_class == "J4_5"


def test_trivial_direction():
    zero = StructureTensor.abelian(4)
    r = verify_polynomial_deformation(canonical_tensor("J4_9"), [zero])
    assert r.jordan_family and r.trivial and r.t1_class == "J4_9"
    assert r.inequalities == {}


def test_not_jordan_family_reports_offending_coefficient():
    bad = tensor_from(4, {(1, 1): {3: 1}, (1, 3): {1: 1}})
    r = verify_polynomial_deformation(canonical_tensor("J4_8"), [bad])
    assert not r.jordan_family
    assert r.offending is not None
    assert r.offending["t_exponent"] >= 1
    assert not r.offending["coefficient"].is_zero


def test_specialize_at_one():
    mu1 = load_direction_fixture("mu1")
    spec = specialize_at_one(canonical_tensor("J4_3"), mu1)
    # (2,4) picks up the extra e3: coefficient becomes 2
    assert spec.a[1][3][2].re == 2


def test_quadratic_direction_blocks():
    mu1 = load_direction_fixture("mu1")[0]
    mu_sq = tensor_from(4, {(4, 4): {2: 1}})
    r = verify_polynomial_deformation(canonical_tensor("J4_5"), [mu1, mu_sq])
    # phi5 + t*mu1 + t^2*(e4*e4 -> e2): gamma = 1 + t, alpha = t^2: at t=1
    # alpha = 1, alpha + gamma^2 = 5 != 0, so the specialization is J4_2
    assert r.jordan_family and r.t1_class == "J4_2"


def test_direction_searches_find_j4_5():
    for label in ("J4_4", "J4_6"):
        found = search_deformation_direction(canonical_tensor(label), "J4_5")
        assert found is not None
        mu, report = found
        assert report.t1_class == "J4_5" and report.jordan_family
