import pytest

from niljordan.atlas import canonical_tensor, load_atlas
from niljordan.classify import (
    characteristic_basis,
    classify,
    classify_real,
    normal_form_31,
)
from niljordan.errors import (
    NoCharBasisError,
    NotJordanError,
    NotNilpotentError,
    UnsupportedDimensionError,
)
from niljordan.invariants import profile
from niljordan.polymatrix import PolyMatrix
from niljordan.scalars import Scalar
from niljordan.tensors import StructureTensor, basis_vector, transform, vec_is_zero
from util import random_invertible, random_transform_of, rng, tensor_from

COMPLEX_LABELS = [
    "J1_ab", "J2_1", "J2_ab",
    "J3_1", "J3_2", "J3_3", "J3_ab",
    "J4_1", "J4_2", "J4_3", "J4_4", "J4_5", "J4_6",
    "J4_7", "J4_8", "J4_9", "J4_10", "J4_11", "J4_12", "J4_ab",
]
REAL_LABELS = ["R3_1", "R3_2", "R3_3", "R3_5", "R3_ab"]


def test_canonical_forms_classify_to_themselves():
    for label in COMPLEX_LABELS:
        assert classify(canonical_tensor(label)) == label
    for label in REAL_LABELS:
        assert classify_real(canonical_tensor(label)) == label


def test_r4_canonical_tensor_computes_as_r5():
    # The hyperbolic law e1*e2 = e3 is rationally isomorphic to the R3_5
    # form (basis e1+e2, 2e3, e1-e2), so the computed real class is R3_5.
    assert classify_real(canonical_tensor("R3_4")) == "R3_5"


def test_classify_stable_under_random_transforms():
    r = rng(101)
    for label in ("J4_3", "J4_5", "J4_8", "J4_9", "J4_10", "J3_2"):
        phi = canonical_tensor(label)
        for _ in range(10):
            assert classify(random_transform_of(r, phi)) == label


def test_classify_errors():
    with pytest.raises(UnsupportedDimensionError):
        classify(StructureTensor.abelian(5))
    bad = tensor_from(2, {(1, 1): {2: 1}, (1, 2): {1: 1}})
    with pytest.raises(NotJordanError):
        classify(bad)
    idem = tensor_from(1, {(1, 1): {1: 1}})
    with pytest.raises(NotNilpotentError):
        classify(idem)
    with pytest.raises(UnsupportedDimensionError):
        classify_real(StructureTensor.abelian(4, field_tag="Q"))


def test_zero_tensor_classifies_abelian():
    for n in (1, 2, 3, 4):
        assert classify(StructureTensor.abelian(n)) == f"J{n}_ab"


def test_dim3_example_from_squaring():
    phi = tensor_from(3, {(1, 1): {2: 1}, (1, 3): {2: Scalar(1) / Scalar(2)},
                          (3, 3): {2: 1}})
    assert classify(phi) == "J3_2"


def test_characteristic_basis_canonical_phi5_is_identity():
    m = characteristic_basis(canonical_tensor("J4_5"))
    ident = PolyMatrix([[Scalar(1 if i == j else 0) for j in range(4)] for i in range(4)])
    assert m == ident


def test_characteristic_basis_on_transformed_law():
    r = rng(107)
    phi = canonical_tensor("J4_2")
    psi = random_transform_of(r, phi)
    m = characteristic_basis(psi)
    chi = transform(psi, m)
    e2, e3 = basis_vector(4, 2), basis_vector(4, 3)
    assert tuple(chi.a[0][0]) == e2
    assert tuple(chi.a[0][1]) == e3
    assert vec_is_zero(chi.a[0][2]) and vec_is_zero(chi.a[0][3])


def test_characteristic_basis_rejects_wrong_sequence():
    with pytest.raises(NoCharBasisError):
        characteristic_basis(canonical_tensor("J4_8"))


def test_normal_form_parameters_of_canonical_laws():
    nf = normal_form_31(canonical_tensor("J4_2"))
    assert (nf.alpha, nf.beta, nf.gamma) == (Scalar(1), Scalar(0), Scalar(0))
    nf = normal_form_31(canonical_tensor("J4_3"))
    assert (nf.alpha, nf.beta, nf.gamma) == (Scalar(-1), Scalar(-1), Scalar(1))
    nf = normal_form_31(canonical_tensor("J4_4"))
    assert (nf.alpha, nf.beta, nf.gamma) == (Scalar(-1), Scalar(0), Scalar(1))
    nf = normal_form_31(canonical_tensor("J4_6"))
    assert nf.alpha.is_zero and nf.gamma.is_zero and not nf.beta.is_zero


def test_alpha_nullity_invariant():
    r = rng(113)
    for label, null in (("J4_2", False), ("J4_3", False), ("J4_4", False), ("J4_5", True)):
        phi = canonical_tensor(label)
        for _ in range(17):
            nf = normal_form_31(random_transform_of(r, phi))
            assert nf.alpha.is_zero == null, label


def test_profile_degenerate_pair_is_separated_by_alpha():
    # J4_3 and J4_5 share the full invariant profile; the alpha test decides.
    p3 = profile(canonical_tensor("J4_3"))
    p5 = profile(canonical_tensor("J4_5"))
    assert p3 == p5
    r = rng(127)
    for _ in range(5):
        assert classify(random_transform_of(r, canonical_tensor("J4_3"))) == "J4_3"
        assert classify(random_transform_of(r, canonical_tensor("J4_5"))) == "J4_5"


def test_distinct_classes_have_distinct_profiles_except_the_pair():
    atlas = load_atlas()
    labels = [l for l in atlas if l.startswith("J4")]
    for a in labels:
        for b in labels:
            if a < b and atlas[a].expected_profile == atlas[b].expected_profile:
                assert {a, b} == {"J4_3", "J4_5"}


def test_delta_nullity_invariant_for_22():
    r = rng(131)
    for label in ("J4_8", "J4_9"):
        phi = canonical_tensor(label)
        for _ in range(25):
            assert classify(random_transform_of(r, phi)) == label


def test_real_classification_stable():
    r = rng(137)
    for label in ("R3_2", "R3_3", "R3_5"):
        phi = canonical_tensor(label)
        for _ in range(8):
            f = random_invertible(r, 3)
            assert classify_real(transform(phi, f)) == label
