from fractions import Fraction

import pytest

from niljordan.atlas import canonical_tensor, load_atlas
from niljordan.errors import SingularMatrixError
from niljordan.linalg import mat_mul
from niljordan.scalars import Scalar
from niljordan.tensors import (
    StructureTensor,
    basis_vector,
    is_associative,
    is_jordan,
    jordan_defect,
    mult_operator,
    product,
    transform,
    vec_is_zero,
    vector,
    verify_isomorphism,
)
from util import random_invertible, random_vector, rng, tensor_from


def test_product_basics():
    phi1 = canonical_tensor("J3_1")
    e1 = basis_vector(3, 1)
    assert product(phi1, e1, e1) == basis_vector(3, 2)
    assert vec_is_zero(product(phi1, (Scalar(0),) * 3, e1))
    assert product(phi1, vector([1, 1, 0]), e1) == vector([0, 1, 1])


def test_product_symmetric_bilinear_random():
    r = rng(5)
    phi = canonical_tensor("J4_3")
    for _ in range(20):
        x, y = random_vector(r, 4), random_vector(r, 4)
        assert product(phi, x, y) == product(phi, y, x)
        two_x = tuple(c * Scalar(2) for c in x)
        assert product(phi, two_x, y) == tuple(c * Scalar(2) for c in product(phi, x, y))


def test_jordan_defect_examples():
    phi1 = canonical_tensor("J3_1")
    assert vec_is_zero(jordan_defect(phi1, basis_vector(3, 1), basis_vector(3, 2)))
    ab = StructureTensor.abelian(3)
    assert vec_is_zero(jordan_defect(ab, vector([1, 2, 3]), vector([3, 1, 1])))
    # e1*e1=e2, e1*e2=e1 fails: lhs = 0, rhs = e2
    bad = tensor_from(2, {(1, 1): {2: 1}, (1, 2): {1: 1}})
    d = jordan_defect(bad, basis_vector(2, 1), basis_vector(2, 1))
    assert d == vector([0, -1])
    assert not is_jordan(bad)


def test_is_jordan_examples():
    assert is_jordan(canonical_tensor("J4_2"))
    assert is_jordan(StructureTensor.abelian(4))
    for label, entry in load_atlas().items():
        assert is_jordan(entry.tensor), label


def test_jordan_defect_vanishes_on_random_vectors():
    r = rng(17)
    for label, entry in load_atlas().items():
        for _ in range(100):
            x = random_vector(r, entry.tensor.n)
            y = random_vector(r, entry.tensor.n)
            assert vec_is_zero(jordan_defect(entry.tensor, x, y)), label


def test_is_associative_examples():
    assert is_associative(canonical_tensor("J4_1"))
    assert not is_associative(canonical_tensor("J4_3"))
    assert is_associative(StructureTensor.abelian(3))


def test_transform_identity_and_scaling():
    phi = canonical_tensor("J4_5")
    ident = [[Scalar(1 if i == j else 0) for j in range(4)] for i in range(4)]
    assert transform(phi, ident) == phi
    # the dim-3 law with e3*e3 = 4*e2 rescales to the canonical J3_2 form
    start = tensor_from(3, {(1, 1): {2: 1}, (3, 3): {2: 4}})
    f = [[Scalar(1), Scalar(0), Scalar(0)],
         [Scalar(0), Scalar(1), Scalar(0)],
         [Scalar(0), Scalar(0), Scalar(Fraction(1, 2))]]
    assert transform(start, f) == canonical_tensor("J3_2")


def test_transform_real_surrogate_of_hyperbolic_law():
    # e1*e2 = e3 under E1 = e1+e2, E2 = 2e3, E3 = e1-e2 becomes
    # E1*E1 = E2, E3*E3 = -E2 with E1*E3 = 0: the R3_5 form.
    phi4 = tensor_from(3, {(1, 2): {3: 1}}, field_tag="Q")
    f = [[Scalar(1), Scalar(0), Scalar(1)],
         [Scalar(1), Scalar(0), Scalar(-1)],
         [Scalar(0), Scalar(2), Scalar(0)]]
    assert transform(phi4, f) == canonical_tensor("R3_5")


def test_transform_composes_contravariantly():
    r = rng(23)
    phi = canonical_tensor("J4_9")
    for _ in range(10):
        f = random_invertible(r, 4)
        g = random_invertible(r, 4)
        assert transform(transform(phi, f), g) == transform(phi, mat_mul(f, g))


def test_transform_singular_rejected():
    phi = canonical_tensor("J3_3")
    sing = [[Scalar(1), Scalar(1), Scalar(0)]] * 3
    with pytest.raises(SingularMatrixError):
        transform(phi, sing)


def test_flags_invariant_under_transform():
    r = rng(31)
    labels = ["J3_1", "J3_2", "J4_2", "J4_6", "J4_8", "J4_10"]
    for label in labels:
        phi = canonical_tensor(label)
        expected_assoc = is_associative(phi)
        for _ in range(50):
            psi = transform(phi, random_invertible(r, phi.n))
            assert is_jordan(psi), label
            assert is_associative(psi) == expected_assoc, label


def test_mult_operator_examples():
    phi1 = canonical_tensor("J3_1")
    L = mult_operator(phi1, basis_vector(3, 1))
    assert L.apply(basis_vector(3, 1)) == list(basis_vector(3, 2))
    assert L.apply(basis_vector(3, 2)) == list(basis_vector(3, 3))
    assert all(c.is_zero for c in L.apply(basis_vector(3, 3)))
    zero = mult_operator(phi1, (Scalar(0),) * 3)
    assert zero.rank() == 0
    phi8 = canonical_tensor("J4_8")
    L = mult_operator(phi8, vector([1, 0, 1, 0]))
    assert L.rank() == 2
    assert L.apply(basis_vector(4, 1)) == list(basis_vector(4, 2))
    assert L.apply(basis_vector(4, 3)) == list(basis_vector(4, 4))


def test_mult_operator_nilpotent_on_atlas():
    r = rng(41)
    for label, entry in load_atlas().items():
        phi = entry.tensor
        n = phi.n
        vecs = [basis_vector(n, i) for i in range(1, n + 1)]
        vecs += [random_vector(r, n) for _ in range(5)]
        for x in vecs:
            L = mult_operator(phi, x)
            power = L
            for _ in range(n - 1):
                power = power.matmul(L)
            assert power.rank() == 0, label


def test_verify_isomorphism():
    phi = canonical_tensor("J4_5")
    ident = [[Scalar(1 if i == j else 0) for j in range(4)] for i in range(4)]
    assert verify_isomorphism(phi, phi, ident)
    start = tensor_from(3, {(1, 1): {2: 1}, (3, 3): {2: 4}})
    f = [[Scalar(1), Scalar(0), Scalar(0)],
         [Scalar(0), Scalar(1), Scalar(0)],
         [Scalar(0), Scalar(0), Scalar(Fraction(1, 2))]]
    assert verify_isomorphism(start, canonical_tensor("J3_2"), f)
    ident4 = [[Scalar(1 if i == j else 0) for j in range(4)] for i in range(4)]
    assert not verify_isomorphism(
        canonical_tensor("J4_8"), canonical_tensor("J4_9"), ident4
    )


def test_symmetry_completion_and_bilinear():
    sym = tensor_from(3, {(1, 2): {3: 1}})
    assert sym.a[1][0] == sym.a[0][1]
    bil = StructureTensor.from_products(3, {(1, 2): {3: 1}}, bilinear=True)
    assert not bil.symmetric
    assert vec_is_zero(bil.a[1][0])
