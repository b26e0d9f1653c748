"""Isomorphism classes of nilpotent laws in dimension <= 4.

Complex classification (labels J*_*) follows the case analysis on the
characteristic sequence:

* dim <= 2: decided by the nilindex.
* dim 3: decided by (characteristic sequence, center dimension).
* dim 4, s = (4): a single class.
* dim 4, s = (3,1): center dimension 2 gives J4_7; otherwise the law is
  reduced to a normal form with parameters (alpha, beta, gamma) read off a
  characteristic basis, and the branch is decided by the nullity of alpha,
  alpha + gamma^2 and beta.  Square roots are never taken: every test is a
  nullity test, so it works over Q(i) and over Q alike.
* dim 4, s = (2,2): decided by the nullity of delta = b + c^2/4 where
  phi(e3', e3') = b e2' + c e4' in a (2,2)-adapted basis.
* dim 4, s = (2,1,1): decided by the center dimension.

Real classification (labels R3_*) is provided for dimension 3 over Q; the
parameter of the (2,1) normal form is tested by sign, never normalised by a
square root.  Real dimension 4 is rejected as unsupported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NoCharBasisError,
    NotJordanError,
    NotNilpotentError,
    UnsupportedDimensionError,
)
from .invariants import (
    _numeric_block_partition,
    center,
    central_series_dims,
    char_sequence,
    sample_vectors,
)
from .linalg import kernel_basis, rank_field, row_space_basis
from .polymatrix import PolyMatrix
from .scalars import Scalar
from .tensors import (
    basis_vector,
    is_jordan,
    mult_operator,
    product,
    transform,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from .tensors import verify_isomorphism  # re-exported API  # noqa: F401

#: Every label the classifier can return.
CLASS_IDS = (
    "J1_ab",
    "J2_1", "J2_ab",
    "J3_1", "J3_2", "J3_3", "J3_ab",
    "J4_1", "J4_2", "J4_3", "J4_4", "J4_5", "J4_6",
    "J4_7", "J4_8", "J4_9", "J4_10", "J4_11", "J4_12", "J4_ab",
    "R3_1", "R3_2", "R3_3", "R3_4", "R3_5", "R3_ab",
)


def class_dim(label):
    if label not in CLASS_IDS:
        raise ValueError(f"unknown class label {label!r}")
    return int(label[1])


@dataclass(frozen=True)
class NormalForm31:
    """Parameters of the reduced (3,1) law with one-dimensional center:
    products e1*e1=e2, e1*e2=e3, e2*e4=gamma*e3, e4*e4=alpha*e2+beta*e3."""

    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    basis: PolyMatrix


def _candidate_vectors(phi):
    """Deterministic characteristic-vector candidates: samples outside the
    derived subalgebra, then shifted pairs x + a*y (the shift fallback)."""
    samples = sample_vectors(phi)
    for x in samples:
        yield x
    shifts = (Scalar(1), Scalar(-1), Scalar(2), Scalar(Fraction(1, 2)))
    head = samples[: min(len(samples), 8)]
    for x in head:
        for y in head:
            if x == y:
                continue
            for a in shifts:
                yield vec_add(x, vec_scale(y, a))


def _columns_matrix(cols):
    n = len(cols[0])
    return [[cols[j][i] for j in range(len(cols))] for i in range(n)]


def characteristic_basis(phi):
    """Invertible matrix whose columns realise the (3,1) adapted basis:
    a characteristic vector e1, e2 = e1*e1, e3 = e1*e2, and e4 completing
    from the kernel of L_{e1}.  Raises NoCharBasisError when the sampled
    search fails (or when the law does not have sequence (3,1))."""
    if phi.n != 4:
        raise NoCharBasisError("characteristic basis requires dimension 4")
    if char_sequence(phi) != (3, 1):
        raise NoCharBasisError("law does not have characteristic sequence (3,1)")
    n = 4
    for x in _candidate_vectors(phi):
        if vec_is_zero(x):
            continue
        try:
            if _numeric_block_partition(phi, x) != (3, 1):
                continue
        except NotNilpotentError:
            continue
        e2 = product(phi, x, x)
        e3 = product(phi, x, e2)
        if len(row_space_basis([x, e2, e3], n)) != 3:
            continue
        L = mult_operator(phi, x)
        ker = kernel_basis(L.entries, n)
        for e4 in _kernel_completions(ker):
            cols = [x, e2, e3, tuple(e4)]
            m = _columns_matrix(cols)
            if rank_field(m, n) != 4:
                continue
            psi = transform(phi, m)
            if _lemma_shape_ok(psi):
                return PolyMatrix(m)
    raise NoCharBasisError("no sampled characteristic vector yields the basis")


def _kernel_completions(ker):
    for v in ker:
        yield v
    if len(ker) >= 2:
        yield [a + b for a, b in zip(ker[0], ker[1])]


def _lemma_shape_ok(psi):
    """Shape of the adapted (3,1) basis: the four defining products plus
    zero products everywhere the reduced form requires them, with
    e2*e4 in <e3> and e4*e4 in <e2, e3>."""
    a = psi.a
    e2 = basis_vector(4, 2)
    e3 = basis_vector(4, 3)
    if tuple(a[0][0]) != e2 or tuple(a[0][1]) != e3:
        return False
    if not (vec_is_zero(a[0][2]) and vec_is_zero(a[0][3])):
        return False
    if not (vec_is_zero(a[1][1]) and vec_is_zero(a[1][2])):
        return False
    if not (vec_is_zero(a[2][2]) and vec_is_zero(a[2][3])):
        return False
    v24 = a[1][3]
    if not (v24[0].is_zero and v24[1].is_zero and v24[3].is_zero):
        return False
    v44 = a[3][3]
    if not (v44[0].is_zero and v44[3].is_zero):
        return False
    return True


def normal_form_31(phi):
    """Reduce a (3,1) law with one-dimensional center to the parametric
    normal form and return its (alpha, beta, gamma)."""
    basis = characteristic_basis(phi)
    psi = transform(phi, basis)
    gamma = psi.a[1][3][2]
    alpha = psi.a[3][3][1]
    beta = psi.a[3][3][2]
    return NormalForm31(alpha=alpha, beta=beta, gamma=gamma, basis=basis)


def _form_22(phi):
    """Adapted basis for s = (2,2): returns (b, c) with
    phi(e3', e3') = b*e2' + c*e4' where e2' = e1'^2, e4' = e1'*e3'."""
    n = 4
    for x in _candidate_vectors(phi):
        if vec_is_zero(x):
            continue
        try:
            if _numeric_block_partition(phi, x) != (2, 2):
                continue
        except NotNilpotentError:
            continue
        e2 = product(phi, x, x)
        if vec_is_zero(e2):
            continue
        for v in _candidate_vectors(phi):
            e4 = product(phi, x, v)
            cols = [x, e2, v, e4]
            m = _columns_matrix(cols)
            if rank_field(m, n) != 4:
                continue
            psi = transform(phi, m)
            if not _shape_22_ok(psi):
                continue
            b = psi.a[2][2][1]
            c = psi.a[2][2][3]
            return b, c
    raise NoCharBasisError("no (2,2)-adapted basis found")


def _shape_22_ok(psi):
    a = psi.a
    if tuple(a[0][0]) != basis_vector(4, 2):
        return False
    if tuple(a[0][2]) != basis_vector(4, 4):
        return False
    if not (vec_is_zero(a[0][1]) and vec_is_zero(a[0][3])):
        return False
    for (i, j) in ((1, 1), (1, 2), (1, 3), (2, 3), (3, 3)):
        if not vec_is_zero(a[i][j]):
            return False
    v33 = a[2][2]
    return v33[0].is_zero and v33[2].is_zero


def classify(phi):
    """Isomorphism class label of a nilpotent Jordan law of dimension <= 4,
    over the complex/Gaussian-rational field."""
    n = phi.n
    if n > 4:
        raise UnsupportedDimensionError(f"classification supports n <= 4, got {n}")
    if not phi.symmetric or not is_jordan(phi):
        raise NotJordanError("law does not satisfy the power identity")
    dims = central_series_dims(phi)
    if dims[-1] != 0:
        raise NotNilpotentError("law is not nilpotent")
    if phi.is_zero:
        return f"J{n}_ab"
    if n == 1:
        return "J1_ab"
    if n == 2:
        return "J2_1"
    if n == 3:
        s = char_sequence(phi)
        if s == (3,):
            return "J3_1"
        return "J3_2" if len(center(phi)) == 1 else "J3_3"
    s = char_sequence(phi)
    if s == (4,):
        return "J4_1"
    if s == (3, 1):
        if len(center(phi)) == 2:
            return "J4_7"
        nf = normal_form_31(phi)
        if not nf.alpha.is_zero:
            if not (nf.alpha + nf.gamma * nf.gamma).is_zero:
                return "J4_2"
            return "J4_3" if not nf.beta.is_zero else "J4_4"
        return "J4_5" if not nf.gamma.is_zero else "J4_6"
    if s == (2, 2):
        b, c = _form_22(phi)
        delta = b + c * c * Scalar(Fraction(1, 4))
        return "J4_8" if not delta.is_zero else "J4_9"
    if s == (2, 1, 1):
        zdim = len(center(phi))
        return {1: "J4_10", 2: "J4_11", 3: "J4_12"}[zdim]
    raise NotJordanError(f"unexpected characteristic sequence {s}")  # pragma: no cover


def real_normal_form_21(phi):
    """Real (2,1) normal form in dimension 3: basis (x, x*x, w) with w in
    ker L_x, and the parameter a with phi(w, w) = a * (x*x).

    Returns (a, basis matrix), or None when every sampled characteristic
    vector has zero square (the reported fallback case)."""
    n = 3
    for x in _candidate_vectors(phi):
        if vec_is_zero(x):
            continue
        try:
            if _numeric_block_partition(phi, x) != (2, 1):
                continue
        except NotNilpotentError:
            continue
        e2 = product(phi, x, x)
        if vec_is_zero(e2):
            continue
        L = mult_operator(phi, x)
        ker = kernel_basis(L.entries, n)
        for w in _kernel_completions(ker):
            cols = [x, e2, tuple(w)]
            m = _columns_matrix(cols)
            if rank_field(m, n) != 3:
                continue
            psi = transform(phi, m)
            if not _shape_real_21_ok(psi):
                continue
            a = psi.a[2][2][1]
            return a, PolyMatrix(m)
    return None


def _shape_real_21_ok(psi):
    a = psi.a
    if tuple(a[0][0]) != basis_vector(3, 2):
        return False
    for (i, j) in ((0, 1), (0, 2), (1, 1), (1, 2)):
        if not vec_is_zero(a[i][j]):
            return False
    v33 = a[2][2]
    return v33[0].is_zero and v33[2].is_zero


def classify_real(phi):
    """Real isomorphism class of a rational three-dimensional nilpotent
    Jordan law.  The (2,1) branch decides by the sign of the normal-form
    parameter; when no sampled characteristic vector squares to a nonzero
    value the fallback label R3_4 is reported."""
    if phi.n != 3:
        raise UnsupportedDimensionError(
            "real classification is only available in dimension 3"
        )
    if phi.field_tag != "Q":
        raise UnsupportedDimensionError("real classification needs a field Q law")
    if not phi.symmetric or not is_jordan(phi):
        raise NotJordanError("law does not satisfy the power identity")
    dims = central_series_dims(phi)
    if dims[-1] != 0:
        raise NotNilpotentError("law is not nilpotent")
    if phi.is_zero:
        return "R3_ab"
    s = char_sequence(phi)
    if s == (3,):
        return "R3_1"
    nf = real_normal_form_21(phi)
    if nf is None:
        return "R3_4"
    a, _ = nf
    if a.is_zero:
        return "R3_3"
    return "R3_2" if a.re > 0 else "R3_5"
