"""Exact linear algebra over the Scalar field and over integral domains.

Field computations (row reduction, kernels, inverses) use ordinary Gaussian
elimination with exact division.  Rank over polynomial rings uses
fraction-free (Bareiss-style) elimination, whose divisions are exact in any
integral domain; this is what keeps multivariate entries from blowing up in
the generic-vector rank computations.
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .scalars import ZERO, ONE


def rref(rows, ncols=None):
    """Reduced row echelon form over the Scalar field.

    Returns (reduced nonzero rows, pivot column indices).
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    if ncols is None:
        ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if not m[i][c].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c].inverse()
        m[r] = [e * inv for e in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_field(rows, ncols=None):
    return len(rref(rows, ncols)[0])


def kernel_basis(rows, ncols):
    """Basis of {x : A x = 0} for A given by rows over Scalar."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis


def row_space_basis(vectors, ncols=None):
    """Canonical (RREF) basis of the span of the given vectors."""
    nonzero = [v for v in vectors if any(not e.is_zero for e in v)]
    reduced, _ = rref(nonzero, ncols)
    return reduced


def in_span(basis_rref, vector):
    """Membership test against an RREF basis."""
    v = list(vector)
    for row in basis_rref:
        lead = next(i for i, e in enumerate(row) if not e.is_zero)
        if not v[lead].is_zero:
            f = v[lead]
            v = [a - f * b for a, b in zip(v, row)]
    return all(e.is_zero for e in v)


def identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ZERO
            for l in range(k):
                if not a[i][l].is_zero and not b[l][j].is_zero:
                    s = s + a[i][l] * b[l][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    return [
        sum((a[i][j] * v[j] for j in range(len(v)) if not v[j].is_zero), ZERO)
        for i in range(len(a))
    ]


def invert_scalar_matrix(m):
    """Exact inverse of a square Scalar matrix; SingularMatrixError if none."""
    n = len(m)
    aug = [list(row) + ident_row for row, ident_row in zip(m, identity_matrix(n))]
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, n):
            if not aug[i][c].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [e * inv for e in aug[r]]
        for i in range(n):
            if i != r and not aug[i][c].is_zero:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def bareiss_rank(rows):
    """Rank by fraction-free elimination; entries from any integral domain
    exposing is_zero, +, -, * and exact_div (Scalar, MPoly, PuiseuxPoly)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    steps = min(nr, nc)
    rank = 0
    prev = None
    for k in range(steps):
        pivot = None
        for j in range(k, nc):
            for i in range(k, nr):
                if not m[i][j].is_zero:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            m[pi], m[k] = m[k], m[pi]
        if pj != k:
            for row in m:
                row[pj], row[k] = row[k], row[pj]
        p = m[k][k]
        for i in range(k + 1, nr):
            for j in range(k + 1, nc):
                num = p * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if prev is not None else num
            m[i][k] = m[i][k] - m[i][k]  # zero of the right ring
        prev = p
        rank += 1
    return rank


def bareiss_det(rows):
    """Fraction-free determinant of a square matrix over an integral domain."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    sign = 1
    prev = None
    for k in range(n - 1):
        pivot_row = None
        for i in range(k, n):
            if not m[i][k].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            return m[k][k] - m[k][k]  # structural zero of the ring
        if pivot_row != k:
            m[pivot_row], m[k] = m[k], m[pivot_row]
            sign = -sign
        p = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = p * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if prev is not None else num
        prev = p
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det
