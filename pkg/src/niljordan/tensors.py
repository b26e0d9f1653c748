"""Structure tensors and the basic operations on bilinear laws.

A law on an n-dimensional space is stored densely as structure constants
a[i][j], each an n-vector of Scalars giving the coordinates of e_i * e_j.
Jordan laws are symmetric (a[i][j] == a[j][i]); the associative registries
also store nonsymmetric bilinear laws in the same container.

The identity x^2 * (x * y) = x * (x^2 * y), cubic in x and linear in y, is
checked on a finite polarization set of basis-vector sums; the sufficiency
argument lives in docs/jordan_identity_check.md.
"""

from __future__ import annotations

from math import gcd

from .errors import DimensionMismatchError
from .linalg import invert_scalar_matrix, mat_vec
from .polymatrix import PolyMatrix
from .scalars import Scalar, ZERO, ONE, _coerce


def basis_vector(n, i):
    """1-indexed basis vector e_i as a Scalar tuple."""
    return tuple(ONE if k == i - 1 else ZERO for k in range(n))


def zero_vector(n):
    return (ZERO,) * n


def vector(coords):
    """Coerce a sequence of ints/Fractions/Scalars to a Scalar tuple."""
    out = []
    for c in coords:
        s = c if isinstance(c, Scalar) else _coerce(c)
        if s is None:
            raise TypeError(f"bad vector coordinate {c!r}")
        out.append(s)
    return tuple(out)


def vec_is_zero(v):
    return all(c.is_zero for c in v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(v, c):
    return tuple(a * c for a in v)


class StructureTensor:
    """Structure constants of a bilinear law on an n-dimensional space."""

    __slots__ = ("n", "field_tag", "a", "symmetric", "_key")

    def __init__(self, n, a, field_tag="Qi"):
        if not 1 <= n <= 8:
            raise DimensionMismatchError(f"dimension {n} outside supported 1..8")
        if field_tag not in ("Q", "Qi"):
            raise ValueError(f"unknown field tag {field_tag!r}")
        self.n = n
        self.field_tag = field_tag
        self.a = tuple(tuple(tuple(row) for row in plane) for plane in a)
        if len(self.a) != n or any(
            len(plane) != n or any(len(v) != n for v in plane) for plane in self.a
        ):
            raise DimensionMismatchError("structure array must be n x n x n")
        self.symmetric = all(
            self.a[i][j] == self.a[j][i] for i in range(n) for j in range(i + 1, n)
        )
        if field_tag == "Q":
            for plane in self.a:
                for vec in plane:
                    for c in vec:
                        if c.b != 0:
                            raise ValueError("field Q tensor with imaginary entry")
        self._key = None

    @classmethod
    def from_products(cls, n, products, field_tag="Qi", bilinear=False):
        """Build from a sparse {(i, j): {k: coeff}} map, all indices 1-based.

        Unless ``bilinear`` is set, products are completed symmetrically and
        contradictory (i, j)/(j, i) values raise ValueError.
        """
        a = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        seen = {}
        for (i, j), img in products.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise DimensionMismatchError(f"index out of range in ({i},{j})")
            v = [ZERO] * n
            items = img.items() if isinstance(img, dict) else img
            for k, c in items:
                c = c if isinstance(c, Scalar) else _coerce(c)
                v[k - 1] = v[k - 1] + c
            v = tuple(v)
            if bilinear:
                if (i, j) in seen and seen[(i, j)] != v:
                    raise ValueError(f"contradictory product for e{i}*e{j}")
                seen[(i, j)] = v
                a[i - 1][j - 1] = list(v)
            else:
                for key in {(i, j), (j, i)}:
                    if key in seen and seen[key] != v:
                        raise ValueError(f"contradictory product for e{key[0]}*e{key[1]}")
                    seen[key] = v
                a[i - 1][j - 1] = list(v)
                a[j - 1][i - 1] = list(v)
        return cls(n, a, field_tag)

    @classmethod
    def abelian(cls, n, field_tag="Qi"):
        return cls.from_products(n, {}, field_tag)

    def products(self):
        """Sparse view {(i, j): tuple of Scalar coords} of nonzero products,
        1-based, j >= i when symmetric."""
        out = {}
        for i in range(self.n):
            rng = range(i, self.n) if self.symmetric else range(self.n)
            for j in rng:
                if not vec_is_zero(self.a[i][j]):
                    out[(i + 1, j + 1)] = self.a[i][j]
        return out

    @property
    def is_zero(self):
        return all(
            vec_is_zero(self.a[i][j]) for i in range(self.n) for j in range(self.n)
        )

    def key(self):
        if self._key is None:
            self._key = tuple(
                (c.a, c.b, c.d) for plane in self.a for v in plane for c in v
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash((self.n, self.key()))

    def __repr__(self):
        prods = ", ".join(
            f"e{i}*e{j}->({', '.join(str(c) for c in v)})"
            for (i, j), v in self.products().items()
        )
        return f"StructureTensor(n={self.n}, {prods or 'abelian'})"


def product(phi, x, y):
    """Bilinear product of two coordinate vectors under the law phi."""
    n = phi.n
    if len(x) != n or len(y) != n:
        raise DimensionMismatchError("vector length does not match the law")
    out = [ZERO] * n
    a = phi.a
    for i in range(n):
        xi = x[i]
        if xi.is_zero:
            continue
        ai = a[i]
        for j in range(n):
            yj = y[j]
            if yj.is_zero:
                continue
            c = xi * yj
            v = ai[j]
            for k in range(n):
                if not v[k].is_zero:
                    out[k] = out[k] + c * v[k]
    return tuple(out)


def jordan_defect(phi, x, y):
    """LHS - RHS of the power identity: (x*x)*(x*y) - x*((x*x)*y)."""
    xx = product(phi, x, x)
    xy = product(phi, x, y)
    lhs = product(phi, xx, xy)
    rhs = product(phi, x, product(phi, xx, y))
    return vec_sub(lhs, rhs)


def _polarization_vectors(n):
    """Basis-sum vectors on which the degree-(3,1) identity is checked.

    Sums of one, two or three distinct basis vectors with multiplicity,
    skipping scalar multiples of smaller sums (homogeneity covers those);
    see docs/jordan_identity_check.md for the sufficiency proof.
    """
    vectors = []
    seen = set()

    def push(coeffs):
        g = 0
        for c in coeffs:
            g = gcd(g, c)
        if g > 1:
            coeffs = tuple(c // g for c in coeffs)
        if coeffs not in seen:
            seen.add(coeffs)
            vectors.append(vector(coeffs))

    for i in range(n):
        c = [0] * n
        c[i] = 1
        push(tuple(c))
    for i in range(n):
        for j in range(i, n):
            c = [0] * n
            c[i] += 1
            c[j] += 1
            push(tuple(c))
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                c = [0] * n
                c[i] += 1
                c[j] += 1
                c[k] += 1
                push(tuple(c))
    return vectors


_POLARIZATION_CACHE = {}


def polarization_vectors(n):
    if n not in _POLARIZATION_CACHE:
        _POLARIZATION_CACHE[n] = _polarization_vectors(n)
    return _POLARIZATION_CACHE[n]


def is_jordan(phi):
    """True iff the symmetric law satisfies the power identity everywhere."""
    if not phi.symmetric:
        raise ValueError("is_jordan requires a symmetric law")
    n = phi.n
    basis = [basis_vector(n, m) for m in range(1, n + 1)]
    for x in polarization_vectors(n):
        for y in basis:
            if not vec_is_zero(jordan_defect(phi, x, y)):
                return False
    return True


def is_associative(phi):
    """True iff (e_i e_j) e_k = e_i (e_j e_k) for all basis triples."""
    n = phi.n
    basis = [basis_vector(n, m) for m in range(1, n + 1)]
    for i in range(n):
        for j in range(n):
            left_ij = phi.a[i][j]
            for k in range(n):
                lhs = product(phi, left_ij, basis[k])
                rhs = product(phi, basis[i], phi.a[j][k])
                if lhs != rhs:
                    return False
    return True


def transform(phi, f):
    """Transport of the law along an invertible matrix: f^{-1}(phi(f x, f y)).

    ``f`` is a square Scalar matrix (list of rows or PolyMatrix) whose columns
    are the images of the basis vectors.
    """
    rows = f.entries if isinstance(f, PolyMatrix) else [list(r) for r in f]
    n = phi.n
    if len(rows) != n:
        raise DimensionMismatchError("matrix size does not match the law")
    f_inv = invert_scalar_matrix(rows)
    cols = [tuple(rows[i][j] for i in range(n)) for j in range(n)]
    a = []
    for i in range(n):
        plane = []
        for j in range(n):
            if j < i and phi.symmetric:
                plane.append(list(a[j][i]))
                continue
            w = product(phi, cols[i], cols[j])
            plane.append(list(mat_vec(f_inv, w)))
        a.append(plane)
    return StructureTensor(n, a, field_tag=_result_field(phi, rows))


def _result_field(phi, rows):
    if phi.field_tag == "Qi":
        return "Qi"
    for row in rows:
        for c in row:
            if c.b != 0:
                return "Qi"
    return "Q"


def mult_operator(phi, x):
    """Matrix of L_x (column j is the product of x with e_j)."""
    n = phi.n
    cols = [product(phi, x, basis_vector(n, j + 1)) for j in range(n)]
    return PolyMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def verify_isomorphism(phi, psi, f):
    """True iff transform(phi, f) equals psi exactly."""
    if phi.n != psi.n:
        raise DimensionMismatchError("laws live in different dimensions")
    return transform(phi, f) == psi
