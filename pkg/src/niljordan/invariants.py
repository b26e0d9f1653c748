"""Isomorphism invariants of nilpotent laws.

Covers the descending chain of powers, nilindex, center, characteristic
sequence, derivation algebra dimension, the coboundary (orbit tangent)
dimension and the aggregated profile.

The characteristic sequence is computed from the rank profile of the
multiplication operator of a generic symbolic vector: the number of blocks of
size >= k equals rank L^(k-1) - rank L^k, and each rank is maximal on a dense
open set, so the generic value is the lexicographic supremum.  The operation
additionally evaluates the sequence at deterministic sample vectors outside
the derived subalgebra and asserts that the generic value dominates them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NOT_NILPOTENT, NotNilpotentError
from .linalg import kernel_basis, rank_field, row_space_basis
from .mpoly import MPoly
from .polymatrix import PolyMatrix
from .scalars import ZERO
from .tensors import basis_vector, is_associative, mult_operator, product, vector


@dataclass(frozen=True)
class InvariantProfile:
    char_seq: tuple
    nilindex: int
    dim_center: int
    dim_der: int
    dim_orbit: int
    associative: bool
    dims_central_series: tuple

    def table_row(self):
        """The (s, dim orbit, dim center) triple reported by the tables."""
        return (self.char_seq, self.dim_orbit, self.dim_center)


@lru_cache(maxsize=4096)
def central_series(phi):
    """Descending chain of subspace bases until stabilization.

    Starts with the full space; each later entry is an exact row-reduced
    basis of the span of products of the previous space with the whole space.
    Tensors are immutable, so results are memoized by value.
    """
    n = phi.n
    basis = [basis_vector(n, i) for i in range(1, n + 1)]
    chain = [row_space_basis(basis, n)]
    current = chain[0]
    while current:
        gens = []
        for c in current:
            for b in basis:
                gens.append(product(phi, tuple(c), b))
        nxt = row_space_basis(gens, n)
        chain.append(nxt)
        if len(nxt) == len(current):
            break
        current = nxt
    return tuple(tuple(tuple(row) for row in space) for space in chain)


def central_series_dims(phi):
    return tuple(len(b) for b in central_series(phi))


def nilindex(phi):
    """Least k with the k-th power space zero; NOT_NILPOTENT otherwise."""
    dims = central_series_dims(phi)
    if dims[-1] != 0:
        return NOT_NILPOTENT
    return len(dims)


@lru_cache(maxsize=4096)
def center(phi):
    """Exact basis of {x : phi(x, y) = 0 for all y}."""
    n = phi.n
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([phi.a[i][j][k] for i in range(n)])
    return tuple(tuple(v) for v in kernel_basis(rows, n))


def _partition_from_ranks(n, power_ranks):
    """Jordan block sizes of a nilpotent operator from ranks of its powers.

    power_ranks[k-1] = rank L^k, ending in 0.
    """
    ranks = [n] + list(power_ranks)
    blocks_ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts = []
    for size in range(len(blocks_ge), 0, -1):
        ge_here = blocks_ge[size - 1]
        ge_next = blocks_ge[size] if size < len(blocks_ge) else 0
        parts.extend([size] * (ge_here - ge_next))
    return tuple(parts)


def _numeric_block_partition(phi, x):
    n = phi.n
    L = mult_operator(phi, x)
    ranks = []
    power = L
    for _ in range(n):
        r = rank_field(power.entries, n)
        ranks.append(r)
        if r == 0:
            break
        power = power.matmul(L)
    if ranks[-1] != 0:
        raise NotNilpotentError("multiplication operator is not nilpotent")
    return _partition_from_ranks(n, ranks)


_SAMPLE_COORDS = (1, 2, 3, -1)


def sample_vectors(phi, count=20):
    """Basis vectors plus deterministic {1,2,3,-1}-patterned combinations,
    all outside the derived subalgebra."""
    n = phi.n
    c2 = central_series(phi)[1] if n else []
    out = []
    seen = set()

    def consider(coords):
        if coords in seen:
            return False
        seen.add(coords)
        v = vector(coords)
        if not _in_rref_span(c2, v):
            out.append(v)
            return True
        return False

    for i in range(1, n + 1):
        coords = tuple(1 if k == i - 1 else 0 for k in range(n))
        consider(coords)
    combos = 0
    m = 0
    while combos < count and m < 8 * count:
        stride = (m % 3) + 1
        coords = tuple(_SAMPLE_COORDS[(m + i * stride) % 4] for i in range(n))
        if consider(coords):
            combos += 1
        m += 1
    return out


def _in_rref_span(basis_rref, v):
    vv = list(v)
    for row in basis_rref:
        lead = next(i for i, e in enumerate(row) if not e.is_zero)
        if not vv[lead].is_zero:
            f = vv[lead]
            vv = [a - f * b for a, b in zip(vv, row)]
    return all(e.is_zero for e in vv)


@lru_cache(maxsize=4096)
def char_sequence(phi):
    """Characteristic sequence: generic Jordan block sizes of L_x.

    Computed over the multivariate fraction field and checked to dominate
    the sampled concrete values lexicographically.
    """
    n = phi.n
    if n == 0:
        raise ValueError("DEGENERATE: zero-dimensional law")
    xs = [MPoly.variable(n, i) for i in range(n)]
    generic = [
        [_generic_entry(phi, xs, k, j) for j in range(n)] for k in range(n)
    ]
    ranks = []
    power = generic
    for _ in range(n):
        r = _mpoly_rank(power)
        ranks.append(r)
        if r == 0:
            break
        power = _mpoly_matmul(power, generic)
    if ranks[-1] != 0:
        raise NotNilpotentError("generic multiplication operator not nilpotent")
    generic_seq = _partition_from_ranks(n, ranks)
    for x in sample_vectors(phi):
        sample_seq = _numeric_block_partition(phi, x)
        if sample_seq > generic_seq:
            raise AssertionError(
                f"sampled sequence {sample_seq} exceeds generic {generic_seq}"
            )
    return generic_seq


def _generic_entry(phi, xs, k, j):
    n = phi.n
    total = MPoly(n)
    for i in range(n):
        c = phi.a[i][j][k]
        if not c.is_zero:
            total = total + xs[i] * c
    return total


def _mpoly_matmul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = MPoly(a[0][0].nvars)
            for k in range(n):
                if a[i][k].terms and b[k][j].terms:
                    s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def _mpoly_rank(m):
    return PolyMatrix(m).rank()


def _coboundary_matrix(phi):
    """Matrix of f -> delta_phi f, rows indexed by (i <= j, k), columns by
    the n^2 entries of f."""
    n = phi.n
    a = phi.a
    rows = []
    for i in range(n):
        for j in range(i, n):
            w = a[i][j]
            for k in range(n):
                row = [ZERO] * (n * n)
                for p in range(n):
                    # phi(f e_i, e_j) picks up f[p][i] * a[p][j][k]
                    c = a[p][j][k]
                    if not c.is_zero:
                        row[p * n + i] = row[p * n + i] + c
                    c = a[i][p][k]
                    if not c.is_zero:
                        row[p * n + j] = row[p * n + j] + c
                    # -f(phi(e_i, e_j)) contributes -w_p to f[k][p]
                    if not w[p].is_zero:
                        row[k * n + p] = row[k * n + p] - w[p]
                rows.append(row)
    return rows


def derivation_dim(phi):
    """Dimension of the solution space of the derivation equations."""
    n = phi.n
    rows = _coboundary_matrix(phi)
    return n * n - rank_field(rows, n * n)


def coboundary_space_dim(phi):
    """Dimension of the span of the coboundaries (the orbit tangent space)."""
    rows = _coboundary_matrix(phi)
    return rank_field(rows, phi.n * phi.n)


def orbit_dim(phi):
    return phi.n * phi.n - derivation_dim(phi)


def profile(phi):
    """Aggregate all invariants; raises NotNilpotentError when appropriate."""
    n = phi.n
    dims_series = central_series_dims(phi)
    if dims_series[-1] != 0:
        raise NotNilpotentError("law is not nilpotent")
    nil = len(dims_series)
    dim_center = len(center(phi))
    dim_der = derivation_dim(phi)
    seq = char_sequence(phi)
    prof = InvariantProfile(
        char_seq=seq,
        nilindex=nil,
        dim_center=dim_center,
        dim_der=dim_der,
        dim_orbit=n * n - dim_der,
        associative=is_associative(phi),
        dims_central_series=dims_series,
    )
    assert prof.char_seq >= (1,) * n or not any(dims_series), "degenerate sequence"
    if not phi.is_zero or n:
        assert prof.dim_center >= 1, "nilpotent nonzero law with trivial center"
    return prof
