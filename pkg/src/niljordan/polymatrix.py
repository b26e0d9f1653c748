"""Square matrices over an exact ring: Scalar, PuiseuxPoly or MPoly entries.

Rank is computed by fraction-free elimination over the fraction field of the
entry ring; determinants are fraction-free as well.  Inverses of Puiseux
matrices are returned over the fraction field (adjugate over determinant).
"""

from __future__ import annotations

from .errors import SingularMatrixError
from .linalg import bareiss_det, bareiss_rank, invert_scalar_matrix
from .scalars import PuiseuxFraction, PuiseuxPoly, Scalar


class PolyMatrix:
    __slots__ = ("n", "entries")

    def __init__(self, entries):
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ValueError("PolyMatrix must be square")
        self.n = n
        self.entries = [list(row) for row in entries]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.n == other.n and all(
            self.entries[i][j] == other.entries[i][j]
            for i in range(self.n)
            for j in range(self.n)
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rank(self):
        """Rank over the fraction field, by fraction-free elimination."""
        return bareiss_rank(self.entries)

    def det(self):
        return bareiss_det(self.entries)

    def column(self, j):
        return [self.entries[i][j] for i in range(self.n)]

    def minor(self, drop_row, drop_col):
        return [
            [self.entries[i][j] for j in range(self.n) if j != drop_col]
            for i in range(self.n)
            if i != drop_row
        ]

    def adjugate(self):
        """Adjugate matrix: adj[i][j] = (-1)^(i+j) det(minor(j, i))."""
        n = self.n
        if n == 1:
            one = _ring_one(self.entries[0][0])
            return PolyMatrix([[one]])
        adj = []
        for i in range(n):
            row = []
            for j in range(n):
                cof = bareiss_det(self.minor(j, i))
                if (i + j) % 2:
                    cof = -cof
                row.append(cof)
            adj.append(row)
        return PolyMatrix(adj)

    def inverse(self):
        """Exact inverse.

        Scalar entries: Scalar inverse.  PuiseuxPoly entries: matrix of
        PuiseuxFraction (adjugate over determinant).  Raises
        SingularMatrixError when the determinant is identically zero.
        """
        sample = self.entries[0][0]
        if isinstance(sample, Scalar):
            return PolyMatrix(invert_scalar_matrix(self.entries))
        det = self.det()
        if det.is_zero:
            raise SingularMatrixError("determinant is identically zero")
        adj = self.adjugate()
        inv = [
            [PuiseuxFraction(adj.entries[i][j], det) for j in range(self.n)]
            for i in range(self.n)
        ]
        return PolyMatrix(inv)

    def matmul(self, other):
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                s = None
                for k in range(n):
                    term = self.entries[i][k] * other.entries[k][j]
                    s = term if s is None else s + term
                row.append(s)
            out.append(row)
        return PolyMatrix(out)

    def apply(self, vector):
        """Matrix times column vector (entries must multiply by the vector's)."""
        out = []
        for i in range(self.n):
            s = None
            for j, v in enumerate(vector):
                term = self.entries[i][j] * v
                s = term if s is None else s + term
            out.append(s)
        return out

    def __repr__(self):
        rows = "; ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.entries
        )
        return f"PolyMatrix({rows})"


def _ring_one(sample):
    if isinstance(sample, Scalar):
        return Scalar(1)
    if isinstance(sample, PuiseuxPoly):
        return PuiseuxPoly.const(1)
    return sample.__class__.const(sample.nvars, Scalar(1))
