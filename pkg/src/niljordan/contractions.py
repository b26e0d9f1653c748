"""Symbolic contraction limits along one-parameter families.

A family is an invertible n x n matrix of Puiseux polynomials in t whose
columns are the images of the basis vectors.  The transported law has
entries in the Puiseux fraction field (adjugate over determinant); the
limit at t -> 0 is taken entrywise by valuations and either exists as an
exact Scalar tensor or DIVERGES.

verify_edge packages the full check used for the degeneration graph: the
limit must exist, classify to the announced target, and satisfy the
monotonicity inequalities (characteristic sequence weakly drops, orbit
dimension strictly drops, center dimension weakly grows).

search_witness looks for replacement families of the restricted shape
B * D(t): a rational basis change followed by a diagonal scaling
diag(u_i * t^(q_i)) with unit coefficients.  For such families the limit is
the weight-graded leading part of the B-transformed law, so candidates are
filtered without any Puiseux arithmetic.

The module also provides an exact obstruction: a subspace W with all
products zero survives every contraction (the limit of f_t^{-1} W in the
Grassmannian is again totally null, since the transported products vanish
along the curve), so a law containing a 3-dimensional totally null subspace
can never degenerate to one whose null vectors span at most 2 dimensions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DIVERGES, NOT_FOUND, SingularMatrixError
from .invariants import profile
from .linalg import bareiss_det, rank_field, row_space_basis
from .polymatrix import PolyMatrix
from .scalars import (
    ONE,
    PuiseuxFraction,
    PuiseuxPoly,
    ZERO,
    I as IMAG,
)
from .tensors import (
    StructureTensor,
    product,
    transform,
    vec_is_zero,
    vector,
)
from .classify import classify


class ContractionFamily:
    """Invertible matrix of Puiseux polynomials, columns = images f_t(e_i)."""

    __slots__ = ("n", "matrix", "_det")

    def __init__(self, matrix):
        self.matrix = matrix if isinstance(matrix, PolyMatrix) else PolyMatrix(matrix)
        self.n = self.matrix.n
        self._det = None

    @classmethod
    def from_images(cls, n, images):
        """images: {i: [(coeff, exponent, j), ...]} with 1-based i, j.
        Basis vectors without an image are fixed."""
        cols = {}
        for i, terms in images.items():
            col = [PuiseuxPoly() for _ in range(n)]
            for coeff, q, j in terms:
                col[j - 1] = col[j - 1] + PuiseuxPoly.t_power(Fraction(q), coeff)
            cols[i] = col
        entries = []
        for r in range(n):
            row = []
            for c in range(1, n + 1):
                if c in cols:
                    row.append(cols[c][r])
                else:
                    row.append(PuiseuxPoly.const(1) if r == c - 1 else PuiseuxPoly())
            entries.append(row)
        return cls(entries)

    @classmethod
    def diagonal(cls, exponents, coeffs=None):
        n = len(exponents)
        coeffs = coeffs or [ONE] * n
        entries = [
            [
                PuiseuxPoly.t_power(Fraction(exponents[j]), coeffs[j])
                if i == j
                else PuiseuxPoly()
                for j in range(n)
            ]
            for i in range(n)
        ]
        return cls(entries)

    def det(self):
        if self._det is None:
            self._det = bareiss_det(self.matrix.entries)
        return self._det

    @property
    def is_singular(self):
        return self.det().is_zero

    @property
    def is_real(self):
        return all(
            c.b == 0
            for row in self.matrix.entries
            for p in row
            for c in p.terms.values()
        )

    def column(self, j):
        return self.matrix.column(j)

    def image_lines(self):
        """Family text format lines, one per moved basis vector."""
        lines = []
        for j in range(self.n):
            col = self.column(j)
            terms = []
            for r in range(self.n):
                p = col[r]
                for q, c in sorted(p.terms.items()):
                    terms.append((c, q, r + 1))
            ident = len(terms) == 1 and terms[0][1] == 0 and terms[0][0] == ONE and terms[0][2] == j + 1
            if ident:
                continue
            bits = []
            for c, q, target in terms:
                parts = []
                if c != ONE:
                    cs = str(c)
                    if "+" in cs[1:] or "-" in cs[1:]:
                        cs = f"({cs})"
                    parts.append(cs)
                if q != 0:
                    parts.append(f"t^({q})" if (q.denominator != 1 or q < 0) else ("t" if q == 1 else f"t^{q}"))
                parts.append(f"e{target}")
                bits.append(" * ".join(parts))
            lines.append(f"f(e{j+1}) = " + " + ".join(bits))
        return lines

    def __repr__(self):
        return f"ContractionFamily({'; '.join(self.image_lines()) or 'identity'})"


def scaling_family(n):
    """diag(t, ..., t): contracts every nilpotent law onto the abelian one."""
    return ContractionFamily.diagonal([1] * n)


def _poly_bilinear(phi, x, y):
    """Product of PuiseuxPoly coordinate vectors under a Scalar law."""
    n = phi.n
    zero = PuiseuxPoly()
    out = [zero for _ in range(n)]
    for i in range(n):
        xi = x[i]
        if xi.is_zero:
            continue
        for j in range(n):
            yj = y[j]
            if yj.is_zero:
                continue
            c = xi * yj
            v = phi.a[i][j]
            for k in range(n):
                if not v[k].is_zero:
                    out[k] = out[k] + c * v[k]
    return out


def limit_of_family(phi, fam):
    """Limit law of the transported family at t -> 0.

    Returns a StructureTensor, or DIVERGES when some entry has a pole.
    Raises SingularMatrixError when the family is identically singular.
    """
    n = phi.n
    if fam.n != n:
        raise ValueError("family dimension does not match the law")
    det = fam.det()
    if det.is_zero:
        raise SingularMatrixError("family is singular for all t")
    adj = fam.matrix.adjugate()
    cols = [fam.column(j) for j in range(n)]
    a = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            w = _poly_bilinear(phi, cols[i], cols[j])
            entry = []
            for k in range(n):
                num = PuiseuxPoly()
                for l in range(n):
                    if not w[l].is_zero and not adj.entries[k][l].is_zero:
                        num = num + adj.entries[k][l] * w[l]
                value = PuiseuxFraction(num, det).limit_at_zero()
                if value is DIVERGES:
                    return DIVERGES
                entry.append(value)
            a[i][j] = tuple(entry)
            a[j][i] = tuple(entry)
    tag = "Q" if (phi.field_tag == "Q" and fam.is_real) else "Qi"
    if tag == "Q" and any(c.b != 0 for plane in a for v in plane for c in v):
        tag = "Qi"
    return StructureTensor(n, a, field_tag=tag)


@dataclass
class ContractionEdge:
    source_class: str
    target_class: str
    family: ContractionFamily
    verified: bool
    status: str  # VERIFIED | SINGULAR | DIVERGES | MISCLASSIFIED | INEQUALITY_FAILED
    actual_class: str | None = None
    limit: StructureTensor | None = None
    inequalities: dict = field(default_factory=dict)

    def describe(self):
        extra = ""
        if self.status == "MISCLASSIFIED":
            extra = f" (limit is {self.actual_class})"
        return f"{self.source_class} -> {self.target_class}: {self.status}{extra}"


def _inequalities(source_profile, limit_profile):
    return {
        "char_seq_weakly_drops": limit_profile.char_seq <= source_profile.char_seq,
        "orbit_strictly_drops": limit_profile.dim_orbit < source_profile.dim_orbit,
        "center_weakly_grows": limit_profile.dim_center >= source_profile.dim_center,
    }


def verify_edge(source, target_class, fam, source_profile=None):
    """Check one contraction claim and return a ContractionEdge record."""
    source_class = classify(source)
    if fam.is_singular:
        return ContractionEdge(source_class, target_class, fam, False, "SINGULAR")
    lim = limit_of_family(source, fam)
    if lim is DIVERGES:
        return ContractionEdge(source_class, target_class, fam, False, "DIVERGES")
    actual = classify(lim)
    if actual != target_class:
        return ContractionEdge(
            source_class, target_class, fam, False, "MISCLASSIFIED",
            actual_class=actual, limit=lim,
        )
    sp = source_profile or profile(source)
    lp = profile(lim)
    ineqs = _inequalities(sp, lp)
    ok = all(ineqs.values())
    return ContractionEdge(
        source_class, target_class, fam, ok,
        "VERIFIED" if ok else "INEQUALITY_FAILED",
        actual_class=actual, limit=lim, inequalities=ineqs,
    )


# --- witness search -------------------------------------------------------

SEARCH_EXPONENTS = (
    Fraction(0), Fraction(1), Fraction(2), Fraction(3),
    Fraction(1, 2), Fraction(3, 2), Fraction(-1, 2),
)


def _unit_combos(n):
    combos = [tuple([ONE] * n)]
    for p in range(n):
        u = [ONE] * n
        u[p] = IMAG
        combos.append(tuple(u))
    for p in range(n):
        u = [ONE] * n
        u[p] = -ONE
        combos.append(tuple(u))
    for p in range(n):
        for q in range(p + 1, n):
            u = [ONE] * n
            u[p] = IMAG
            u[q] = IMAG
            combos.append(tuple(u))
    return combos


def _basis_change_candidates(n, extra=()):
    mats = [[[ONE if i == j else ZERO for j in range(n)] for i in range(n)]]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            m = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
            m[i][j] = ONE
            mats.append(m)
    mats.extend(extra)
    return mats


def _weight_limit(products, q, units):
    """Weight-graded leading part of a sparse law, or None when some
    component has negative weight (the family would diverge)."""
    kept = {}
    for (i, j), vec_ in products.items():
        for k, c in enumerate(vec_):
            if c.is_zero:
                continue
            w = q[i - 1] + q[j - 1] - q[k]
            if w < 0:
                return None
            if w == 0:
                coeff = c * units[i - 1] * units[j - 1] / units[k]
                if not coeff.is_zero:
                    kept.setdefault((i, j), {})[k + 1] = coeff
    return kept


def search_witness(source, target_class, budget=60000, extra_changes=()):
    """Bounded deterministic search for a contraction family source -> target.

    Families have the shape B * D(t) with B drawn from the identity plus
    elementary transvections (plus caller-provided extras) and
    D = diag(u_i * t^(q_i)) over a small exponent and unit-coefficient grid.
    Returns the first family verify_edge accepts, or NOT_FOUND.
    """
    n = source.n
    source_class = classify(source)
    if source_class == target_class:
        raise ValueError("source already belongs to the target class")
    sp = profile(source)
    target_quick = _quick_signature_for(target_class, n)
    tried = 0
    for b in _basis_change_candidates(n, extra_changes):
        psi = transform(source, b)
        prods = psi.products()
        seen = set()
        for q in itertools.product(SEARCH_EXPONENTS, repeat=n):
            tried += 1
            if tried > budget:
                return NOT_FOUND
            kept = _weight_limit(prods, q, [ONE] * n)
            if kept is None:
                continue
            for units in _unit_combos(n):
                tried += 1
                if tried > budget:
                    return NOT_FOUND
                kept_u = _weight_limit(prods, q, units)
                key = _law_key(kept_u, n)
                if key in seen:
                    continue
                seen.add(key)
                lim = StructureTensor.from_products(n, kept_u)
                if _quick_signature(lim) != target_quick:
                    continue
                try:
                    if classify(lim) != target_class:
                        continue
                except Exception:
                    continue
                fam = _compose_family(b, q, units)
                edge = verify_edge(source, target_class, fam, source_profile=sp)
                if edge.verified:
                    return fam
    return NOT_FOUND


def _law_key(kept, n):
    items = []
    for (i, j), comps in sorted(kept.items()):
        for k, c in sorted(comps.items()):
            items.append((i, j, k, c.a, c.b, c.d))
    return tuple(items)


def _quick_signature(phi):
    from .invariants import central_series_dims, center

    return (central_series_dims(phi), len(center(phi)))


_QUICK_CACHE = {}


def _quick_signature_for(label, n):
    from .atlas import canonical_tensor

    key = (label, n)
    if key not in _QUICK_CACHE:
        _QUICK_CACHE[key] = _quick_signature(canonical_tensor(label))
    return _QUICK_CACHE[key]


def _compose_family(b, q, units):
    n = len(q)
    entries = [
        [
            PuiseuxPoly.t_power(q[j], b[i][j] * units[j])
            if not b[i][j].is_zero
            else PuiseuxPoly()
            for j in range(n)
        ]
        for i in range(n)
    ]
    return ContractionFamily(entries)


# --- totally-null-subspace obstruction ------------------------------------

def totally_null_subspace(phi):
    """Exact basis of a totally null subspace found by deterministic greedy
    search (a lower bound witness for the maximal one).  Starts from the
    center and extends by sampled vectors with zero square and zero products
    against the current basis."""
    from .invariants import center as center_basis

    n = phi.n
    basis = [tuple(v) for v in center_basis(phi)]
    for coords in _null_candidates(n):
        v = vector(coords)
        if vec_is_zero(v):
            continue
        if not vec_is_zero(product(phi, v, v)):
            continue
        if any(not vec_is_zero(product(phi, v, w)) for w in basis):
            continue
        enlarged = row_space_basis(basis + [v], n)
        if len(enlarged) > len(basis):
            basis = [tuple(b) for b in enlarged]
    return basis


def _null_candidates(n):
    coords_sets = ((1,), (0, 1), (0, 1, -1), (0, 1, -1, 2))
    for coords in coords_sets:
        for cand in itertools.product(coords, repeat=n):
            if any(cand):
                yield cand


def max_null_dim_upper_bound(phi):
    """Exact upper bound for the dimension of any totally null subspace.

    Two sound arguments are combined:

    * every rank-one component of the square form is c*(l(x))^2 for a linear
      form l, forcing null vectors into ker l;
    * when the products of the law span a single line, null subspaces are
      exactly the totally isotropic subspaces of one quadratic form, whose
      maximal dimension over an algebraically closed field is
      (n - rank) + floor(rank / 2).
    """
    n = phi.n
    forms = []
    for k in range(n):
        m = [[phi.a[i][j][k] for j in range(n)] for i in range(n)]
        if any(not c.is_zero for row in m for c in row):
            forms.append(m)
    if not forms:
        return n
    bound = n
    constraint_rows = []
    for m in forms:
        if rank_field(m, n) == 1:
            row = next(r for r in m if any(not c.is_zero for c in r))
            constraint_rows.append(row)
    if constraint_rows:
        bound = min(bound, n - rank_field(constraint_rows, n))
    if len(forms) == 1:
        r = rank_field(forms[0], n)
        bound = min(bound, (n - r) + r // 2)
    return bound


def contraction_obstruction(source, target_canonical):
    """Null-subspace obstruction report for a claimed contraction.

    Returns a dict when the source provably cannot degenerate onto the
    target class (totally null dimension would have to shrink), else None.
    """
    witness = totally_null_subspace(source)
    lower = len(witness)
    upper = max_null_dim_upper_bound(target_canonical)
    if lower > upper:
        return {
            "source_null_dim_at_least": lower,
            "target_null_dim_at_most": upper,
            "witness_basis": witness,
        }
    return None
