"""Polynomial deformation checking.

A deformation direction is a finite list of symmetric tensors mu_1..mu_k;
the family under test is phi_t = phi_0 + sum t^d * mu_d.  The power identity
must hold identically in t, which is checked coefficientwise on the same
finite polarization set the Scalar-level check uses.  The t = 1
specialization is then classified and compared against the base law through
the reversed monotonicity inequalities (characteristic sequence weakly
grows, orbit dimension strictly grows, center weakly shrinks) whenever the
deformation is nontrivial.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import classify
from .errors import NotNilpotentError
from .invariants import profile
from .scalars import PuiseuxPoly
from .tensors import (
    StructureTensor,
    basis_vector,
    polarization_vectors,
)


@dataclass
class DeformationReport:
    base_class: str
    jordan_family: bool
    offending: dict | None
    t1_nilpotent: bool
    t1_class: str | None
    trivial: bool | None
    inequalities: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.jordan_family and self.t1_nilpotent


def _poly_tensor(phi0, directions):
    """n x n x n array of PuiseuxPoly for phi_0 + sum t^d mu_d."""
    n = phi0.n
    a = [
        [[PuiseuxPoly.const(phi0.a[i][j][k]) for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    for d, mu in enumerate(directions, start=1):
        if mu.n != n:
            raise ValueError("direction dimension mismatch")
        if not mu.symmetric:
            raise ValueError("deformation directions must be symmetric")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    c = mu.a[i][j][k]
                    if not c.is_zero:
                        a[i][j][k] = a[i][j][k] + PuiseuxPoly.t_power(d, c)
    return a


def _poly_product(a, x, y):
    """Bilinear product for PuiseuxPoly structure entries; the coordinate
    vectors may be Scalar or PuiseuxPoly valued."""
    n = len(a)
    out = [PuiseuxPoly() for _ in range(n)]
    for i in range(n):
        xi = x[i]
        if not xi:
            continue
        for j in range(n):
            yj = y[j]
            if not yj:
                continue
            c = xi * yj
            for k in range(n):
                e = a[i][j][k]
                if not e.is_zero:
                    out[k] = out[k] + e * c
    return out


def _poly_defect(a, x, y):
    xx = _poly_product(a, x, x)
    xy = _poly_product(a, x, y)
    lhs = _poly_product(a, xx, xy)
    rhs = _poly_product(a, x, _poly_product(a, xx, y))
    return [l - r for l, r in zip(lhs, rhs)]


def specialize_at_one(phi0, directions):
    """The t = 1 member of the family, as an exact Scalar tensor."""
    n = phi0.n
    a = _poly_tensor(phi0, directions)
    entries = [
        [[a[i][j][k].eval_at_one() for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return StructureTensor(n, entries, field_tag="Qi")


def verify_polynomial_deformation(phi0, directions):
    """Full check of a polynomial deformation family; see module docstring."""
    n = phi0.n
    base_class = classify(phi0)
    a = _poly_tensor(phi0, directions)
    basis = [basis_vector(n, m) for m in range(1, n + 1)]
    offending = None
    for x in polarization_vectors(n):
        for y in basis:
            defect = _poly_defect(a, x, y)
            for k, p in enumerate(defect):
                if not p.is_zero:
                    q = p.valuation()
                    offending = {
                        "x": x,
                        "y": y,
                        "coordinate": k + 1,
                        "t_exponent": q,
                        "coefficient": p.terms[q],
                    }
                    break
            if offending:
                break
        if offending:
            break
    if offending:
        return DeformationReport(
            base_class=base_class,
            jordan_family=False,
            offending=offending,
            t1_nilpotent=False,
            t1_class=None,
            trivial=None,
        )
    spec = specialize_at_one(phi0, directions)
    try:
        t1_profile = profile(spec)
    except NotNilpotentError:
        return DeformationReport(
            base_class=base_class,
            jordan_family=True,
            offending=None,
            t1_nilpotent=False,
            t1_class=None,
            trivial=None,
        )
    t1_class = classify(spec)
    trivial = t1_class == base_class
    ineqs = {}
    if not trivial:
        base_profile = profile(phi0)
        ineqs = {
            "char_seq_weakly_grows": t1_profile.char_seq >= base_profile.char_seq,
            "orbit_strictly_grows": t1_profile.dim_orbit > base_profile.dim_orbit,
            "center_weakly_shrinks": t1_profile.dim_center <= base_profile.dim_center,
        }
    return DeformationReport(
        base_class=base_class,
        jordan_family=True,
        offending=None,
        t1_nilpotent=True,
        t1_class=t1_class,
        trivial=trivial,
        inequalities=ineqs,
    )


def single_product_directions(n):
    """All directions with one product e_i * e_j = +/- e_k, i <= j."""
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(1, n + 1):
                for sign in (1, -1):
                    mu = StructureTensor.from_products(n, {(i, j): {k: sign}})
                    out.append(mu)
    return out


def search_deformation_direction(phi0, target_class):
    """First single-product direction whose family is a Jordan family with a
    t = 1 specialization in the target class; None when none exists."""
    for mu in single_product_directions(phi0.n):
        report = verify_polynomial_deformation(phi0, [mu])
        if report.jordan_family and report.t1_class == target_class:
            return mu, report
    return None
