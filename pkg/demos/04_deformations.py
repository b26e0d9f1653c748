#!/usr/bin/env python3
"""Polynomial deformations: the direction opposite to contraction.

Checks that a family phi_0 + t*mu satisfies the power identity for every t
(coefficientwise, exactly), classifies the t = 1 member, and searches for
single-product directions reaching a requested class.
"""

from niljordan import (
    StructureTensor,
    canonical_tensor,
    search_deformation_direction,
    verify_polynomial_deformation,
)

mu1 = StructureTensor.from_products(4, {(2, 4): {3: 1}})

report = verify_polynomial_deformation(canonical_tensor("J4_3"), [mu1])
print("J4_3 + t*mu1 with mu1(e2,e4) = e3:")
print("  Jordan family for all t:", report.jordan_family)
print("  t = 1 specialization class:", report.t1_class)
print("  reversed monotonicity:", report.inequalities)
print()

bad = StructureTensor.from_products(4, {(1, 1): {3: 1}, (1, 3): {1: 1}})
report = verify_polynomial_deformation(canonical_tensor("J4_8"), [bad])
print("a direction breaking the identity:")
print("  Jordan family:", report.jordan_family)
print("  offending t-coefficient:", report.offending["t_exponent"],
      "->", report.offending["coefficient"])
print()

for label in ("J4_4", "J4_6"):
    mu, rep = search_deformation_direction(canonical_tensor(label), "J4_5")
    prods = {f"e{i}*e{j}": [str(c) for c in v] for (i, j), v in mu.products().items()}
    print(f"direction deforming {label} over class J4_5: {prods} (t=1 -> {rep.t1_class})")
