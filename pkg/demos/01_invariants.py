#!/usr/bin/env python3
"""Invariants of nilpotent commutative laws, computed exactly.

Builds a few laws from their structure constants and walks through the
invariants the classification rests on: the descending power series, the
center, the characteristic sequence of a generic multiplication operator,
and the derivation / orbit dimensions.
"""

from niljordan import (
    StructureTensor,
    canonical_tensor,
    central_series_dims,
    char_sequence,
    coboundary_space_dim,
    derivation_dim,
    profile,
)

# The chain law in dimension 4: e1*e1 = e2, e1*e2 = e3, e1*e3 = e4, e2*e2 = e4.
phi = canonical_tensor("J4_1")
print("chain law:", phi)
print("  power series dims:", central_series_dims(phi))
print("  characteristic sequence:", char_sequence(phi))
print("  derivation dim:", derivation_dim(phi), "-> orbit dim", 16 - derivation_dim(phi))
print("  coboundary (orbit tangent) dim:", coboundary_space_dim(phi))
print()

# A custom law: two squares landing on independent vectors.
mine = StructureTensor.from_products(4, {(1, 1): {2: 1}, (3, 3): {4: 1}})
p = profile(mine)
print("two-squares law:", mine)
print("  full profile:", p)
print()

# The whole dimension-4 table, recomputed from scratch.
print("label   s(phi)      orbit  center  associative")
for k in range(1, 13):
    label = f"J4_{k}"
    prof = profile(canonical_tensor(label))
    print(f"{label:7} {str(prof.char_seq):11} {prof.dim_orbit:>5}  {prof.dim_center:>6}  {prof.associative}")
