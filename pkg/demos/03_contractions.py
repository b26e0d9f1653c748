#!/usr/bin/env python3
"""Contraction limits along one-parameter families.

Transports a law along matrices of Puiseux polynomials in t, takes the
exact limit at t -> 0, verifies announced degenerations, repairs a broken
family by bounded search, and certifies one impossibility.
"""

from niljordan import (
    ContractionFamily,
    canonical_tensor,
    classify,
    contraction_obstruction,
    limit_of_family,
    scaling_family,
    search_witness,
    serialize_family,
    verify_edge,
)
from niljordan.errors import NOT_FOUND

phi1 = canonical_tensor("J3_1")

# f_t = diag(t, t^2, 1) kills the top of the chain law: the limit keeps
# only e1*e1 = e2.
fam = ContractionFamily.diagonal([1, 2, 0])
lim = limit_of_family(phi1, fam)
print("limit of the dim-3 chain law along diag(t, t^2, 1):", lim)
print("  class:", classify(lim))
print()

# Scaling every basis vector by t contracts anything onto the abelian law.
print("scaling family limit:", limit_of_family(canonical_tensor("J4_2"), scaling_family(4)))
print()

# A verified edge with the monotonicity inequalities.
edge = verify_edge(
    canonical_tensor("J4_6"), "J4_8",
    ContractionFamily.diagonal([1, 2, 0, 0]),
)
print("edge:", edge.describe())
for name, ok in edge.inequalities.items():
    print(f"  {name}: {ok}")
print()

# The printed 9 -> 11 family is singular; the bounded search finds a repair.
witness = search_witness(canonical_tensor("J4_9"), "J4_11")
print("repaired 9 -> 11 witness:")
print(serialize_family(witness), end="")
print("  re-verified:", verify_edge(canonical_tensor("J4_9"), "J4_11", witness).status)
print()

# And one degeneration that cannot exist at all: the J4_4 law contains a
# 3-dimensional subspace with all products zero, which every contraction
# limit inherits, while J4_8 admits at most a 2-dimensional one.
print("search J4_4 -> J4_8:",
      "NOT_FOUND" if search_witness(canonical_tensor("J4_4"), "J4_8", budget=20000) is NOT_FOUND
      else "found?!")
print("obstruction:", contraction_obstruction(canonical_tensor("J4_4"),
                                              canonical_tensor("J4_8")))
