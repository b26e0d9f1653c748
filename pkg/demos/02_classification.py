#!/usr/bin/env python3
"""Classification up to isomorphism in dimension <= 4.

Disguises canonical laws by random rational changes of basis, recovers their
class labels, and shows the normal-form parameters that separate the one
pair of classes sharing a full invariant profile.
"""

import random

from niljordan import (
    Scalar,
    canonical_tensor,
    classify,
    classify_real,
    normal_form_31,
    profile,
    transform,
)
from niljordan.linalg import rank_field

rng = random.Random(4)


def random_invertible(n):
    while True:
        m = [[Scalar(rng.randint(-2, 3)) for _ in range(n)] for _ in range(n)]
        if rank_field(m, n) == n:
            return m


print("round trip: disguise a canonical law, then recover its label")
for label in ("J3_2", "J4_4", "J4_8", "J4_10"):
    disguised = transform(canonical_tensor(label), random_invertible(4 if label.startswith("J4") else 3))
    print(f"  {label}: classify(disguised) = {classify(disguised)}")
print()

print("J4_3 and J4_5 share the whole numeric profile:")
print("  profile(J4_3) == profile(J4_5):",
      profile(canonical_tensor("J4_3")) == profile(canonical_tensor("J4_5")))
for label in ("J4_3", "J4_5"):
    nf = normal_form_31(canonical_tensor(label))
    print(f"  {label}: alpha = {nf.alpha}, beta = {nf.beta}, gamma = {nf.gamma}"
          f"  (alpha nullity decides)")
print()

print("real classification in dimension 3 (field Q):")
for label in ("R3_1", "R3_2", "R3_3", "R3_4", "R3_5"):
    got = classify_real(canonical_tensor(label))
    note = "" if got == label else "   <- the two printed real classes coincide"
    print(f"  canonical {label} tensor -> {got}{note}")
