#!/usr/bin/env python3
"""From associative to commutative: the symmetrisation map.

Applies phi(x, y) = (beta(x, y) + beta(y, x))/2 to the registry of
three-dimensional nilpotent associative laws and classifies the images,
including the parameter value where the image degenerates.
"""

from niljordan import associative_registry, classify, squaring_map, serialize_algebra

registry = associative_registry()
for name in sorted(registry):
    image = squaring_map(registry[name])
    print(f"{name}: image class {classify(image)}")
print()

quarter = squaring_map(registry["A3_b2_mu_quarter"])
print("the mu = 1/4 sample in full (the form on <e1, e3> degenerates):")
print(serialize_algebra(quarter), end="")
print("# its center is 2-dimensional, so the image drops to J3_3")
