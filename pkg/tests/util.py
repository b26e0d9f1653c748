"""Shared test helpers: deterministic randomness and independent oracles."""

import itertools
import random
from fractions import Fraction

from niljordan.linalg import rank_field
from niljordan.scalars import PuiseuxPoly, Scalar
from niljordan.tensors import StructureTensor, transform


def rng(seed=20240515):
    return random.Random(seed)


def random_scalar(r, small=True):
    num = r.randint(-4, 4)
    den = r.choice([1, 1, 2, 3])
    if small:
        return Scalar(Fraction(num, den))
    return Scalar(Fraction(num, den), Fraction(r.randint(-3, 3), r.choice([1, 2])))


def random_vector(r, n):
    return tuple(random_scalar(r) for _ in range(n))


def random_invertible(r, n, entries=(-2, -1, -1, 0, 0, 0, 1, 1, 2, 3)):
    while True:
        m = [[Scalar(r.choice(entries)) for _ in range(n)] for _ in range(n)]
        if rank_field(m, n) == n:
            return m


def random_transform_of(r, phi):
    return transform(phi, random_invertible(r, phi.n))


def random_puiseux_poly(r, max_terms=2):
    terms = {}
    for _ in range(r.randint(1, max_terms)):
        q = Fraction(r.randint(-2, 4), r.choice([1, 1, 2]))
        c = r.randint(-3, 3)
        if c:
            terms[q] = Scalar(c)
    return PuiseuxPoly(terms) if terms else PuiseuxPoly.const(1)


def minor_rank_oracle(rows):
    """Rank as the largest size of a nonzero minor (Leibniz determinants)."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    for size in range(min(nr, nc), 0, -1):
        for row_idx in itertools.combinations(range(nr), size):
            for col_idx in itertools.combinations(range(nc), size):
                sub = [[rows[i][j] for j in col_idx] for i in row_idx]
                if not _leibniz_det(sub).is_zero:
                    return size
    return 0


def _leibniz_det(m):
    n = len(m)
    total = Scalar(0)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = Scalar(sign)
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def tensor_from(n, prods, field_tag="Qi"):
    return StructureTensor.from_products(n, prods, field_tag=field_tag)
