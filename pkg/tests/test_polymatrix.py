import itertools

import pytest

from niljordan.errors import SingularMatrixError
from niljordan.mpoly import MPoly
from niljordan.polymatrix import PolyMatrix
from niljordan.scalars import PuiseuxFraction, PuiseuxPoly, Scalar
from util import minor_rank_oracle, random_puiseux_poly, rng


def scalar_matrix(rows):
    return PolyMatrix([[Scalar(e) for e in row] for row in rows])


def test_rank_trivia():
    assert scalar_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).rank() == 3
    assert scalar_matrix([[0] * 3] * 3).rank() == 0


def test_rank_exhaustive_2x2_oracle():
    for entries in itertools.product((-1, 0, 1), repeat=4):
        m = [[Scalar(entries[0]), Scalar(entries[1])],
             [Scalar(entries[2]), Scalar(entries[3])]]
        assert PolyMatrix(m).rank() == minor_rank_oracle(m)


def test_rank_deterministic_4x4_oracle():
    r = rng(2024)
    checked = 0
    while checked < 500:
        m = [[Scalar(r.choice((-1, 0, 1))) for _ in range(4)] for _ in range(4)]
        assert PolyMatrix(m).rank() == minor_rank_oracle(m)
        checked += 1


def test_rank_multivariate():
    # L_{e1} for the 3-dim law e1*e1=e2, e1*e2=e3 has rank 2
    x = [MPoly.variable(3, i) for i in range(3)]
    zero = MPoly(3)
    m = PolyMatrix([[zero, zero, zero], [x[0], zero, zero], [zero, x[0], zero]])
    assert m.rank() == 2


def test_determinant_and_inverse_scalar():
    m = scalar_matrix([[2, 1], [1, 1]])
    assert m.det() == Scalar(1)
    inv = m.inverse()
    assert m.matmul(inv).entries == scalar_matrix([[1, 0], [0, 1]]).entries
    with pytest.raises(SingularMatrixError):
        scalar_matrix([[1, 2], [2, 4]]).inverse()


def _poly_diag(entries):
    n = len(entries)
    return PolyMatrix(
        [[entries[j] if i == j else PuiseuxPoly() for j in range(n)] for i in range(n)]
    )


def test_diagonal_puiseux_inverse():
    t = PuiseuxPoly.t_power
    m = _poly_diag([t(1), t(2), t(0)])
    inv = m.inverse()
    assert inv.entries[0][0] == PuiseuxFraction(t(0), t(1))
    assert inv.entries[1][1] == PuiseuxFraction(t(0), t(2))
    assert inv.entries[2][2] == 1


def test_block_2x2_inverse_exact():
    # [[t, t], [1, t]] has determinant t^2 - t
    t = PuiseuxPoly.t_power(1)
    one = PuiseuxPoly.const(1)
    m = PolyMatrix([[t, t], [one, t]])
    det = m.det()
    assert det == t * t - t
    inv = m.inverse()
    prod = m.matmul(inv)
    for i in range(2):
        for j in range(2):
            assert prod.entries[i][j] == (1 if i == j else 0)


def test_singular_puiseux_matrix():
    t = PuiseuxPoly.t_power(1)
    m = PolyMatrix([[t, t], [t, t]])
    with pytest.raises(SingularMatrixError):
        m.inverse()


def test_inverse_times_matrix_is_identity_random():
    r = rng(99)
    produced = 0
    while produced < 50:
        n = r.choice((2, 3, 4))
        entries = [[random_puiseux_poly(r) for _ in range(n)] for _ in range(n)]
        m = PolyMatrix(entries)
        try:
            inv = m.inverse()
        except SingularMatrixError:
            continue
        prod = m.matmul(inv)
        for i in range(n):
            for j in range(n):
                assert prod.entries[i][j] == (1 if i == j else 0)
        produced += 1


def test_bareiss_rank_over_puiseux():
    t = PuiseuxPoly.t_power(1)
    one = PuiseuxPoly.const(1)
    zero = PuiseuxPoly()
    m = PolyMatrix([[t, t, zero], [one, t, zero], [t, t, zero]])
    assert m.rank() == 2
