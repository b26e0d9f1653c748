import pytest

from niljordan.errors import ParseError
from niljordan.paperchecks import DATA_DIR
from niljordan.scalars import Scalar
from niljordan.textio import (
    parse_algebra,
    parse_direction,
    parse_family,
    serialize_algebra,
    serialize_direction,
    serialize_family,
)


def test_parse_simple_algebra():
    phi = parse_algebra("dim 3\nfield Q\ne1*e1 = e2\ne1*e2 = e3\n")
    assert phi.n == 3 and phi.field_tag == "Q"
    assert phi.a[0][0][1] == Scalar(1)
    assert phi.a[1][0][2] == Scalar(1)  # symmetry completed


def test_parse_coefficients_and_sums():
    phi = parse_algebra(
        "dim 4\ne4*e4 = -1*e2 + -1*e3\ne1*e2 = (1/2+3i)*e4\ne2*e3 = e1 - 2*e4\n"
    )
    assert phi.a[3][3][1] == Scalar(-1)
    assert phi.a[3][3][2] == Scalar(-1)
    assert phi.a[0][1][3].im == 3
    assert phi.a[1][2][0] == Scalar(1)
    assert phi.a[1][2][3] == Scalar(-2)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_algebra("dim 2\ne1*e1 = e2\ne1*e1 = e1\n")
    assert exc.value.line_no == 3
    with pytest.raises(ParseError) as exc:
        parse_algebra("e1*e1 = e2\n")
    assert exc.value.line_no == 1
    with pytest.raises(ParseError) as exc:
        parse_algebra("dim 2\ne1*e9 = e2\n")
    assert exc.value.line_no == 2
    with pytest.raises(ParseError):
        parse_algebra("dim 2\nfield R\n")


def test_contradictory_symmetric_pair_is_error():
    with pytest.raises(ParseError):
        parse_algebra("dim 3\ne1*e2 = e3\ne2*e1 = -1*e3\n")
    # consistent repetition is allowed
    phi = parse_algebra("dim 3\ne1*e2 = e3\ne2*e1 = e3\n")
    assert phi.a[0][1][2] == Scalar(1)


def test_bilinear_flag_disables_completion():
    beta = parse_algebra("dim 3\nbilinear\ne1*e2 = -1*e3\ne2*e1 = e3\n")
    assert not beta.symmetric
    assert beta.a[0][1][2] == Scalar(-1)
    assert beta.a[1][0][2] == Scalar(1)


def test_algebra_round_trip_all_fixtures():
    for path in sorted((DATA_DIR / "algebras").glob("*.alg")):
        phi = parse_algebra(path.read_text())
        again = parse_algebra(serialize_algebra(phi))
        assert again == phi, path.name


def test_family_round_trip_all_fixtures():
    for path in sorted((DATA_DIR / "families").glob("*.fam")):
        fam = parse_family(path.read_text())
        again = parse_family(serialize_family(fam))
        assert again.matrix == fam.matrix, path.name


def test_family_exponent_syntax():
    fam = parse_family(
        "dim 3\nf(e1) = t*e1\nf(e2) = t^2*e2\nf(e3) = i*t^(3/2)*e3 + 1/2*t^(-1)*e1\n"
    )
    from fractions import Fraction

    col = fam.column(2)
    assert col[2].terms[Fraction(3, 2)].im == 1
    assert col[0].terms[Fraction(-1)].re == Fraction(1, 2)
    # omitted images fix the basis vectors
    fam2 = parse_family("dim 3\nf(e1) = t*e1\n")
    assert fam2.column(1)[1] == 1


def test_family_parse_errors():
    with pytest.raises(ParseError):
        parse_family("dim 2\nf(e1) = t*e1\nf(e1) = e2\n")
    with pytest.raises(ParseError) as exc:
        parse_family("dim 2\ng(e1) = t*e1\n")
    assert exc.value.line_no == 2
    with pytest.raises(ParseError):
        parse_family("dim 2\nf(e1) = t^(a)*e1\n")


def test_direction_files():
    dirs = parse_direction("dim 4\ndeg 1:\ne2*e4 = e3\ndeg 2:\ne4*e4 = e2\n")
    assert len(dirs) == 2
    assert dirs[0].a[1][3][2] == Scalar(1)
    assert dirs[1].a[3][3][1] == Scalar(1)
    round_trip = parse_direction(serialize_direction(dirs))
    assert round_trip == dirs
    with pytest.raises(ParseError):
        parse_direction("dim 4\ne2*e4 = e3\n")  # product outside a deg block


def test_t_powers_rejected_in_algebra_files():
    with pytest.raises(ParseError):
        parse_algebra("dim 2\ne1*e1 = t*e2\n")
