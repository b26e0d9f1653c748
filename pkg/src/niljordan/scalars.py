"""Exact arithmetic layers.

Three rings are used throughout the toolkit:

* :class:`Scalar` -- Gaussian rationals a + b*i with a, b arbitrary-precision
  rationals.  These are the ground coefficients of every tensor.
* :class:`PuiseuxPoly` -- finite sums of terms c * t^q with c a Scalar and q a
  rational exponent (negative and fractional exponents allowed).  Entries of
  contraction families live here.
* :class:`PuiseuxFraction` -- quotients of Puiseux polynomials, closed under
  the matrix inverses needed when transporting a law along a family.

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DIVERGES


def _normalize(a, b, d):
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class Scalar:
    """Gaussian rational in canonical reduced form.

    Internally a triple (a, b, d) of integers with value (a + b*i)/d,
    d > 0 and gcd(a, b, d) = 1.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            raise TypeError("use the value directly, not Scalar(Scalar)")
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        a = re.numerator * (d // re.denominator)
        b = im.numerator * (d // im.denominator)
        self.a, self.b, self.d = _normalize(a, b, d)

    @classmethod
    def _raw(cls, a, b, d):
        s = object.__new__(cls)
        s.a, s.b, s.d = _normalize(a, b, d)
        return s

    @property
    def re(self):
        return Fraction(self.a, self.d)

    @property
    def im(self):
        return Fraction(self.b, self.d)

    @property
    def is_zero(self):
        return self.a == 0 and self.b == 0

    @property
    def is_real(self):
        return self.b == 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and Fraction(self.a, self.d) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.d == other.d:
            return Scalar._raw(self.a + other.a, self.b + other.b, self.d)
        return Scalar._raw(
            self.a * other.d + other.a * self.d,
            self.b * other.d + other.b * self.d,
            self.d * other.d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._raw(
            self.a * other.d - other.a * self.d,
            self.b * other.d - other.b * self.d,
            self.d * other.d,
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return Scalar._raw(self.a * other.a, 0, self.d * other.d)
        return Scalar._raw(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d * other.d,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar._raw(-self.a, -self.b, self.d)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero Scalar")
        n = self.a * self.a + self.b * self.b
        return Scalar._raw(self.d * self.a, -self.d * self.b, n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Scalar._raw(self.a, -self.b, self.d)

    def exact_div(self, other):
        """Division used by fraction-free elimination (always exact here)."""
        return self / other

    def __str__(self):
        re, im = Fraction(self.a, self.d), Fraction(self.b, self.d)
        if im == 0:
            return str(re)
        if im == 1:
            imp = "i"
        elif im == -1:
            imp = "-i"
        else:
            imp = f"{im}i"
        if re == 0:
            return imp
        sign = "+" if im > 0 else "-"
        mag = abs(im)
        imp = "i" if mag == 1 else f"{mag}i"
        return f"{re}{sign}{imp}"

    def __repr__(self):
        return f"Scalar({self})"


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int):
        return Scalar._raw(value, 0, 1)
    if isinstance(value, Fraction):
        return Scalar._raw(value.numerator, 0, value.denominator)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def parse_scalar(text):
    """Parse a scalar literal: ``p``, ``p/q``, ``i``, ``p/q*i``, ``3i``,
    and signed sums like ``1/2+3i`` or ``-1-i``."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    # Split into at most two signed parts.
    parts = []
    start = 0
    for k, ch in enumerate(s):
        if ch in "+-" and k > start and s[k - 1] not in "+-*/^(":
            parts.append(s[start:k])
            start = k
    parts.append(s[start:])
    if len(parts) > 2:
        raise ValueError(f"bad scalar literal {text!r}")
    re = Fraction(0)
    im = Fraction(0)
    seen_im = False
    for part in parts:
        p = part
        if p.endswith("i"):
            if seen_im and len(parts) == 2:
                raise ValueError(f"two imaginary parts in {text!r}")
            seen_im = True
            body = p[:-1].rstrip("*")
            if body in ("", "+"):
                im += 1
            elif body == "-":
                im -= 1
            else:
                im += Fraction(body)
        else:
            re += Fraction(p)
    return Scalar(re, im)


class PuiseuxPoly:
    """Finite sum of terms c * t^q with Scalar coefficients and rational q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for q, c in terms.items():
                c = c if isinstance(c, Scalar) else _coerce(c)
                if c is None:
                    raise TypeError("coefficients must be Scalar-compatible")
                if not c.is_zero:
                    q = q if isinstance(q, Fraction) else Fraction(q)
                    prev = clean.get(q)
                    c = c if prev is None else prev + c
                    if c.is_zero:
                        clean.pop(q, None)
                    else:
                        clean[q] = c
        self.terms = clean

    @classmethod
    def const(cls, c):
        c = c if isinstance(c, Scalar) else _coerce(c)
        return cls({Fraction(0): c})

    @classmethod
    def t_power(cls, q, coeff=1):
        return cls({Fraction(q): coeff if isinstance(coeff, Scalar) else _coerce(coeff)})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, PuiseuxPoly):
            return self.terms == other.terms
        if isinstance(other, (Scalar, int, Fraction)):
            c = other if isinstance(other, Scalar) else _coerce(other)
            if c.is_zero:
                return not self.terms
            return self.terms == {Fraction(0): c}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for q, c in other.terms.items():
            prev = merged.get(q)
            s = c if prev is None else prev + c
            if s.is_zero:
                merged.pop(q, None)
            else:
                merged[q] = s
        out = object.__new__(PuiseuxPoly)
        out.terms = merged
        return out

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        out = object.__new__(PuiseuxPoly)
        out.terms = {q: -c for q, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            c = other if isinstance(other, Scalar) else _coerce(other)
            if c.is_zero:
                return PuiseuxPoly()
            out = object.__new__(PuiseuxPoly)
            out.terms = {q: coeff * c for q, coeff in self.terms.items()}
            return out
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        prod = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = q1 + q2
                c = c1 * c2
                prev = prod.get(q)
                s = c if prev is None else prev + c
                if s.is_zero:
                    prod.pop(q, None)
                else:
                    prod[q] = s
        out = object.__new__(PuiseuxPoly)
        out.terms = prod
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = PuiseuxPoly.const(ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def valuation(self):
        """Lowest exponent with nonzero coefficient; None for the zero poly."""
        if not self.terms:
            return None
        return min(self.terms)

    def leading_low_coeff(self):
        """Coefficient of the lowest-exponent term."""
        return self.terms[self.valuation()]

    def coeff(self, q):
        return self.terms.get(Fraction(q), ZERO)

    def eval_at_one(self):
        total = ZERO
        for c in self.terms.values():
            total = total + c
        return total

    def exact_div(self, other):
        """Exact division by another Puiseux polynomial.

        Raises ArithmeticError if the division leaves a remainder; used by
        fraction-free elimination, where exactness is guaranteed.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by zero PuiseuxPoly")
        if self.is_zero:
            return PuiseuxPoly()
        rem = self
        out = {}
        dv = other.valuation()
        dc = other.terms[dv]
        # In an exact division every quotient exponent is at most
        # maxdeg(num) - valuation(den); beyond that the division cannot close.
        q_bound = max(self.terms) - dv
        while rem.terms:
            rv = rem.valuation()
            q = rv - dv
            if q > q_bound:
                raise ArithmeticError("inexact Puiseux division")
            c = rem.terms[rv] / dc
            out[q] = c
            rem = rem - other * PuiseuxPoly({q: c})
        return PuiseuxPoly(out)

    def limit_at_zero(self):
        """Value at t -> 0: the constant term if no negative exponents,
        DIVERGES otherwise."""
        for q in self.terms:
            if q < 0:
                return DIVERGES
        return self.terms.get(Fraction(0), ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for q in sorted(self.terms):
            c = self.terms[q]
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            if q == 0:
                bits.append(cs)
            else:
                if q.denominator == 1 and q >= 0:
                    tp = "t" if q == 1 else f"t^{q}"
                else:
                    tp = f"t^({q})"
                bits.append(tp if cs == "1" else f"{cs}*{tp}")
        return " + ".join(bits)

    def __repr__(self):
        return f"PuiseuxPoly({self})"


def _coerce_poly(value):
    if isinstance(value, PuiseuxPoly):
        return value
    if isinstance(value, (Scalar, int, Fraction)):
        c = value if isinstance(value, Scalar) else _coerce(value)
        return PuiseuxPoly({Fraction(0): c}) if not c.is_zero else PuiseuxPoly()
    return None


POLY_ZERO = PuiseuxPoly()
POLY_ONE = PuiseuxPoly.const(ONE)
T = PuiseuxPoly.t_power(1)


def puiseux_limit_at_zero(p):
    """Limit of a Puiseux polynomial at t -> 0 (Scalar or DIVERGES)."""
    return p.limit_at_zero()


class PuiseuxFraction:
    """Quotient of Puiseux polynomials with a nonzero denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE):
        num = _coerce_poly(num)
        den = _coerce_poly(den)
        if den is None or num is None:
            raise TypeError("PuiseuxFraction needs Puiseux polynomials")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        # Strip the common monomial factor t^min to keep exponents small.
        if not num.is_zero:
            shift = min(num.valuation(), den.valuation())
            if shift != 0:
                num = PuiseuxPoly({q - shift: c for q, c in num.terms.items()})
                den = PuiseuxPoly({q - shift: c for q, c in den.terms.items()})
        self.num = num
        self.den = den

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, PuiseuxFraction):
            return (self.num * other.den) == (other.num * self.den)
        other_p = _coerce_poly(other)
        if other_p is None:
            return NotImplemented
        return self.num == other_p * self.den

    def __hash__(self):  # pragma: no cover - fractions rarely hashed
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce_fraction(other)
        if other is None:
            return NotImplemented
        return PuiseuxFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_fraction(other)
        if other is None:
            return NotImplemented
        return PuiseuxFraction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __rsub__(self, other):
        other = _coerce_fraction(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_fraction(other)
        if other is None:
            return NotImplemented
        return PuiseuxFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_fraction(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero:
            raise ZeroDivisionError("division by zero PuiseuxFraction")
        return PuiseuxFraction(self.num * other.den, self.den * other.num)

    def __neg__(self):
        return PuiseuxFraction(-self.num, self.den)

    def exact_div(self, other):
        """Field division (used by fraction-free elimination)."""
        return self / other

    def limit_at_zero(self):
        """Limit at t -> 0 using valuations: t^v * (a + ...)/(b + ...) with
        a, b nonzero tends to 0 (v > 0), a/b (v = 0) or diverges (v < 0)."""
        if self.num.is_zero:
            return ZERO
        v = self.num.valuation() - self.den.valuation()
        if v > 0:
            return ZERO
        if v < 0:
            return DIVERGES
        return self.num.leading_low_coeff() / self.den.leading_low_coeff()

    def __str__(self):
        if self.den == POLY_ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"PuiseuxFraction({self})"


def _coerce_fraction(value):
    if isinstance(value, PuiseuxFraction):
        return value
    p = _coerce_poly(value)
    if p is None:
        return None
    return PuiseuxFraction(p, POLY_ONE)
