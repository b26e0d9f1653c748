"""Multivariate polynomials over the Gaussian rationals.

Used for generic-vector computations: the multiplication operator of a
symbolic vector x_1*e_1 + ... + x_n*e_n has entries in Q(i)[x_1..x_n], and
characteristic sequences are read off from ranks of its powers over the
fraction field.
"""

from __future__ import annotations

from .scalars import Scalar, ZERO, ONE, _coerce


class MPoly:
    """Polynomial in nvars commuting variables, coefficients Scalar."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = c if isinstance(c, Scalar) else _coerce(c)
                if c is None or len(mono) != nvars:
                    raise TypeError("bad MPoly term")
                if not c.is_zero:
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): ONE})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else _coerce(other)
            if c.is_zero:
                return not self.terms
            return self.terms == {(0,) * self.nvars: c}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            prev = merged.get(mono)
            s = c if prev is None else prev + c
            if s.is_zero:
                merged.pop(mono, None)
            else:
                merged[mono] = s
        return self._raw(merged)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else _coerce(other)
            if c.is_zero:
                return self._raw({})
            return self._raw({m: coeff * c for m, coeff in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        prod = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                prev = prod.get(mono)
                s = c if prev is None else prev + c
                if s.is_zero:
                    prod.pop(mono, None)
                else:
                    prod[mono] = s
        return self._raw(prod)

    __rmul__ = __mul__

    def _raw(self, terms):
        out = object.__new__(MPoly)
        out.nvars = self.nvars
        out.terms = terms
        return out

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (Scalar, int)):
            c = other if isinstance(other, Scalar) else _coerce(other)
            return self._raw({(0,) * self.nvars: c} if not c.is_zero else {})
        return None

    def lead(self):
        """Lex-leading (monomial, coefficient) pair."""
        mono = max(self.terms)
        return mono, self.terms[mono]

    def exact_div(self, other):
        """Exact division; raises ArithmeticError on a remainder.

        Lex order is multiplicative, so for an exact quotient the leading
        monomial of the remainder is always divisible by other's.
        """
        if other.is_zero:
            raise ZeroDivisionError("division by zero MPoly")
        if self.is_zero:
            return self._raw({})
        g_mono, g_coeff = other.lead()
        rem = self
        out = {}
        while rem.terms:
            r_mono, r_coeff = rem.lead()
            q_mono = tuple(a - b for a, b in zip(r_mono, g_mono))
            if any(e < 0 for e in q_mono):
                raise ArithmeticError("inexact MPoly division")
            q_coeff = r_coeff / g_coeff
            out[q_mono] = q_coeff
            rem = rem - other * self._raw({q_mono: q_coeff})
        return self._raw(out)

    def eval(self, values):
        """Evaluate at a tuple of Scalars."""
        total = ZERO
        for mono, c in self.terms.items():
            term = c
            for e, v in zip(mono, values):
                for _ in range(e):
                    term = term * v
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, reverse=True):
            c = self.terms[mono]
            vars_part = "*".join(
                f"x{i+1}" if e == 1 else f"x{i+1}^{e}"
                for i, e in enumerate(mono)
                if e
            )
            cs = str(c)
            if vars_part:
                bits.append(vars_part if cs == "1" else f"{cs}*{vars_part}")
            else:
                bits.append(cs)
        return " + ".join(bits)

    def __repr__(self):
        return f"MPoly({self})"
