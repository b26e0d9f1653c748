"""Parsers and serializers for the flat text formats.

Algebra files::

    # comment
    dim 4
    field Qi            # or Q
    bilinear            # optional: disable symmetry completion
    e1*e1 = e2
    e4*e4 = -1*e2 - e3

Family files::

    dim 4
    f(e1) = t*e1
    f(e4) = i*t^(3/2)*e4 + 1/2*e2

Deformation direction files::

    dim 4
    deg 1:
    e2*e4 = e3

Omitted products are zero; omitted family images fix the basis vector.
All diagnostics carry 1-based line numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .contractions import ContractionFamily
from .errors import ParseError
from .scalars import Scalar, parse_scalar
from .tensors import StructureTensor


def _strip_comment(line):
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def _split_terms(expr, line_no):
    """Split a sum into signed terms at top-level + and -."""
    terms = []
    depth = 0
    current = ""
    sign = 1
    pending_sign = 1
    for ch in expr:
        if ch == "(":
            depth += 1
            current += ch
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(line_no, "unbalanced parentheses")
            current += ch
        elif ch in "+-" and depth == 0 and current.strip() and current.rstrip()[-1] not in "*/^(":
            terms.append((pending_sign, current.strip()))
            current = ""
            pending_sign = 1 if ch == "+" else -1
        elif ch in "+-" and depth == 0 and not current.strip():
            pending_sign *= 1 if ch == "+" else -1
        else:
            current += ch
    if depth != 0:
        raise ParseError(line_no, "unbalanced parentheses")
    if current.strip():
        terms.append((pending_sign, current.strip()))
    return terms


def _split_factors(term, line_no):
    factors = []
    depth = 0
    current = ""
    for ch in term:
        if ch == "(":
            depth += 1
            current += ch
        elif ch == ")":
            depth -= 1
            current += ch
        elif ch == "*" and depth == 0:
            if current.strip():
                factors.append(current.strip())
            current = ""
        else:
            current += ch
    if current.strip():
        factors.append(current.strip())
    if not factors:
        raise ParseError(line_no, f"empty term in {term!r}")
    return factors


def _parse_basis_symbol(text, n, line_no):
    t = text.strip()
    if not (len(t) >= 2 and t[0] == "e" and t[1:].isdigit()):
        return None
    k = int(t[1:])
    if not 1 <= k <= n:
        raise ParseError(line_no, f"basis index out of range in {text!r}")
    return k


def _parse_t_power(text, line_no):
    t = text.strip()
    if t == "t":
        return Fraction(1)
    if t.startswith("t^"):
        body = t[2:]
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        try:
            return Fraction(body)
        except (ValueError, ZeroDivisionError):
            raise ParseError(line_no, f"bad exponent in {text!r}")
    return None


def _parse_scalar_factor(text, line_no):
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    try:
        return parse_scalar(t)
    except ValueError:
        raise ParseError(line_no, f"bad scalar literal {text!r}")


def _parse_vector_sum(expr, n, line_no, with_t=False):
    """Parse a sum of terms into either {k: Scalar} (with_t=False) or
    a list of (Scalar, Fraction exponent, k)."""
    expr = expr.strip()
    plain = {}
    triples = []
    if expr == "0":
        return triples if with_t else plain
    for sign, term in _split_terms(expr, line_no):
        factors = _split_factors(term, line_no)
        coeff = Scalar(sign)
        exponent = Fraction(0)
        target = None
        for factor in factors:
            k = _parse_basis_symbol(factor, n, line_no)
            if k is not None:
                if target is not None:
                    raise ParseError(line_no, f"two basis symbols in {term!r}")
                target = k
                continue
            q = _parse_t_power(factor, line_no)
            if q is not None:
                if not with_t:
                    raise ParseError(line_no, "t-powers are not allowed here")
                exponent += q
                continue
            coeff = coeff * _parse_scalar_factor(factor, line_no)
        if target is None:
            raise ParseError(line_no, f"term {term!r} has no basis vector")
        if with_t:
            triples.append((coeff, exponent, target))
        else:
            plain[target] = plain.get(target, Scalar(0)) + coeff
    return triples if with_t else plain


def _parse_product_key(lhs, n, line_no):
    parts = lhs.split("*")
    if len(parts) != 2:
        raise ParseError(line_no, f"product must look like ei*ej, got {lhs!r}")
    i = _parse_basis_symbol(parts[0], n, line_no)
    j = _parse_basis_symbol(parts[1], n, line_no)
    if i is None or j is None:
        raise ParseError(line_no, f"product must look like ei*ej, got {lhs!r}")
    return i, j


def parse_algebra(text):
    """Parse an algebra file into a StructureTensor."""
    n = None
    field_tag = "Qi"
    bilinear = False
    products = {}
    product_lines = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line.startswith("dim"):
            try:
                n = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError(line_no, "bad dim header")
            continue
        if line.startswith("field"):
            tag = line.split()[1] if len(line.split()) > 1 else ""
            if tag not in ("Q", "Qi"):
                raise ParseError(line_no, f"field must be Q or Qi, got {tag!r}")
            field_tag = tag
            continue
        if line == "bilinear":
            bilinear = True
            continue
        if n is None:
            raise ParseError(line_no, "dim header must precede products")
        if "=" not in line:
            raise ParseError(line_no, f"expected a product line, got {line!r}")
        lhs, rhs = line.split("=", 1)
        i, j = _parse_product_key(lhs.strip(), n, line_no)
        value = _parse_vector_sum(rhs, n, line_no, with_t=False)
        keys = [(i, j)] if bilinear else [(i, j), (j, i)]
        for key in keys:
            if key in product_lines and product_lines[key] != value:
                raise ParseError(
                    line_no, f"contradictory product for e{key[0]}*e{key[1]}"
                )
            product_lines[key] = value
        products[(i, j)] = value
    if n is None:
        raise ParseError(1, "missing dim header")
    try:
        return StructureTensor.from_products(
            n, products, field_tag=field_tag, bilinear=bilinear
        )
    except ValueError as exc:
        raise ParseError(1, str(exc))


def parse_family(text):
    """Parse a family file into a ContractionFamily."""
    n = None
    images = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line.startswith("dim"):
            try:
                n = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError(line_no, "bad dim header")
            continue
        if n is None:
            raise ParseError(line_no, "dim header must precede images")
        if not line.startswith("f(") or "=" not in line:
            raise ParseError(line_no, f"expected f(ei) = ..., got {line!r}")
        lhs, rhs = line.split("=", 1)
        inner = lhs.strip()
        if not (inner.startswith("f(") and inner.endswith(")")):
            raise ParseError(line_no, f"expected f(ei) on the left, got {lhs!r}")
        i = _parse_basis_symbol(inner[2:-1], n, line_no)
        if i is None:
            raise ParseError(line_no, f"expected f(ei) on the left, got {lhs!r}")
        if i in images:
            raise ParseError(line_no, f"duplicate image for e{i}")
        images[i] = _parse_vector_sum(rhs, n, line_no, with_t=True)
    if n is None:
        raise ParseError(1, "missing dim header")
    return ContractionFamily.from_images(n, images)


def parse_direction(text):
    """Parse a deformation-direction file into a list of symmetric tensors
    ordered by degree block."""
    n = None
    blocks = {}
    current = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line.startswith("dim"):
            try:
                n = int(line.split()[1])
            except (IndexError, ValueError):
                raise ParseError(line_no, "bad dim header")
            continue
        if line.startswith("deg"):
            body = line[3:].strip()
            if body.endswith(":"):
                body = body[:-1].strip()
            try:
                current = int(body)
            except ValueError:
                raise ParseError(line_no, f"bad degree header {line!r}")
            if current < 1:
                raise ParseError(line_no, "degrees start at 1")
            blocks.setdefault(current, {})
            continue
        if n is None:
            raise ParseError(line_no, "dim header must precede products")
        if current is None:
            raise ParseError(line_no, "product line outside a deg block")
        if "=" not in line:
            raise ParseError(line_no, f"expected a product line, got {line!r}")
        lhs, rhs = line.split("=", 1)
        i, j = _parse_product_key(lhs.strip(), n, line_no)
        blocks[current][(i, j)] = _parse_vector_sum(rhs, n, line_no, with_t=False)
    if n is None:
        raise ParseError(1, "missing dim header")
    if not blocks:
        return []
    top = max(blocks)
    return [
        StructureTensor.from_products(n, blocks.get(d, {})) for d in range(1, top + 1)
    ]


def serialize_algebra(phi, header_comment=None):
    lines = []
    if header_comment:
        lines.append(f"# {header_comment}")
    lines.append(f"dim {phi.n}")
    lines.append(f"field {phi.field_tag}")
    if not phi.symmetric:
        lines.append("bilinear")
    for (i, j), v in phi.products().items():
        terms = []
        for k, c in enumerate(v):
            if c.is_zero:
                continue
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            terms.append(f"e{k+1}" if cs == "1" else f"{cs}*e{k+1}")
        lines.append(f"e{i}*e{j} = " + " + ".join(terms))
    return "\n".join(lines) + "\n"


def serialize_family(fam, header_comment=None):
    lines = []
    if header_comment:
        lines.append(f"# {header_comment}")
    lines.append(f"dim {fam.n}")
    lines.extend(fam.image_lines())
    return "\n".join(lines) + "\n"


def serialize_direction(directions, header_comment=None):
    lines = []
    if header_comment:
        lines.append(f"# {header_comment}")
    if not directions:
        raise ValueError("no directions to serialize")
    lines.append(f"dim {directions[0].n}")
    for d, mu in enumerate(directions, start=1):
        lines.append(f"deg {d}:")
        body = serialize_algebra(mu).splitlines()
        lines.extend(l for l in body if "*" in l and "=" in l)
    return "\n".join(lines) + "\n"
