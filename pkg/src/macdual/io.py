"""Text format for polynomial systems and JSON encoding of results.

System file layout::

    # comment
    vars x y z
    mode exact            (optional: exact | complex)
    point 0 0 0           (optional)
    x^2 - z^3
    y - z^2

Coefficients are decimals, rationals ``p/q`` or complex numbers written
``(a+bi)``; factors are joined with ``*``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ParseError
from .poly import Ideal, Polynomial, Scalar, is_exact_scalar

EXACT_MODE = "exact"
COMPLEX_MODE = "complex"

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")
_INT = re.compile(r"\d+")


def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def _parse_real(text: str) -> Fraction:
    return Fraction(text)


def parse_complex_literal(body: str, line=None, column=None) -> Scalar:
    """Contents of a parenthesized coefficient, e.g. ``0+1i`` or ``1/2``."""
    s = body.replace(" ", "")
    if not s:
        raise ParseError("empty parenthesized coefficient", line, column)
    try:
        if "i" not in s:
            return Fraction(s)
        s = re.sub(r"(^|[+-])i", r"\g<1>1i", s)
        return complex(s.replace("i", "j"))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed coefficient ({body})", line, column) from exc


def parse_scalar(text: str, line=None, column=None) -> Scalar:
    """A standalone coefficient such as ``-3/4``, ``2.5`` or ``(1-2i)``."""
    s = text.strip()
    sign = 1
    if s[:1] in "+-" and not s.startswith("("):
        sign = -1 if s[0] == "-" else 1
        s = s[1:].strip()
    if s.startswith("(") and s.endswith(")"):
        return sign * parse_complex_literal(s[1:-1], line, column)
    try:
        return sign * Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed coefficient {text!r}", line, column) from exc


class _PolyParser:
    def __init__(self, text: str, names: Sequence[str], line: int | None):
        self.text = text
        self.pos = 0
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)
        self.line = line
        self.saw_complex = False

    def error(self, msg):
        raise ParseError(msg, self.line, self.pos + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Polynomial:
        terms: dict = {}
        first = True
        while True:
            c = self.peek()
            if not c:
                if first:
                    self.error("empty polynomial")
                break
            sign = 1
            if c in "+-":
                sign = -1 if c == "-" else 1
                self.pos += 1
            elif not first:
                self.error(f"expected '+' or '-', found {c!r}")
            coeff, exp = self.term()
            terms[exp] = terms.get(exp, 0) + sign * coeff
            first = False
        return Polynomial(terms, self.nvars)

    def term(self):
        coeff: Scalar = Fraction(1)
        exp = [0] * self.nvars
        while True:
            c = self.peek()
            start = self.pos
            if c == "(":
                close = self.text.find(")", self.pos)
                if close < 0:
                    self.error("unbalanced parenthesis")
                val = parse_complex_literal(self.text[self.pos + 1:close], self.line, start + 1)
                if not is_exact_scalar(val):
                    self.saw_complex = True
                coeff = coeff * val
                self.pos = close + 1
            elif c.isdigit() or c == ".":
                m = _NUMBER.match(self.text, self.pos)
                if not m:
                    self.error("malformed number")
                self.pos = m.end()
                num = Fraction(m.group(0))
                if self.peek() == "/":
                    self.pos += 1
                    self.skip()
                    m2 = _NUMBER.match(self.text, self.pos)
                    if not m2:
                        self.error("malformed rational denominator")
                    self.pos = m2.end()
                    den = Fraction(m2.group(0))
                    if den == 0:
                        self.error("zero denominator")
                    num = num / den
                coeff = coeff * num
            elif c.isalpha() or c == "_":
                m = _NAME.match(self.text, self.pos)
                name = m.group(0)
                if name not in self.index:
                    self.error(f"unknown variable {name!r}")
                self.pos = m.end()
                power = 1
                if self.peek() == "^":
                    self.pos += 1
                    self.skip()
                    m2 = _INT.match(self.text, self.pos)
                    if not m2:
                        self.error("exponent must be a non-negative integer")
                    power = int(m2.group(0))
                    self.pos = m2.end()
                exp[self.index[name]] += power
            else:
                self.error(f"unexpected character {c!r}" if c else "unexpected end of term")
            if self.peek() == "*":
                self.pos += 1
                continue
            break
        return coeff, tuple(exp)


def parse_polynomial(text: str, names: Sequence[str], line: int | None = None) -> Polynomial:
    return _PolyParser(text, names, line).parse()


_POINT_TOKEN = re.compile(r"\([^)]*\)|[^\s()]+")


@dataclass
class SystemFile:
    names: list[str]
    ideal: Ideal
    point: list[Scalar] | None
    mode: str

    @property
    def nvars(self) -> int:
        return len(self.names)


def _coerce_mode(values, mode):
    if mode == COMPLEX_MODE:
        return [complex(v) for v in values]
    return list(values)


def parse_system(text: str, mode: str | None = None) -> SystemFile:
    """Parse a system file. ``mode`` overrides a ``mode`` line in the file."""
    names = None
    file_mode = None
    point = None
    gens = []
    saw_complex = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "vars":
            if names is not None:
                raise ParseError("duplicate 'vars' line", lineno, 1)
            names = rest.split()
            if not names:
                raise ParseError("no variables declared", lineno, 1)
            for n in names:
                if not _NAME.fullmatch(n):
                    raise ParseError(f"bad variable name {n!r}", lineno, 1)
            if len(set(names)) != len(names):
                raise ParseError("variable names must be unique", lineno, 1)
            continue
        if names is None:
            raise ParseError("first line must declare variables: 'vars x y ...'", lineno, 1)
        if head == "mode":
            file_mode = rest.strip()
            if file_mode not in (EXACT_MODE, COMPLEX_MODE):
                raise ParseError(f"unknown mode {file_mode!r}", lineno, 6)
            continue
        if head == "point":
            if point is not None:
                raise ParseError("duplicate 'point' line", lineno, 1)
            toks = [(m.group(0), m.start()) for m in _POINT_TOKEN.finditer(rest)]
            point = [parse_scalar(t, lineno, c + 7) for t, c in toks]
            if len(point) != len(names):
                raise ParseError(
                    f"point has {len(point)} coordinates, expected {len(names)}", lineno, 1
                )
            saw_complex |= any(not is_exact_scalar(c) for c in point)
            continue
        parser = _PolyParser(raw.split("#", 1)[0], names, lineno)
        f = parser.parse()
        saw_complex |= parser.saw_complex
        if f.is_zero():
            raise ParseError("zero generator", lineno, 1)
        gens.append(f)
    if names is None:
        raise ParseError("missing 'vars' line")
    if not gens:
        raise ParseError("no generators")
    mode = mode or file_mode or (COMPLEX_MODE if saw_complex else EXACT_MODE)
    if mode == EXACT_MODE and saw_complex:
        raise ParseError("complex coefficients require mode 'complex'")
    if mode == COMPLEX_MODE:
        gens = [g.to_complex() for g in gens]
        if point is not None:
            point = _coerce_mode(point, mode)
    return SystemFile(names, Ideal(gens, len(names)), point, mode)


# formatting

def format_scalar(c: Scalar) -> str:
    if is_exact_scalar(c):
        return str(c)
    c = complex(c)
    return f"({c.real!r}{'+' if c.imag >= 0 or c.imag != c.imag else '-'}{abs(c.imag)!r}i)"


def _monomial_text(e, names, sep="*"):
    parts = []
    for n, a in zip(names, e):
        if a == 1:
            parts.append(n)
        elif a:
            parts.append(f"{n}^{a}")
    return sep.join(parts)


def _sorted_terms(terms):
    return sorted(terms.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0])))


def format_polynomial(f: Polynomial, names: Sequence[str] | None = None) -> str:
    """Render in the input grammar; exact coefficients round-trip."""
    names = list(names) if names is not None else default_names(f.nvars)
    if f.is_zero():
        return "0"
    out = []
    for e, c in _sorted_terms(f.terms):
        mono = _monomial_text(e, names)
        if is_exact_scalar(c):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
        else:
            sign = "+"
            body = format_scalar(c) + (f"*{mono}" if mono else "")
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def format_functional(q, names: Sequence[str] | None = None) -> str:
    """Human readable functional, e.g. ``D[1] + 2*D[x*z]``."""
    names = list(names) if names is not None else default_names(q.nvars)
    if q.is_zero():
        return "0"
    parts = []
    for e, c in _sorted_terms(q.terms):
        mono = _monomial_text(e, names) or "1"
        if is_exact_scalar(c) and c == 1:
            parts.append(f"D[{mono}]")
        else:
            parts.append(f"{format_scalar(c)}*D[{mono}]")
    return " + ".join(parts)


# JSON encoding

def scalar_to_json(c: Scalar) -> dict:
    if is_exact_scalar(c):
        return {"re": str(c), "im": "0"}
    c = complex(c)
    return {"re": c.real, "im": c.imag}


def scalar_from_json(obj: dict) -> Scalar:
    re_, im = obj["re"], obj.get("im", 0)
    if isinstance(re_, str) and isinstance(im, str):
        if Fraction(im) != 0:
            raise ParseError("exact scalars must have zero imaginary part")
        return Fraction(re_)
    return complex(float(re_), float(im))


def functional_to_json(q) -> dict:
    terms = [
        {"exp": list(e), **scalar_to_json(c)} for e, c in _sorted_terms(q.terms)
    ]
    return {"terms": terms, "order": q.order}


def functional_from_json(obj: dict, nvars: int):
    from .dual import DualFunctional

    return DualFunctional(
        {tuple(t["exp"]): scalar_from_json(t) for t in obj["terms"]}, nvars
    )


def order_to_json(order, names) -> dict:
    return {
        "kind": order.kind,
        "eliminated": [names[i] for i in sorted(order.eliminated)],
        "permutation": [names[i] for i in order.permutation],
    }


def space_to_json(space, names: Sequence[str]) -> dict:
    out = {
        "k": space.k,
        "dim": space.dim,
        "basis": [functional_to_json(q) for q in space.basis],
        "initial_support": [list(e) for e in space.initial_support()],
        "complete": space.complete,
        "order": order_to_json(space.order, names),
    }
    if getattr(space, "lower_bound_only", False):
        out["lower_bound_only"] = True
    return out


def eliminating_to_json(space, names: Sequence[str]) -> dict:
    out = space_to_json(space, names)
    out.update(
        {
            "A": [names[i] for i in space.eliminated],
            "d": space.d,
            "complete": space.complete,
            "cap_used": space.cap_used,
        }
    )
    return out


def m2_snippet(basis, names: Sequence[str], exact: bool) -> str:
    """Dual basis written as polynomials, the convention of Macaulay2's dual
    space tools (monomial x^a stands for the functional d^a)."""
    ring = "QQ" if exact else "CC"
    polys = []
    for q in basis:
        from .poly import Polynomial

        polys.append(format_polynomial(Polynomial(dict(q.terms), q.nvars), names))
    polys = [p.replace("(", "(").replace("i)", "*ii)") for p in polys]
    return f"R = {ring}[{','.join(names)}];\nL = {{{', '.join(polys)}}};"
