"""Sparse multivariate polynomials over Q (exact) or C (complex double)."""

from __future__ import annotations

import hashlib
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from numbers import Number
from typing import Union

import numpy as np

from .exceptions import (
    DimensionMismatchError,
    InputError,
    PointNotOnVarietyError,
    SingularMatrixError,
)

Exponent = tuple[int, ...]
Scalar = Union[Fraction, complex]

DEFAULT_POINT_TOL = 1e-8


def as_scalar(c) -> Scalar:
    """Coerce a number into the scalar field.

    Integers and fractions stay exact; floats and complex numbers become
    complex doubles.
    """
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (bool, int, np.integer)):
        return Fraction(int(c))
    if isinstance(c, (float, complex, np.floating, np.complexfloating)):
        return complex(c)
    if isinstance(c, Number):
        return complex(c)
    raise TypeError(f"not a scalar: {c!r}")


def is_exact_scalar(c) -> bool:
    return isinstance(c, Fraction)


def to_complex_scalar(c) -> complex:
    return complex(c)


def exponent_degree(a: Exponent) -> int:
    return sum(a)


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def unit_exponent(nvars: int, i: int, power: int = 1) -> Exponent:
    e = [0] * nvars
    e[i] = power
    return tuple(e)


def exponents_of_degree(nvars: int, d: int) -> list[Exponent]:
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def exponents_up_to(nvars: int, k: int) -> list[Exponent]:
    """All exponents of total degree at most ``k``, by increasing degree."""
    out = []
    for d in range(k + 1):
        out.extend(exponents_of_degree(nvars, d))
    assert len(out) == comb(nvars + k, nvars)
    return out


class Polynomial:
    """Immutable sparse polynomial: a map from exponents to nonzero scalars."""

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping[Exponent, object], nvars: int):
        if nvars < 0:
            raise InputError("number of variables must be non-negative")
        clean = {}
        for e, c in terms.items():
            e = tuple(int(a) for a in e)
            if len(e) != nvars:
                raise DimensionMismatchError(
                    f"exponent {e} has length {len(e)}, expected {nvars}"
                )
            if any(a < 0 for a in e):
                raise InputError(f"negative exponent {e}")
            c = as_scalar(c)
            if c != 0:
                clean[e] = clean.get(e, 0) + c
                if clean[e] == 0:
                    del clean[e]
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> Polynomial:
        return cls({tuple(exp): coeff}, len(exp))

    @classmethod
    def variable(cls, i: int, nvars: int) -> Polynomial:
        return cls({unit_exponent(nvars, i): 1}, nvars)

    @property
    def terms(self) -> Mapping[Exponent, Scalar]:
        return self._terms

    @property
    def nvars(self) -> int:
        return self._nvars

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_exact(self) -> bool:
        return all(is_exact_scalar(c) for c in self._terms.values())

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def valuation(self) -> int:
        """Lowest total degree of a term (the order of vanishing at 0)."""
        if not self._terms:
            raise InputError("valuation of the zero polynomial")
        return min(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def coefficient(self, exp: Exponent) -> Scalar:
        return self._terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Scalar:
        return self.coefficient((0,) * self._nvars)

    def max_abs_coefficient(self) -> float:
        return max((abs(complex(c)) for c in self._terms.values()), default=0.0)

    def norm(self) -> float:
        return float(np.sqrt(sum(abs(complex(c)) ** 2 for c in self._terms.values())))

    def to_complex(self) -> Polynomial:
        return Polynomial({e: complex(c) for e, c in self._terms.items()}, self._nvars)

    def map_coefficients(self, fn) -> Polynomial:
        return Polynomial({e: fn(c) for e, c in self._terms.items()}, self._nvars)

    # arithmetic
    def _check(self, other: Polynomial):
        if other._nvars != self._nvars:
            raise DimensionMismatchError(
                f"polynomials in {self._nvars} and {other._nvars} variables"
            )

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self._nvars)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(terms, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_scalar(other)
            return Polynomial({e: c * v for e, v in self._terms.items()}, self._nvars)
        self._check(other)
        terms: dict[Exponent, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = add_exponents(e1, e2)
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(terms, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InputError("negative power")
        result = Polynomial.constant(1, self._nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        if isinstance(other, Number):
            return self == Polynomial.constant(other, self._nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from .io import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"

    def __call__(self, point: Sequence):
        """Evaluate at a point."""
        if len(point) != self._nvars:
            raise DimensionMismatchError("point has wrong number of coordinates")
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, a in zip(point, e):
                if a:
                    v = v * x**a
            total = total + v
        return total

    def compose(self, images: Sequence[Polynomial]) -> Polynomial:
        """Substitute ``x_i -> images[i]``."""
        if len(images) != self._nvars:
            raise DimensionMismatchError("need one image per variable")
        if not images:
            return self
        target = images[0].nvars
        powers: list[dict[int, Polynomial]] = [{} for _ in images]

        def power(i, a):
            if a not in powers[i]:
                powers[i][a] = images[i] ** a
            return powers[i][a]

        result = Polynomial.zero(target)
        for e, c in self._terms.items():
            term = Polynomial.constant(c, target)
            for i, a in enumerate(e):
                if a:
                    term = term * power(i, a)
            result = result + term
        return result


def truncate(f: Polynomial, k: int) -> Polynomial:
    """Keep exactly the terms of total degree at most ``k``."""
    return Polynomial({e: c for e, c in f.terms.items() if sum(e) <= k}, f.nvars)


def _point_scalars(y: Sequence) -> list[Scalar]:
    return [as_scalar(c) for c in y]


def translate_to_point(
    f: Polynomial, y: Sequence, point_tol: float = DEFAULT_POINT_TOL, check: bool = False
) -> Polynomial:
    """Return ``f(x + y)``.

    In exact mode the result is exact. Otherwise a constant term whose
    magnitude is at most ``point_tol`` times the largest coefficient of ``f``
    is zeroed; with ``check=True`` a larger constant raises
    :class:`PointNotOnVarietyError`.
    """
    if len(y) != f.nvars:
        raise DimensionMismatchError(
            f"point has {len(y)} coordinates, polynomial has {f.nvars} variables"
        )
    y = _point_scalars(y)
    n = f.nvars
    shifted = f.compose(
        [Polynomial.variable(i, n) + Polynomial.constant(y[i], n) for i in range(n)]
    )
    exact = f.is_exact and all(is_exact_scalar(c) for c in y)
    c0 = shifted.constant_term()
    if c0 == 0:
        return shifted
    if exact:
        if check:
            raise PointNotOnVarietyError(
                f"generator does not vanish at the point (value {c0})"
            )
        return shifted
    scale = f.max_abs_coefficient()
    if abs(complex(c0)) <= point_tol * scale:
        terms = dict(shifted.terms)
        del terms[(0,) * n]
        return Polynomial(terms, n)
    if check:
        raise PointNotOnVarietyError(
            f"generator does not vanish at the point: |value| = {abs(complex(c0)):.3e} "
            f"exceeds {point_tol:g} * {scale:.3e}"
        )
    return shifted


@dataclass(frozen=True)
class Ideal:
    """A finitely generated polynomial ideal."""

    generators: tuple[Polynomial, ...]
    nvars: int

    def __init__(self, generators: Iterable[Polynomial], nvars: int | None = None):
        gens = tuple(generators)
        if not gens:
            raise InputError("an ideal needs at least one generator")
        if nvars is None:
            nvars = gens[0].nvars
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generator is not a Polynomial: {g!r}")
            if g.nvars != nvars:
                raise DimensionMismatchError(
                    f"generator in {g.nvars} variables, ideal has {nvars}"
                )
            if g.is_zero():
                raise InputError("zero generator")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "nvars", nvars)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def is_exact(self) -> bool:
        return all(g.is_exact for g in self.generators)

    def max_degree(self) -> int:
        return max(g.degree() for g in self.generators)

    def to_complex(self) -> Ideal:
        return Ideal([g.to_complex() for g in self.generators], self.nvars)

    def fingerprint(self) -> str:
        from .io import format_polynomial

        text = "\n".join(sorted(format_polynomial(g) for g in self.generators))
        return hashlib.sha256(f"{self.nvars}\n{text}".encode()).hexdigest()[:16]

    def translate(self, y: Sequence, point_tol: float = DEFAULT_POINT_TOL) -> Ideal:
        """Move ``y`` to the origin, rejecting points off the variety."""
        return Ideal(
            [translate_to_point(g, y, point_tol, check=True) for g in self.generators],
            self.nvars,
        )

    def with_generators(self, extra: Iterable[Polynomial]) -> Ideal:
        return Ideal(list(self.generators) + list(extra), self.nvars)


def _exact_rank(rows: list[list[Fraction]]) -> int:
    from .linalg import exact_rank

    return exact_rank([dict(enumerate(r)) for r in rows])


def apply_linear_change(ideal: Ideal, matrix) -> Ideal:
    """Compose every generator with ``x -> M x``; the origin stays fixed."""
    n = ideal.nvars
    rows = [list(r) for r in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatchError(f"change of coordinates must be {n}x{n}")
    rows = [[as_scalar(c) for c in r] for r in rows]
    exact = all(is_exact_scalar(c) for r in rows for c in r)
    if exact:
        if _exact_rank(rows) < n:
            raise SingularMatrixError("change of coordinates is singular")
    else:
        m = np.array([[complex(c) for c in r] for r in rows])
        if n and np.linalg.matrix_rank(m) < n:
            raise SingularMatrixError("change of coordinates is singular")
    images = [
        Polynomial({unit_exponent(n, j): rows[i][j] for j in range(n)}, n)
        for i in range(n)
    ]
    return Ideal([g.compose(images) for g in ideal.generators], n)
